#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "polystab/consensus_face.hpp"
#include "polystab/errors.hpp"
#include "polystab/poset.hpp"
#include "polystab/stochastic.hpp"

using namespace testing;

namespace {

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer pow_int(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

Integer as_integer(std::uint64_t v) { return Integer(std::to_string(v)); }

// Orbit length of a consensus face under x -> P x for a permutation matrix P.
std::size_t permutation_orbit(const Matrix& p, const ConsensusFace& face) {
  ConsensusFace current = face;
  for (std::size_t len = 1;; ++len) {
    const auto next = locate_consensus(polystab::apply(p, consensus_interior_point(current)));
    REQUIRE(next.has_value());
    current = *next;
    if (current == face) return len;
  }
}

}  // namespace

TEST_CASE("closed-form bounds") {
  CHECK(pstar(3) == 3);
  CHECK(pstar(2) == 1);
  CHECK(pstar(6) == 105);
  CHECK(paz_bound(3) == 6);
  CHECK(paz_bound(2) == 1);
  CHECK(face_count(3, 1) == 3);
  CHECK(face_count(3, 2) == 3);
  CHECK(face_count(4, 1) == 7);
  CHECK(face_count(4, 2) == 12);
  CHECK(face_count(4, 3) == 6);
  CHECK(dstar(3) == 2);
  CHECK(dstar(7) == 3);
  CHECK_THROWS_AS(pstar(1), InputError);
  CHECK_THROWS_AS(paz_bound(0), InputError);
  CHECK_THROWS_AS(face_count(4, 0), InputError);
  CHECK_THROWS_AS(face_count(4, 4), InputError);
  CHECK_THROWS_AS(consensus_ball(1), InputError);
  CHECK_THROWS_AS(pstar(80), InputError);

  const auto b = consensus_bounds(3);
  CHECK(b.pstar == 3);
  CHECK(b.paz_b == 6);
  CHECK(b.dstar == 2);
  CHECK(b.level_counts == std::map<std::size_t, std::uint64_t>{{1, 3}, {2, 3}});
}

TEST_CASE("closed forms match big-integer evaluation and each other") {
  for (unsigned long n = 2; n <= 30; ++n) {
    Integer sum = 0;
    for (unsigned long d = 1; d < n; ++d) {
      const Integer f = binomial(n, d - 1) * (pow_int(2, n - d) - 1);
      CHECK(as_integer(face_count(n, d)) == f);
      sum += f;
    }
    CHECK(2 * sum == pow_int(3, n) - pow_int(2, n + 1) + 1);
    CHECK(as_integer(paz_bound(n)) == sum);
    const unsigned long k = n / 3;
    CHECK(as_integer(pstar(n)) == binomial(n, k) * (pow_int(2, n - k - 1) - 1));
    CHECK(pstar(n) == face_count(n, dstar(n)));
    // p* is the largest level.
    for (unsigned long d = 1; d < n; ++d) CHECK(face_count(n, d) <= pstar(n));
    CHECK(pstar(n) <= paz_bound(n));
    const auto bounds = consensus_bounds(n);
    std::uint64_t levels = 0;
    for (const auto& [d, c] : bounds.level_counts) levels += c;
    CHECK(levels == bounds.paz_b);
  }
}

TEST_CASE("ratio p*/B approaches 3/(2 sqrt(pi n))") {
  for (std::size_t n = 9; n <= 12; ++n) {
    const double ratio = static_cast<double>(pstar(n)) / static_cast<double>(paz_bound(n));
    const double asymptotic = 3.0 / (2.0 * std::sqrt(std::numbers::pi * static_cast<double>(n)));
    CHECK(std::abs(ratio / asymptotic - 1.0) <= 0.2);
  }
}

TEST_CASE("enumeration census matches the closed forms") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto faces = enumerate_double_faces(consensus_ball(n));
    CHECK(faces.size() == paz_bound(n));
    std::map<std::size_t, std::uint64_t> census;
    for (const auto& f : faces) ++census[f.dim];
    CHECK(census == consensus_bounds(n).level_counts);
  }
  CHECK(enumerate_double_faces(consensus_ball(2)).size() == paz_bound(2));
  CHECK(width(build_poset(consensus_ball(2)).order).size == pstar(2));
}

TEST_CASE("decide_consensus") {
  const auto avg = decide_consensus(MatrixSet({averaging(3)}));
  CHECK(avg.report.verdict == Verdict::AllContracting);
  CHECK(avg.summary.find("consensus") != std::string::npos);
  CHECK_FALSE(avg.provenance.empty());

  const auto id = decide_consensus(MatrixSet({Matrix::identity(3)}));
  CHECK(id.report.verdict == Verdict::Noncontracting);
  CHECK(id.report.min_period == 1);
  CHECK(id.summary.find("p* = 3") != std::string::npos);

  for (std::size_t n = 2; n <= 6; ++n) {
    const auto p = cyclic_permutation(n);
    std::size_t shortest = SIZE_MAX;
    for (const auto& f : enumerate_consensus_faces(n)) shortest = std::min(shortest, permutation_orbit(p, f));
    const auto report = decide_consensus(MatrixSet({p})).report;
    CHECK(report.verdict == Verdict::Noncontracting);
    CHECK(report.min_period == shortest);
    CHECK(report.min_period <= pstar(n));
    CHECK(report.bound_pstar == pstar(n));
  }

  const MatrixSet bad({averaging(3), mat({{"1", "1", "-1"}, {"0", "1", "0"}, {"0", "0", "1"}})}, {"J", "B"});
  try {
    decide_consensus(bad);
    FAIL("expected an input error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("'B'") != std::string::npos);
  }
}

TEST_CASE("two-matrix sample: consensus verdict is frozen") {
  // Agreed with the brute-force oracle at max period 3; see test_oracle.
  const auto d = decide_consensus(sample_set());
  CHECK(d.report.verdict == Verdict::AllContracting);
  CHECK(d.report.witness_word.empty());
}

TEST_CASE("ergodicity coefficient") {
  CHECK(ergodicity_coefficient(averaging(4)) == 0);
  CHECK(ergodicity_coefficient(Matrix::identity(3)) == 1);
  // Rows 1 and 2 overlap in 1/2, but rows 2 and 3 have disjoint supports.
  CHECK(ergodicity_coefficient(sample_a1()) == 1);
  CHECK(ergodicity_coefficient(mat_mul(sample_a1(), sample_a1())) == R("1/4"));
  CHECK_THROWS_AS(ergodicity_coefficient(mat({{"2", "-1"}, {"0", "1"}})), InputError);

  // Direct pairwise definition.
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng() % 4;
    const auto p = random_stochastic(rng, n);
    Rational best = 2;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += std::min(p(i, k), p(j, k));
        best = std::min(best, s);
      }
    CHECK(ergodicity_coefficient(p) == 1 - best);
  }
}

TEST_CASE("contracting single matrices have a power with coefficient below one") {
  std::mt19937_64 rng(22);
  int contracting = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 3 + rng() % 2;
    const auto p = random_stochastic(rng, n);
    const auto g = build_graph(consensus_ball(n), MatrixSet({p}));
    if (!word_orbit_contracts(g, Word{0})) continue;
    ++contracting;
    Matrix power = p;
    bool found = false;
    for (std::size_t k = 1; k <= g.faces.size() && !found; ++k) {
      found = ergodicity_coefficient(power) < 1;
      power = mat_mul(power, p);
    }
    CHECK(found);
  }
  CHECK(contracting > 0);
}

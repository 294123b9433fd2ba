#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "polystab/constructions.hpp"
#include "polystab/errors.hpp"
#include "polystab/io.hpp"
#include "polystab/oracle.hpp"
#include "polystab/stochastic.hpp"

using namespace testing;

namespace {

Word brute_least_rotation(const Word& w) {
  Word best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    Word rot(w.begin() + static_cast<long>(r), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
    best = std::min(best, rot);
  }
  return best;
}

std::vector<Word> words_of_length(std::size_t m, std::size_t len) {
  std::vector<Word> out;
  Word w(len, 0);
  for (;;) {
    out.push_back(w);
    std::size_t i = len;
    while (i > 0 && w[i - 1] + 1 == m) w[--i] = 0;
    if (i == 0) return out;
    ++w[i - 1];
  }
}

// Rotation classes of noncontracting words up to max_period, decided on the
// transition graph word by word.
std::set<Word> graph_noncontracting(const TransitionGraph& g, std::size_t max_period) {
  std::set<Word> out;
  for (std::size_t len = 1; len <= max_period; ++len)
    for (const auto& w : words_of_length(g.matrix_count, len))
      if (!word_orbit_contracts(g, w)) out.insert(brute_least_rotation(w));
  return out;
}

}  // namespace

TEST_CASE("least rotation and necklace counts") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 500; ++t) {
    const std::size_t len = 1 + rng() % 9, m = 1 + rng() % 3;
    Word w(len);
    for (auto& x : w) x = rng() % m;
    const Word canon = canonical_rotation(w);
    CHECK(canon == brute_least_rotation(w));
    const std::size_t r = least_rotation(w);
    for (std::size_t i = 0; i < len; ++i) CHECK(canon[i] == w[(r + i) % len]);
  }
  CHECK(canonical_rotation(Word{}).empty());
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t len = 1; len <= 8; ++len) {
      std::set<Word> classes;
      for (const auto& w : words_of_length(m, len)) classes.insert(brute_least_rotation(w));
      CHECK(necklace_count(m, len) == Integer(static_cast<unsigned long>(classes.size())));
    }
  CHECK(necklace_count(2, 30) == Integer(35792568UL));
}

TEST_CASE("oracle examples") {
  const auto ball = consensus_ball(3);
  const auto avg = bruteforce_decide(ball, MatrixSet({averaging(3)}), 3);
  CHECK(avg.verdict == Verdict::AllContracting);
  CHECK(avg.words_checked == 3);
  CHECK(avg.noncontracting_words.empty());

  const auto mixed = bruteforce_decide(ball, MatrixSet({Matrix::identity(3), averaging(3)}, {"I", "J"}), 2);
  CHECK(mixed.verdict == Verdict::Noncontracting);
  REQUIRE_FALSE(mixed.noncontracting_words.empty());
  CHECK(mixed.noncontracting_words.front() == Word{0});
  CHECK(mixed.words_checked == 2 + 3);

  // The only noncontracting class of length <= 3 is the construction cycle,
  // applied A1, A2, A3 and written A1 A3 A2 after rotation.
  const auto c = construct_stochastic(3);
  const auto cyc = bruteforce_decide(ball, c.sigma, 3);
  CHECK(cyc.verdict == Verdict::Noncontracting);
  CHECK(cyc.noncontracting_words == std::vector<Word>{canonical_rotation(Word{2, 1, 0})});
  CHECK(cyc.noncontracting_words.front() == Word{0, 2, 1});

  CHECK_THROWS_AS(bruteforce_decide(ball, c.sigma, 0), InputError);
  const MatrixSet bad({mat({{"2", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}})});
  CHECK_THROWS_AS(bruteforce_decide(ball, bad, 2), PreconditionError);
  CHECK_THROWS_AS(bruteforce_decide(consensus_ball(4), construct_stochastic(4).sigma, 11, {.budget = 50}),
                  BudgetExceededError);
}

TEST_CASE("oracle matches per-word graph evaluation") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3 + rng() % 2, m = 1 + rng() % 3;
    const auto sigma = random_stochastic_set(rng, n, m);
    const auto ball = consensus_ball(n);
    const std::size_t max_period = m == 3 ? 4 : 6;
    const auto report = bruteforce_decide(ball, sigma, max_period);
    const auto expected = graph_noncontracting(build_graph(ball, sigma), max_period);
    CHECK(std::set<Word>(report.noncontracting_words.begin(), report.noncontracting_words.end()) == expected);
    CHECK(std::is_sorted(report.noncontracting_words.begin(), report.noncontracting_words.end(),
                         [](const Word& a, const Word& b) {
                           return a.size() != b.size() ? a.size() < b.size() : a < b;
                         }));
    Integer total = 0;
    for (std::size_t len = 1; len <= max_period; ++len) total += necklace_count(m, len);
    CHECK(report.words_checked == total);
    CHECK((report.verdict == Verdict::Noncontracting) == !report.noncontracting_words.empty());
  }
}

TEST_CASE("rotation soundness and re-verification") {
  std::mt19937_64 rng(33);
  int flagged = 0;
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 3 + rng() % 2;
    const auto sigma = random_stochastic_set(rng, n, 2);
    const auto ball = consensus_ball(n);
    const auto g = build_graph(ball, sigma);
    for (const auto& w : bruteforce_decide(ball, sigma, 5).noncontracting_words) {
      ++flagged;
      for (std::size_t r = 0; r < w.size(); ++r) {
        Word rot(w.begin() + static_cast<long>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
        CHECK_FALSE(word_orbit_contracts(g, rot));
      }
    }
  }
  CHECK(flagged > 0);
}

TEST_CASE("graph and oracle agree; monotonicity beyond p*") {
  std::mt19937_64 rng(34);
  int contracting = 0, noncontracting = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 3 + rng() % 2, m = 1 + rng() % 3;
    const auto sigma = random_stochastic_set(rng, n, m);
    const auto ball = consensus_ball(n);
    const auto cv = cross_validate(ball, sigma);
    CHECK_MESSAGE(cv.agree, cv.details);
    if (cv.graph.verdict == Verdict::Noncontracting) {
      ++noncontracting;
      CHECK(cv.graph.min_period <= pstar(n));
      REQUIRE_FALSE(cv.oracle.noncontracting_words.empty());
      CHECK(cv.oracle.noncontracting_words.front().size() <= cv.graph.min_period);
    } else {
      ++contracting;
      if (n == 3) {
        const auto longer = bruteforce_decide(ball, sigma, pstar(n) + 2);
        CHECK(longer.verdict == Verdict::AllContracting);
      }
    }
  }
  CHECK(contracting > 0);
  CHECK(noncontracting > 0);
}

TEST_CASE("cross_validate examples") {
  const auto ball = consensus_ball(3);
  const auto perm = cross_validate(ball, MatrixSet({cyclic_permutation(3)}));
  CHECK(perm.agree);
  CHECK(perm.graph.verdict == Verdict::Noncontracting);
  CHECK(perm.oracle.verdict == Verdict::Noncontracting);

  const auto cube = cross_validate(cube_ball(2), construct_general(cube_ball(2)).sigma);
  CHECK(cube.agree);
  CHECK(cube.graph.min_period == 2);
}

TEST_CASE("two-matrix golden fixture") {
  const auto golden = io::Json::parse(io::read_file(fixture("two_matrix_golden.json")));
  const auto sigma = io::parse_matrix_set(io::read_file(fixture(golden["matrices"].get<std::string>())));
  const auto ball = consensus_ball(sigma.dim());
  const auto graph = decide(ball, sigma);
  const auto oracle = bruteforce_decide(ball, sigma, golden["max_period"].get<std::size_t>());
  CHECK(graph.verdict == oracle.verdict);
  CHECK(to_string(graph.verdict) == golden["verdict"].get<std::string>());
  CHECK(graph.min_period == golden["min_period"].get<std::size_t>());
  CHECK(io::word_json(sigma, graph.witness_word) == golden["witness_word"]);
  CHECK(graph.stats.faces == golden["graph"]["faces"].get<std::size_t>());
  CHECK(graph.stats.edges == golden["graph"]["edges"].get<std::size_t>());
  CHECK(graph.stats.edges_to_interior == golden["graph"]["edges_to_interior"].get<std::size_t>());
  CHECK(oracle.words_checked == golden["oracle"]["words_checked"].get<unsigned long>());
  CHECK(oracle.noncontracting_words.size() == golden["oracle"]["noncontracting_words"].size());
}

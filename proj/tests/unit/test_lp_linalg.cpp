#include "doctest.h"
#include "helpers.hpp"
#include "polystab/errors.hpp"
#include "polystab/linalg.hpp"
#include "polystab/lp.hpp"

using namespace testing;

namespace {

// Maximum of c.x over a bounded 2-D polygon, by checking every pairwise
// intersection of constraint lines.
std::optional<Rational> brute_force_2d(const std::vector<lp::Constraint>& cons, const Vector& c) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < cons.size(); ++i)
    for (std::size_t j = i + 1; j < cons.size(); ++j) {
      const auto &a = cons[i].coeffs, &b = cons[j].coeffs;
      const Rational det = a[0] * b[1] - a[1] * b[0];
      if (det == 0) continue;
      const Vector x{(cons[i].rhs * b[1] - a[1] * cons[j].rhs) / det,
                     (a[0] * cons[j].rhs - cons[i].rhs * b[0]) / det};
      bool feasible = true;
      for (const auto& k : cons) feasible = feasible && dot(k.coeffs, x) <= k.rhs;
      if (feasible && (!best || dot(c, x) > *best)) best = dot(c, x);
    }
  return best;
}

}  // namespace

TEST_CASE("simplex matches vertex enumeration on random bounded polygons") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    lp::Problem p;
    p.num_vars = 2;
    // A box keeps the region bounded; random cuts may empty it.
    for (auto [a, b] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
      p.constraints.push_back({{Rational(a), Rational(b)}, lp::Relation::LessEqual, 3});
    const int cuts = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < cuts; ++k)
      p.constraints.push_back({{random_rational(rng, 2), random_rational(rng, 2)}, lp::Relation::LessEqual,
                               random_rational(rng, 2)});
    p.objective = {random_rational(rng, 2), random_rational(rng, 2)};
    const auto sol = lp::maximize(p);
    const auto expect = brute_force_2d(p.constraints, p.objective);
    if (!expect) {
      CHECK(sol.status == lp::Status::Infeasible);
    } else {
      REQUIRE(sol.status == lp::Status::Optimal);
      CHECK(sol.value == *expect);
      for (const auto& k : p.constraints) CHECK(dot(k.coeffs, sol.x) <= k.rhs);
    }
  }
}

TEST_CASE("simplex detects unbounded and infeasible problems and honours equalities") {
  lp::Problem p;
  p.num_vars = 2;
  p.constraints.push_back({{1, 1}, lp::Relation::LessEqual, 1});
  p.objective = {1, -1};
  CHECK(lp::maximize(p).status == lp::Status::Unbounded);

  p.constraints.push_back({{-1, -1}, lp::Relation::LessEqual, -2});
  CHECK(lp::maximize(p).status == lp::Status::Infeasible);

  lp::Problem q;
  q.num_vars = 3;
  q.nonnegative = {true, true, true};
  q.constraints.push_back({{1, 1, 1}, lp::Relation::Equal, 1});
  q.constraints.push_back({{2, 2, 2}, lp::Relation::Equal, 2});  // redundant
  q.objective = {fraction(1, 2), 1, fraction(1, 3)};
  const auto sol = lp::maximize(q);
  REQUIRE(sol.status == lp::Status::Optimal);
  CHECK(sol.value == 1);
  CHECK(sol.x == Vector{0, 1, 0});
}

TEST_CASE("rank, nullspace and inverse") {
  const std::vector<Vector> rows{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(linalg::rank(rows, 3) == 2);
  const auto ns = linalg::nullspace(rows, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& r : rows) CHECK(dot(r, ns[0]) == 0);

  const std::vector<Vector> m{{2, 1}, {1, 1}};
  const auto inv = linalg::inverse(m);
  CHECK(inv == std::vector<Vector>{{1, -1}, {-1, 2}});
  CHECK_THROWS_AS(linalg::inverse(rows), InputError);
  CHECK(linalg::nullspace({}, 2).size() == 2);
}

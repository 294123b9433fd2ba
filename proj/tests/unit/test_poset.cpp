#include <bitset>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "polystab/consensus_face.hpp"
#include "polystab/errors.hpp"
#include "polystab/poset.hpp"
#include "polystab/stochastic.hpp"

using namespace testing;

namespace {

using Bits = std::bitset<128>;

// Maximum independent set of the comparability graph by branch and bound;
// shares nothing with the matching-based width computation.
std::size_t max_antichain_bruteforce(const Poset& p, const std::vector<std::size_t>& elems) {
  const std::size_t k = elems.size();
  REQUIRE(k <= 128);
  std::vector<Bits> adj(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (a != b && p.comparable(elems[a], elems[b])) adj[a].set(b);
  std::size_t best = 0;
  auto rec = [&](auto&& self, Bits cand, std::size_t size) -> void {
    if (size + cand.count() <= best) return;
    if (cand.none()) {
      best = size;
      return;
    }
    std::size_t pivot = k, pivot_deg = 0;
    for (std::size_t v = 0; v < k; ++v) {
      if (!cand.test(v)) continue;
      const std::size_t deg = (adj[v] & cand).count();
      if (deg == 0) {  // isolated in the candidate set: always take it
        cand.reset(v);
        ++size;
        continue;
      }
      if (pivot == k || deg > pivot_deg) {
        pivot = v;
        pivot_deg = deg;
      }
    }
    if (pivot == k) {
      best = std::max(best, size);
      return;
    }
    Bits with = cand & ~adj[pivot];
    with.reset(pivot);
    self(self, with, size + 1);
    cand.reset(pivot);
    self(self, cand, size);
  };
  Bits all;
  for (std::size_t v = 0; v < k; ++v) all.set(v);
  rec(rec, all, 0);
  return best;
}

void check_witnesses(const Poset& p, const WidthResult& w) {
  CHECK(w.antichain.size() == w.size);
  CHECK(std::is_sorted(w.antichain.begin(), w.antichain.end()));
  CHECK(is_antichain(p, w.antichain));
  // The chain cover certifies optimality: an antichain meets each chain once.
  CHECK(w.chains.size() == w.size);
  std::vector<int> seen(p.size(), 0);
  for (const auto& chain : w.chains) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      ++seen[chain[i]];
      if (i + 1 < chain.size()) CHECK(p.less(chain[i], chain[i + 1]));
    }
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
}

std::vector<std::size_t> level(const Poset& p, std::size_t rank) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.rank(i) == rank) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("n = 3 consensus lattice matches the six-element picture") {
  const auto poset = build_poset(consensus_ball(3));
  REQUIRE(poset.faces.size() == 6);
  CHECK(rank_level_sizes(poset.order) == std::map<std::size_t, std::size_t>{{1, 3}, {2, 3}});
  const auto covers = poset.order.covers();
  CHECK(covers.size() == 6);
  std::map<std::size_t, int> above;
  for (auto [lo, hi] : covers) {
    CHECK(poset.faces[lo].dim == 1);
    CHECK(poset.faces[hi].dim == 2);
    ++above[lo];
  }
  CHECK(above.size() == 3);
  for (auto [e, count] : above) CHECK(count == 2);
  // Edge ({1},{2,3}) lies on the facets ({1},{2}) and ({1},{3}).
  const auto edge = poset.index_of(consensus_key(make_consensus_face(3, {0}, {1, 2})));
  const auto f12 = poset.index_of(consensus_key(make_consensus_face(3, {0}, {1})));
  const auto f13 = poset.index_of(consensus_key(make_consensus_face(3, {0}, {2})));
  const auto f23 = poset.index_of(consensus_key(make_consensus_face(3, {1}, {2})));
  CHECK(poset.order.less(edge, f12));
  CHECK(poset.order.less(edge, f13));
  CHECK_FALSE(poset.order.comparable(edge, f23));

  const auto w = width(poset.order);
  CHECK(w.size == 3);
  check_witnesses(poset.order, w);
}

TEST_CASE("small posets") {
  const auto interval = build_poset(interval_ball());
  CHECK(interval.faces.size() == 1);
  CHECK(interval.order.covers().empty());
  CHECK(width(interval.order).size == 1);
  CHECK(rank_level_sizes(interval.order) == std::map<std::size_t, std::size_t>{{0, 1}});
  const auto single = sperner_check(interval.order);
  CHECK(single.holds);
  CHECK(single.width == 1);

  const auto square = build_poset(cube_ball(2));
  REQUIRE(square.faces.size() == 4);
  CHECK(rank_level_sizes(square.order) == std::map<std::size_t, std::size_t>{{0, 2}, {1, 2}});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (square.faces[i].dim == 0 && square.faces[j].dim == 1) CHECK(square.order.less(i, j));
  CHECK(width(square.order).size == 2);

  std::vector<std::pair<std::size_t, std::size_t>> chain;
  for (std::size_t i = 0; i + 1 < 6; ++i) chain.emplace_back(i, i + 1);
  const auto c = Poset::from_relation({0, 1, 2, 3, 4, 5}, chain);
  CHECK(width(c).size == 1);
  CHECK(c.covers().size() == 5);
  CHECK(c.less(0, 5));

  // Ranks 2, 2 but width 3: a2 is incomparable to everything.
  const auto odd = Poset::from_relation({0, 0, 1, 1}, {{0, 2}, {0, 3}});
  const auto s = sperner_check(odd);
  CHECK_FALSE(s.holds);
  CHECK(s.width == 3);
  CHECK(s.max_level == 2);
  check_witnesses(odd, width(odd));

  CHECK_THROWS_AS(Poset::from_relation({0, 1}, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Poset::from_relation({0, 1}, {{0, 2}}), InputError);
}

TEST_CASE("order axioms hold on the consensus lattices") {
  for (std::size_t n = 3; n <= 4; ++n) {
    const auto poset = build_poset(consensus_ball(n));
    const auto& p = poset.order;
    for (std::size_t a = 0; a < p.size(); ++a) {
      CHECK_FALSE(p.less(a, a));
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (p.less(a, b)) CHECK_FALSE(p.less(b, a));
        for (std::size_t c = 0; c < p.size(); ++c)
          if (p.less(a, b) && p.less(b, c)) CHECK(p.less(a, c));
      }
    }
    for (auto [lo, hi] : p.covers()) CHECK(p.rank(hi) == p.rank(lo) + 1);
  }
}

TEST_CASE("width matches exhaustive antichain search") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto poset = build_poset(consensus_ball(n));
    const auto& p = poset.order;
    const auto w = width(p);
    check_witnesses(p, w);
    // The two largest rank levels.
    std::vector<std::pair<std::size_t, std::size_t>> sizes;
    for (auto [r, c] : rank_level_sizes(p)) sizes.emplace_back(c, r);
    std::sort(sizes.rbegin(), sizes.rend());
    auto elems = level(p, sizes[0].second);
    if (sizes.size() > 1) {
      const auto second = level(p, sizes[1].second);
      elems.insert(elems.end(), second.begin(), second.end());
    }
    CHECK(max_antichain_bruteforce(p, elems) == w.size);
    if (p.size() <= 128) {
      std::vector<std::size_t> all(p.size());
      std::iota(all.begin(), all.end(), 0);
      CHECK(max_antichain_bruteforce(p, all) == w.size);
    }
  }
  for (const auto& ball : {cube_ball(3), cross_ball(3)}) {
    const auto poset = build_poset(ball);
    std::vector<std::size_t> all(poset.faces.size());
    std::iota(all.begin(), all.end(), 0);
    const auto w = width(poset.order);
    check_witnesses(poset.order, w);
    CHECK(max_antichain_bruteforce(poset.order, all) == w.size);
  }
}

TEST_CASE("consensus lattices are Sperner with the maximum antichain at dimension floor(n/3)+1") {
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto poset = build_poset(consensus_ball(n));
    const auto w = width(poset.order);
    CHECK(w.size == pstar(n));
    for (auto idx : w.antichain) CHECK(poset.faces[idx].dim == n / 3 + 1);
    if (n <= 6) CHECK(sperner_check(poset.order).holds);
  }
}

TEST_CASE("shadow inequalities on full rank levels") {
  for (std::size_t n = 4; n <= 7; ++n) {
    const auto poset = build_poset(consensus_ball(n));
    const auto& p = poset.order;
    for (std::size_t d = 1; d + 1 < n; ++d) {
      const auto S = level(p, d);
      if (3 * d <= n) CHECK(upper_shadow(p, S).size() >= S.size());
    }
    for (std::size_t d = 2; d < n; ++d) {
      const auto S = level(p, d);
      if (3 * d >= n + 4) CHECK(lower_shadow(p, S).size() >= S.size());
    }
  }
  const auto p4 = build_poset(consensus_ball(4)).order;
  CHECK(upper_shadow(p4, level(p4, 1)).size() == 12);
  CHECK(lower_shadow(p4, level(p4, 1)).empty());
  CHECK_THROWS_AS(upper_shadow(p4, {level(p4, 1)[0], level(p4, 2)[0]}), InputError);
}

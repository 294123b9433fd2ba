#include "polystab/poset.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "polystab/errors.hpp"

namespace polystab {

Poset::Poset(std::vector<std::size_t> ranks)
    : ranks_(std::move(ranks)), up_(ranks_.size(), std::vector<std::uint64_t>((ranks_.size() + 63) / 64, 0)) {}

Poset Poset::from_relation(std::vector<std::size_t> ranks,
                           const std::vector<std::pair<std::size_t, std::size_t>>& strict_pairs) {
  Poset p(std::move(ranks));
  const std::size_t n = p.size();
  for (auto [a, b] : strict_pairs) {
    if (a >= n || b >= n) throw InputError("poset relation index out of range");
    p.set(a, b);
  }
  // Warshall closure on bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.less(i, k))
        for (std::size_t w = 0; w < p.up_[i].size(); ++w) p.up_[i][w] |= p.up_[k][w];
  for (std::size_t i = 0; i < n; ++i)
    if (p.less(i, i)) throw InputError("poset relation contains a cycle");
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  const std::size_t n = size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> down(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (less(i, j)) down[j][i / 64] |= std::uint64_t{1} << (i % 64);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!less(i, j)) continue;
      bool between = false;
      for (std::size_t w = 0; w < words && !between; ++w) between = (up_[i][w] & down[j][w]) != 0;
      if (!between) out.emplace_back(i, j);
    }
  return out;
}

WidthResult width(const Poset& poset) {
  const std::size_t n = poset.size();
  constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (poset.less(i, j)) adj[i].push_back(j);

  // Hopcroft-Karp: left copy i, right copy j, edge when i < j.
  std::vector<std::size_t> match_left(n, kFree), match_right(n, kFree), layer(n);
  auto bfs = [&] {
    std::deque<std::size_t> queue;
    bool found = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (match_left[u] == kFree) {
        layer[u] = 0;
        queue.push_back(u);
      } else {
        layer[u] = kFree;
      }
    }
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj[u]) {
        const std::size_t w = match_right[v];
        if (w == kFree) found = true;
        else if (layer[w] == kFree) {
          layer[w] = layer[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  };
  auto dfs = [&](auto&& self, std::size_t u) -> bool {
    for (std::size_t v : adj[u]) {
      const std::size_t w = match_right[v];
      if (w == kFree || (layer[w] == layer[u] + 1 && self(self, w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    layer[u] = kFree;
    return false;
  };
  std::size_t matching = 0;
  while (bfs())
    for (std::size_t u = 0; u < n; ++u)
      if (match_left[u] == kFree && dfs(dfs, u)) ++matching;

  // Koenig: alternating reachability from unmatched left vertices.
  std::vector<bool> left_seen(n, false), right_seen(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t u = 0; u < n; ++u)
    if (match_left[u] == kFree) {
      left_seen[u] = true;
      queue.push_back(u);
    }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adj[u]) {
      if (right_seen[v] || match_left[u] == v) continue;
      right_seen[v] = true;
      const std::size_t w = match_right[v];
      if (w != kFree && !left_seen[w]) {
        left_seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  // Cover = (L \ Z) u (R n Z); the antichain is everything it misses.
  WidthResult out;
  for (std::size_t x = 0; x < n; ++x)
    if (left_seen[x] && !right_seen[x]) out.antichain.push_back(x);
  out.size = n - matching;
  if (out.antichain.size() != out.size)
    throw InternalError("Koenig extraction produced " + std::to_string(out.antichain.size()) +
                        " elements, expected " + std::to_string(out.size));

  for (std::size_t x = 0; x < n; ++x) {
    if (match_right[x] != kFree) continue;  // not a chain start
    std::vector<std::size_t> chain{x};
    while (match_left[chain.back()] != kFree) chain.push_back(match_left[chain.back()]);
    out.chains.push_back(std::move(chain));
  }
  return out;
}

std::map<std::size_t, std::size_t> rank_level_sizes(const Poset& poset) {
  std::map<std::size_t, std::size_t> levels;
  for (auto r : poset.ranks()) ++levels[r];
  return levels;
}

SpernerResult sperner_check(const Poset& poset) {
  SpernerResult res;
  if (poset.size() == 0) return res;
  res.width = width(poset).size;
  for (const auto& [rank, count] : rank_level_sizes(poset)) res.max_level = std::max(res.max_level, count);
  res.holds = res.width == res.max_level;
  return res;
}

namespace {

std::vector<std::size_t> shadow(const Poset& poset, const std::vector<std::size_t>& set, bool upward) {
  if (set.empty()) return {};
  const std::size_t r = poset.rank(set.front());
  for (auto s : set)
    if (poset.rank(s) != r) throw InputError("shadow: members must share one rank");
  if (!upward && r == 0) return {};
  const std::size_t target = upward ? r + 1 : r - 1;
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < poset.size(); ++x) {
    if (poset.rank(x) != target) continue;
    for (auto s : set)
      if (upward ? poset.less(s, x) : poset.less(x, s)) {
        out.push_back(x);
        break;
      }
  }
  return out;
}

}  // namespace

std::vector<std::size_t> upper_shadow(const Poset& poset, const std::vector<std::size_t>& set) {
  return shadow(poset, set, true);
}

std::vector<std::size_t> lower_shadow(const Poset& poset, const std::vector<std::size_t>& set) {
  return shadow(poset, set, false);
}

bool is_antichain(const Poset& poset, const std::vector<std::size_t>& members) {
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (poset.comparable(members[a], members[b])) return false;
  return true;
}

std::size_t DoubleFacePoset::index_of(const DoubleFaceKey& key) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), key,
                             [](const FaceInfo& f, const DoubleFaceKey& k) { return f.key < k; });
  if (it == faces.end() || it->key != key) throw InputError("double-face not present in the poset");
  return static_cast<std::size_t>(it - faces.begin());
}

DoubleFacePoset build_poset(const SeminormBall& ball) {
  DoubleFacePoset out;
  out.faces = enumerate_double_faces(ball);
  std::vector<std::size_t> ranks;
  ranks.reserve(out.faces.size());
  for (const auto& f : out.faces) ranks.push_back(f.dim);
  const auto& faces = out.faces;
  out.order = Poset::from_order(std::move(ranks), [&](std::size_t i, std::size_t j) {
    return faces[i].dim < faces[j].dim && face_contained_in(faces[i].key.pattern(), faces[j].key.pattern());
  });
  return out;
}

}  // namespace polystab

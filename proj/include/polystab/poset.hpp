#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "polystab/ball.hpp"

namespace polystab {

// Finite graded poset on elements 0..size-1, stored as strict up-sets.
class Poset {
 public:
  Poset() = default;

  // Builds the transitive closure of the given strict pairs (a < b). Throws
  // InputError on a cycle (antisymmetry violation) or out-of-range index.
  static Poset from_relation(std::vector<std::size_t> ranks,
                             const std::vector<std::pair<std::size_t, std::size_t>>& strict_pairs);

  // `less(i, j)` must already be a strict partial order.
  template <class Less>
  static Poset from_order(std::vector<std::size_t> ranks, Less&& less) {
    Poset p(std::move(ranks));
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        if (i != j && less(i, j)) p.set(i, j);
    return p;
  }

  std::size_t size() const noexcept { return ranks_.size(); }
  std::size_t rank(std::size_t i) const { return ranks_[i]; }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }

  // Strict order i < j.
  bool less(std::size_t i, std::size_t j) const {
    return (up_[i][j / 64] >> (j % 64)) & 1U;
  }
  bool comparable(std::size_t i, std::size_t j) const { return i == j || less(i, j) || less(j, i); }

  // Pairs (i, j) with i < j and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  explicit Poset(std::vector<std::size_t> ranks);
  void set(std::size_t i, std::size_t j) { up_[i][j / 64] |= std::uint64_t{1} << (j % 64); }

  std::vector<std::size_t> ranks_;
  std::vector<std::vector<std::uint64_t>> up_;
};

struct WidthResult {
  std::size_t size = 0;
  std::vector<std::size_t> antichain;            // sorted element indices
  std::vector<std::vector<std::size_t>> chains;  // minimum chain cover, each chain bottom-up
};

// Maximum antichain via Dilworth: minimum chain cover = size - maximum
// matching on the comparability bipartite graph; the antichain is read off
// the Koenig vertex cover of that matching.
WidthResult width(const Poset& poset);

std::map<std::size_t, std::size_t> rank_level_sizes(const Poset& poset);

struct SpernerResult {
  bool holds = false;
  std::size_t width = 0;
  std::size_t max_level = 0;
};

SpernerResult sperner_check(const Poset& poset);

// Elements one rank above (below) some member of `set`, all members sharing
// one rank.
std::vector<std::size_t> upper_shadow(const Poset& poset, const std::vector<std::size_t>& set);
std::vector<std::size_t> lower_shadow(const Poset& poset, const std::vector<std::size_t>& set);

bool is_antichain(const Poset& poset, const std::vector<std::size_t>& members);

// Inclusion lattice of the proper closed double-faces of a ball, ranked by
// dimension. The ball itself and the empty face are not stored.
struct DoubleFacePoset {
  std::vector<FaceInfo> faces;  // sorted by key
  Poset order;

  // Index of a key; throws InputError when absent.
  std::size_t index_of(const DoubleFaceKey& key) const;
};

DoubleFacePoset build_poset(const SeminormBall& ball);

}  // namespace polystab

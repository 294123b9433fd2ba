#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polystab/ball.hpp"

namespace polystab {

// Face of the consensus ball { x : (max x - min x)/2 <= 1 } written as the
// index sets attaining the minimum and the maximum. Indices are 0-based and
// sorted. Negating x swaps the two sets.
struct ConsensusFace {
  std::size_t n = 0;
  std::vector<std::size_t> s_min;
  std::vector<std::size_t> s_max;

  // d = n - |s_min u s_max| + 1
  std::size_t dimension() const noexcept { return n - s_min.size() - s_max.size() + 1; }

  // Orientation whose s_min holds the smallest index.
  ConsensusFace canonical() const;

  auto operator<=>(const ConsensusFace&) const = default;
  bool operator==(const ConsensusFace&) const = default;
};

// Validates and canonicalizes. Throws InputError on empty, overlapping or
// out-of-range sets.
ConsensusFace make_consensus_face(std::size_t n, std::vector<std::size_t> s_min,
                                  std::vector<std::size_t> s_max);

// Position of the normal (e_i - e_j)/2, i < j, in consensus_ball order.
std::size_t consensus_pair_index(std::size_t n, std::size_t i, std::size_t j);

// Oriented pattern over the n(n-1)/2 pair constraints.
FacePattern consensus_pattern(const ConsensusFace& face);
DoubleFaceKey consensus_key(const ConsensusFace& face);

// Inverse of consensus_pattern, keeping the orientation; nullopt when the
// pattern does not describe a consensus face.
std::optional<ConsensusFace> consensus_face_from_pattern(std::size_t n, const FacePattern& pattern);

// -1 on s_min, +1 on s_max, 0 elsewhere.
Vector consensus_interior_point(const ConsensusFace& face);

// nullopt for the interior; throws OutsideBallError when max - min > 2.
std::optional<ConsensusFace> locate_consensus(std::span<const Rational> x);

// All canonical faces, ordered by their pattern keys (the same order as
// enumerate_double_faces on the consensus ball).
std::vector<ConsensusFace> enumerate_consensus_faces(std::size_t n);

}  // namespace polystab

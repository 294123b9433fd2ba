#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polystab/ball.hpp"
#include "polystab/matrix.hpp"

namespace polystab {

// Linear functional b with b^T x = 1 on one orientation of a face and
// b^T x <= 1 on the whole ball.
struct SupportingFunctional {
  Vector b;
  DoubleFaceKey face;
};

// Average of the signed tight normals of the given oriented pattern
// (Plus contributes +b_i, Minus -b_i). Verified exactly: the maximum over the
// ball is 1 and the face attains it. Throws InfeasibleError for an
// unrealizable pattern and ConstructionError if verification fails.
SupportingFunctional supporting_functional(const SeminormBall& ball, const FacePattern& oriented);

// Uses the key's canonical orientation.
SupportingFunctional supporting_functional(const SeminormBall& ball, const DoubleFaceKey& face);

// A matrix family together with the face cycle it was built around.
struct Construction {
  MatrixSet sigma;
  std::vector<DoubleFaceKey> cycle;  // matrix i maps cycle[i] onto cycle[i+1 mod p]
  std::size_t pstar = 0;
  std::vector<std::string> checks;   // properties verified before returning
};

// Rank-one family A_i = v_i b_i^T around a maximum antichain of the
// double-face lattice (sorted by key). Each A_i leaves the ball invariant,
// sends the closed face F_i onto the open face F_{i+1}, and sends every
// other point of the ball into the interior. Throws ConstructionError if
// any of these fails.
Construction construct_general(const SeminormBall& ball);

// Stochastic family around the faces of dimension floor(n/3)+1 of the
// consensus ball, taken in key order. Rows of A_i are indexed by the blocks
// (s_min, middle, s_max) of F_{i+1}: s_min rows average F_i's s_min entries,
// s_max rows average F_i's s_max entries, middle rows average everything.
// Throws InputError for n < 2 and ConstructionError on failed verification.
Construction construct_stochastic(std::size_t n);

}  // namespace polystab

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "polystab/ball.hpp"
#include "polystab/consensus_face.hpp"
#include "polystab/facemap.hpp"
#include "polystab/matrix.hpp"

namespace polystab {

// Unit ball of (max_i x_i - min_i x_i) / 2. Throws InputError for n < 2.
SeminormBall consensus_ball(std::size_t n);

// Closed-form counts. All throw InputError when arguments leave their
// domain or the result does not fit in 64 bits.
std::uint64_t face_count(std::size_t n, std::size_t d);  // 1 <= d <= n-1
std::uint64_t pstar(std::size_t n);                      // n >= 2
std::uint64_t paz_bound(std::size_t n);                  // n >= 2
std::size_t dstar(std::size_t n);                        // floor(n/3) + 1

struct ConsensusBounds {
  std::size_t n = 0;
  std::uint64_t pstar = 0;
  std::uint64_t paz_b = 0;
  std::size_t dstar = 0;
  std::map<std::size_t, std::uint64_t> level_counts;  // d -> f_d
};

ConsensusBounds consensus_bounds(std::size_t n);

struct ConsensusDecision {
  DecisionReport report;
  std::string summary;     // one-line verdict in consensus language
  std::string provenance;  // the equivalence the verdict relies on
};

// Decides rank-one convergence of every infinite product of stochastic
// matrices. Throws InputError naming the first non-stochastic matrix.
ConsensusDecision decide_consensus(const MatrixSet& sigma);

// 1 - min over row pairs of sum_k min(p_ik, p_jk). Throws InputError for a
// non-stochastic matrix.
Rational ergodicity_coefficient(const Matrix& p);

}  // namespace polystab

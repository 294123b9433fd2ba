#include "polystab/stochastic.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <limits>

#include "polystab/errors.hpp"

namespace polystab {
namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMax / a) throw InputError("closed-form count overflows 64 bits");
  return a * b;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    const std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(i));
    r = checked_mul(r / g, (n - k + i) / (i / g));
  }
  return r;
}

std::uint64_t pow_u64(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

void require_n(std::size_t n) {
  if (n < 2) throw InputError("consensus dimension must be at least 2, got " + std::to_string(n));
}

}  // namespace

SeminormBall consensus_ball(std::size_t n) {
  require_n(n);
  return SeminormBall::consensus(n);
}

std::uint64_t face_count(std::size_t n, std::size_t d) {
  require_n(n);
  if (d < 1 || d > n - 1)
    throw InputError("face dimension " + std::to_string(d) + " outside 1.." + std::to_string(n - 1));
  return checked_mul(binomial(n, d - 1), pow_u64(2, n - d) - 1);
}

std::size_t dstar(std::size_t n) {
  require_n(n);
  return n / 3 + 1;
}

std::uint64_t pstar(std::size_t n) { return face_count(n, dstar(n)); }

std::uint64_t paz_bound(std::size_t n) {
  require_n(n);
  const std::uint64_t three = pow_u64(3, n);
  const std::uint64_t two = pow_u64(2, n + 1);
  return (three - two + 1) / 2;
}

ConsensusBounds consensus_bounds(std::size_t n) {
  ConsensusBounds b;
  b.n = n;
  b.pstar = pstar(n);
  b.paz_b = paz_bound(n);
  b.dstar = dstar(n);
  for (std::size_t d = 1; d + 1 <= n; ++d) b.level_counts[d] = face_count(n, d);
  return b;
}

ConsensusDecision decide_consensus(const MatrixSet& sigma) {
  for (std::size_t k = 0; k < sigma.size(); ++k)
    if (!is_stochastic(sigma[k])) throw InputError("matrix '" + sigma.names()[k] + "' is not stochastic");
  const std::size_t n = sigma.dim();
  const auto ball = consensus_ball(n);
  const auto bound = pstar(n);

  ConsensusDecision out;
  const auto start = std::chrono::steady_clock::now();
  auto graph = build_graph(ball, sigma);
  const double build = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out.report = decide(graph, static_cast<std::size_t>(bound));
  out.report.build_ms = build;
  if (out.report.verdict == Verdict::AllContracting) {
    out.summary = "all infinite products converge to a rank-one matrix (consensus)";
  } else {
    out.summary = "consensus fails; witness period " + std::to_string(out.report.min_period) +
                  " <= p* = " + std::to_string(bound);
  }
  out.provenance =
      "for stochastic matrices, contraction of every product in the consensus seminorm is taken as "
      "equivalent to rank-one convergence of every left-infinite product; this equivalence is used as "
      "given and not re-verified";
  return out;
}

Rational ergodicity_coefficient(const Matrix& p) {
  if (!is_stochastic(p)) throw InputError("ergodicity coefficient needs a stochastic matrix");
  const std::size_t n = p.dim();
  if (n < 2) return 0;
  Rational best_overlap = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational overlap = 0;
      for (std::size_t k = 0; k < n; ++k) overlap += std::min(p(i, k), p(j, k));
      best_overlap = std::min(best_overlap, overlap);
    }
  return 1 - best_overlap;
}

}  // namespace polystab

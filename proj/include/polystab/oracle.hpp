#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polystab/ball.hpp"
#include "polystab/facemap.hpp"
#include "polystab/matrix.hpp"
#include "polystab/rational.hpp"

namespace polystab {

struct OracleOptions {
  // Cap on explicit work (prefix extensions plus word evaluations).
  std::uint64_t budget = 10'000'000;
  // Stop at the first (hence shortest) noncontracting word.
  bool stop_at_first = false;
};

struct OracleReport {
  std::size_t max_period = 0;
  // Rotation classes settled, counting classes decided through a dead prefix.
  Integer words_checked = 0;
  // Classes whose periodic product was evaluated explicitly.
  std::uint64_t words_evaluated = 0;
  std::uint64_t work = 0;
  // Written order, each the least rotation of its class; sorted by length
  // then lexicographically.
  std::vector<Word> noncontracting_words;
  Verdict verdict = Verdict::AllContracting;
  // Length after which every prefix had been driven into the interior, so
  // longer words were settled without enumeration (0 if never).
  std::size_t settled_after = 0;
};

// Checks every periodic product ...www with |w| <= max_period, one word per
// rotation class. Each candidate's product P is evaluated on exact
// relative-interior points, giving the face map of P; the product is
// noncontracting iff that map has a cycle among proper faces. A prefix that
// already sends the whole boundary into the interior settles all of its
// extensions. Throws PreconditionError when a matrix is not nonincreasing
// and BudgetExceededError when the explicit work exceeds options.budget.
OracleReport bruteforce_decide(const SeminormBall& ball, const MatrixSet& sigma, std::size_t max_period,
                               const OracleOptions& options = {});

// Index of the lexicographically least rotation (Booth).
std::size_t least_rotation(const Word& w);
Word canonical_rotation(const Word& w);

// Number of rotation classes of words of length len over m letters.
Integer necklace_count(std::size_t m, std::size_t len);

struct CrossValidation {
  bool agree = false;
  DecisionReport graph;
  OracleReport oracle;
  std::string details;  // both witnesses when the verdicts differ
};

// Runs decide and the oracle up to the lattice width and compares verdicts.
CrossValidation cross_validate(const SeminormBall& ball, const MatrixSet& sigma,
                               const OracleOptions& options = {.budget = 10'000'000, .stop_at_first = true});

}  // namespace polystab

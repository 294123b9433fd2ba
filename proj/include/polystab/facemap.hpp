#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polystab/ball.hpp"
#include "polystab/matrix.hpp"

namespace polystab {

// Matrix indices in written order: word[0] is applied last, word.back()
// first, as in the left-infinite product ... A_{s(2)} A_{s(1)}.
using Word = std::vector<std::size_t>;

// Finite abstraction of the dynamics: every open double-face is sent by
// each matrix into exactly one open double-face or into the interior.
struct TransitionGraph {
  std::vector<FaceInfo> faces;                // proper nodes, sorted by key
  std::size_t matrix_count = 0;
  std::vector<std::vector<std::size_t>> next; // next[k][node]; node faces.size() is the interior

  std::size_t interior() const noexcept { return faces.size(); }
  std::size_t node_count() const noexcept { return faces.size() + 1; }
  std::size_t index_of(const DoubleFaceKey& key) const;

  // Node reached from `node` after applying the word (right to left).
  std::size_t follow(std::size_t node, const Word& word) const;
};

enum class Verdict { AllContracting, Noncontracting };

struct GraphStats {
  std::size_t faces = 0;
  std::size_t matrices = 0;
  std::size_t edges = 0;          // faces * matrices
  std::size_t edges_to_interior = 0;
};

struct DecisionReport {
  Verdict verdict = Verdict::AllContracting;
  Word witness_word;                        // empty when all products contract
  std::vector<DoubleFaceKey> witness_cycle; // witness_cycle[t] is the face after t letters
  std::size_t min_period = 0;
  std::size_t bound_pstar = 0;
  GraphStats stats;
  double build_ms = 0;
  double decide_ms = 0;
};

// Face reached by A from the open double-face f. Throws PreconditionError
// when A does not leave the ball invariant.
FaceLocation face_image(const SeminormBall& ball, const Matrix& a, const DoubleFaceKey& f);

// Same, without the invariance check.
FaceLocation face_image_unchecked(const SeminormBall& ball, const Matrix& a, const DoubleFaceKey& f);

// Throws PreconditionError naming the first matrix that is not
// nonincreasing for the ball.
TransitionGraph build_graph(const SeminormBall& ball, const MatrixSet& sigma);

// Builds from a precomputed face list (must be the ball's full enumeration).
TransitionGraph build_graph(const SeminormBall& ball, const MatrixSet& sigma, std::vector<FaceInfo> faces);

// All infinite products contract iff the proper part of the graph is
// acyclic. Otherwise reports a shortest cycle, ties broken by the
// lexicographically smallest written word. Throws InternalError if the
// shortest cycle is longer than pstar.
DecisionReport decide(const TransitionGraph& graph, std::size_t pstar);

// Builds the graph and takes pstar as the width of the ball's double-face
// lattice.
DecisionReport decide(const SeminormBall& ball, const MatrixSet& sigma);

// True iff the periodic product ...www maps every boundary point into the
// interior eventually.
bool word_orbit_contracts(const TransitionGraph& graph, const Word& word);

GraphStats graph_stats(const TransitionGraph& graph);

std::string to_string(Verdict verdict);

}  // namespace polystab

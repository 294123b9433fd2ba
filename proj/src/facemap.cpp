#include "polystab/facemap.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <limits>
#include <optional>

#include "polystab/errors.hpp"
#include "polystab/parallel.hpp"
#include "polystab/poset.hpp"

namespace polystab {
namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

std::size_t TransitionGraph::index_of(const DoubleFaceKey& key) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), key,
                             [](const FaceInfo& f, const DoubleFaceKey& k) { return f.key < k; });
  if (it == faces.end() || it->key != key) throw InputError("double-face not present in the graph");
  return static_cast<std::size_t>(it - faces.begin());
}

std::size_t TransitionGraph::follow(std::size_t node, const Word& word) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it >= matrix_count) throw InputError("word index out of range");
    node = next[*it][node];
  }
  return node;
}

FaceLocation face_image_unchecked(const SeminormBall& ball, const Matrix& a, const DoubleFaceKey& f) {
  const Vector x = relative_interior_point(ball, f);
  return locate(ball, polystab::apply(a, x));
}

FaceLocation face_image(const SeminormBall& ball, const Matrix& a, const DoubleFaceKey& f) {
  if (!check_invariance(ball, a))
    throw PreconditionError("matrix does not leave the unit ball invariant; face map undefined");
  return face_image_unchecked(ball, a, f);
}

TransitionGraph build_graph(const SeminormBall& ball, const MatrixSet& sigma) {
  return build_graph(ball, sigma, enumerate_double_faces(ball));
}

TransitionGraph build_graph(const SeminormBall& ball, const MatrixSet& sigma, std::vector<FaceInfo> faces) {
  if (sigma.dim() != ball.dim())
    throw InputError("matrix dimension " + std::to_string(sigma.dim()) + " does not match ball dimension " +
                     std::to_string(ball.dim()));
  for (std::size_t k = 0; k < sigma.size(); ++k)
    if (!check_invariance(ball, sigma[k]))
      throw PreconditionError("matrix '" + sigma.names()[k] + "' is not nonincreasing for the seminorm");

  TransitionGraph g;
  g.faces = std::move(faces);
  g.matrix_count = sigma.size();
  const std::size_t nf = g.faces.size();
  g.next.assign(sigma.size(), std::vector<std::size_t>(nf + 1, nf));

  std::vector<Vector> points(nf);
  parallel_for(nf, [&](std::size_t i) { points[i] = relative_interior_point(ball, g.faces[i].key); });
  parallel_for(nf * sigma.size(), [&](std::size_t job) {
    const std::size_t k = job / nf, i = job % nf;
    const auto loc = locate(ball, polystab::apply(sigma[k], points[i]));
    g.next[k][i] = loc.is_interior() ? nf : g.index_of(loc.key());
  });
  return g;
}

DecisionReport decide(const TransitionGraph& graph, std::size_t pstar) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t nf = graph.faces.size();
  const std::size_t m = graph.matrix_count;
  DecisionReport report;
  report.bound_pstar = pstar;
  report.stats = graph_stats(graph);

  // Shortest closed walk through each proper node.
  std::vector<std::size_t> cycle_len(nf, kUnreached);
  std::vector<std::size_t> dist(nf);
  for (std::size_t s = 0; s < nf; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty() && cycle_len[s] == kUnreached) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t v = graph.next[k][u];
        if (v == nf) continue;
        if (v == s) {
          cycle_len[s] = dist[u] + 1;
          break;
        }
        if (dist[v] == kUnreached) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  const std::size_t shortest = nf == 0 ? kUnreached : *std::min_element(cycle_len.begin(), cycle_len.end());
  if (shortest == kUnreached) {
    report.verdict = Verdict::AllContracting;
    report.decide_ms = elapsed_ms(start);
    return report;
  }

  // Lexicographically smallest written word of a closed walk of that length.
  // The written word starts with the last applied letter, so it is built
  // backwards from the start node over the forward-reachable layers.
  std::optional<Word> best_word;
  std::size_t best_start = 0;
  for (std::size_t s = 0; s < nf; ++s) {
    if (cycle_len[s] != shortest) continue;
    std::vector<std::vector<bool>> layer(shortest + 1, std::vector<bool>(nf, false));
    layer[0][s] = true;
    for (std::size_t t = 0; t < shortest; ++t)
      for (std::size_t u = 0; u < nf; ++u)
        if (layer[t][u])
          for (std::size_t k = 0; k < m; ++k)
            if (graph.next[k][u] != nf) layer[t + 1][graph.next[k][u]] = true;
    Word word;
    std::vector<bool> current(nf, false);
    current[s] = true;
    for (std::size_t t = shortest; t > 0; --t) {
      std::vector<bool> prev(nf, false);
      bool found = false;
      for (std::size_t k = 0; k < m && !found; ++k) {
        for (std::size_t v = 0; v < nf; ++v)
          if (layer[t - 1][v] && graph.next[k][v] != nf && current[graph.next[k][v]]) {
            prev[v] = true;
            found = true;
          }
        if (found) word.push_back(k);
      }
      if (!found) throw InternalError("shortest-cycle reconstruction failed");
      current = std::move(prev);
    }
    if (!best_word || word < *best_word) {
      best_word = std::move(word);
      best_start = s;
    }
  }

  report.verdict = Verdict::Noncontracting;
  report.witness_word = *best_word;
  report.min_period = shortest;
  std::size_t node = best_start;
  for (auto it = report.witness_word.rbegin(); it != report.witness_word.rend(); ++it) {
    report.witness_cycle.push_back(graph.faces[node].key);
    node = graph.next[*it][node];
  }
  if (node != best_start) throw InternalError("witness word does not close the face cycle");
  report.decide_ms = elapsed_ms(start);
  if (report.min_period > pstar)
    throw InternalError("shortest noncontracting cycle has length " + std::to_string(report.min_period) +
                        ", exceeding the bound p* = " + std::to_string(pstar));
  return report;
}

DecisionReport decide(const SeminormBall& ball, const MatrixSet& sigma) {
  const auto start = std::chrono::steady_clock::now();
  auto poset = build_poset(ball);
  const std::size_t pstar = width(poset.order).size;
  auto graph = build_graph(ball, sigma, std::move(poset.faces));
  const double build = elapsed_ms(start);
  auto report = decide(graph, pstar);
  report.build_ms = build;
  return report;
}

bool word_orbit_contracts(const TransitionGraph& graph, const Word& word) {
  if (word.empty()) throw InputError("word must be nonempty");
  const std::size_t nf = graph.faces.size();
  for (std::size_t f = 0; f < nf; ++f) {
    std::size_t node = f;
    bool reached = false;
    for (std::size_t rep = 0; rep < graph.node_count(); ++rep) {
      node = graph.follow(node, word);
      if (node == graph.interior()) {
        reached = true;
        break;
      }
    }
    if (!reached) return false;
  }
  return true;
}

GraphStats graph_stats(const TransitionGraph& graph) {
  GraphStats s;
  s.faces = graph.faces.size();
  s.matrices = graph.matrix_count;
  s.edges = s.faces * s.matrices;
  for (const auto& row : graph.next)
    for (std::size_t i = 0; i < graph.faces.size(); ++i)
      if (row[i] == graph.interior()) ++s.edges_to_interior;
  return s;
}

std::string to_string(Verdict verdict) {
  return verdict == Verdict::AllContracting ? "all-contracting" : "noncontracting";
}

}  // namespace polystab

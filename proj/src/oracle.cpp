#include "polystab/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "polystab/errors.hpp"
#include "polystab/parallel.hpp"
#include "polystab/poset.hpp"

namespace polystab {
namespace {

struct Tracked {
  std::size_t face;     // starting face
  std::size_t current;  // face reached so far
  Vector point;         // exact image of the starting point
};

// True iff the map (faces -> faces or interior == size) has a cycle among
// proper faces.
bool has_proper_cycle(const std::vector<std::size_t>& next) {
  const std::size_t nf = next.size();
  std::vector<std::uint8_t> state(nf, 0);  // 0 new, 1 on current path, 2 finished
  for (std::size_t s = 0; s < nf; ++s) {
    std::size_t v = s;
    std::vector<std::size_t> path;
    while (v < nf && state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      v = next[v];
    }
    if (v < nf && state[v] == 1) return true;
    for (auto u : path) state[u] = 2;
  }
  return false;
}

class LevelSearch {
 public:
  LevelSearch(const SeminormBall& ball, const MatrixSet& sigma, const std::vector<FaceInfo>& faces,
              std::size_t length, std::atomic<std::uint64_t>& work, std::uint64_t budget)
      : ball_(ball), sigma_(sigma), faces_(faces), length_(length), work_(work), budget_(budget) {}

  // Explores the subtree of prenecklaces (application order) that start
  // with `first`.
  void run(std::size_t first, const std::vector<Tracked>& roots) {
    std::vector<std::size_t> letters{first};
    descend(letters, 1, extend(roots, first));
  }

  std::vector<Word> found;
  std::uint64_t evaluated = 0;
  std::uint64_t alive_at_end = 0;

 private:
  void charge() {
    if (work_.fetch_add(1) + 1 > budget_)
      throw BudgetExceededError("oracle work budget of " + std::to_string(budget_) + " exhausted at length " +
                                std::to_string(length_));
  }

  std::size_t index_of(const DoubleFaceKey& key) const {
    auto it = std::lower_bound(faces_.begin(), faces_.end(), key,
                               [](const FaceInfo& f, const DoubleFaceKey& k) { return f.key < k; });
    if (it == faces_.end() || it->key != key) throw InternalError("located face missing from enumeration");
    return static_cast<std::size_t>(it - faces_.begin());
  }

  std::vector<Tracked> extend(const std::vector<Tracked>& alive, std::size_t letter) {
    charge();
    std::vector<Tracked> out;
    for (const auto& t : alive) {
      Vector y = polystab::apply(sigma_[letter], t.point);
      const auto loc = locate(ball_, y);
      if (loc.is_interior()) continue;
      out.push_back({t.face, index_of(loc.key()), std::move(y)});
    }
    return out;
  }

  // `period` is the length of the longest Lyndon prefix (FKM).
  void descend(std::vector<std::size_t>& letters, std::size_t period, const std::vector<Tracked>& alive) {
    const std::size_t depth = letters.size();
    if (depth == length_) {
      if (!alive.empty()) ++alive_at_end;
      if (length_ % period == 0) evaluate(letters, alive);
      return;
    }
    if (alive.empty()) return;  // every extension contracts
    for (std::size_t j = letters[depth - period]; j < sigma_.size(); ++j) {
      letters.push_back(j);
      descend(letters, j == letters[depth - period] ? period : depth + 1, extend(alive, j));
      letters.pop_back();
    }
  }

  void evaluate(const std::vector<std::size_t>& letters, const std::vector<Tracked>& alive) {
    charge();
    ++evaluated;
    std::vector<std::size_t> next(faces_.size(), faces_.size());
    for (const auto& t : alive) next[t.face] = t.current;
    if (has_proper_cycle(next)) found.emplace_back(letters.rbegin(), letters.rend());
  }

  const SeminormBall& ball_;
  const MatrixSet& sigma_;
  const std::vector<FaceInfo>& faces_;
  std::size_t length_;
  std::atomic<std::uint64_t>& work_;
  std::uint64_t budget_;
};

Integer ipow(std::size_t base, std::size_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

std::string word_text(const MatrixSet& sigma, const Word& w) {
  std::string s;
  for (auto k : w) s += (s.empty() ? "" : " ") + sigma.names()[k];
  return s.empty() ? "(none)" : s;
}

}  // namespace

std::size_t least_rotation(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  std::vector<std::size_t> s(w.begin(), w.end());
  s.insert(s.end(), w.begin(), w.end());
  std::vector<long> f(s.size(), -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < s.size(); ++j) {
    const std::size_t sj = s[j];
    long i = f[j - k - 1];
    while (i != -1 && sj != s[k + i + 1]) {
      if (sj < s[k + i + 1]) k = j - i - 1;
      i = f[i];
    }
    if (sj != s[k + i + 1]) {
      if (sj < s[k]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

Word canonical_rotation(const Word& w) {
  const std::size_t k = least_rotation(w);
  Word out(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

Integer necklace_count(std::size_t m, std::size_t len) {
  if (len == 0) return 1;
  Integer total = 0;
  for (std::size_t d = 1; d <= len; ++d) {
    if (len % d != 0) continue;
    std::size_t phi = d;
    for (std::size_t q = d, p = 2; p <= q; ++p) {
      if (q % p != 0) continue;
      while (q % p == 0) q /= p;
      phi -= phi / p;
    }
    total += Integer(static_cast<unsigned long>(phi)) * ipow(m, len / d);
  }
  return total / static_cast<unsigned long>(len);
}

OracleReport bruteforce_decide(const SeminormBall& ball, const MatrixSet& sigma, std::size_t max_period,
                               const OracleOptions& options) {
  if (max_period == 0) throw InputError("max_period must be at least 1");
  if (sigma.dim() != ball.dim()) throw InputError("matrix dimension does not match the ball");
  for (std::size_t k = 0; k < sigma.size(); ++k)
    if (!check_invariance(ball, sigma[k]))
      throw PreconditionError("matrix '" + sigma.names()[k] + "' is not nonincreasing for the seminorm");

  const auto faces = enumerate_double_faces(ball);
  std::vector<Tracked> roots;
  for (std::size_t i = 0; i < faces.size(); ++i)
    roots.push_back({i, i, relative_interior_point(ball, faces[i].key)});

  OracleReport report;
  report.max_period = max_period;
  std::atomic<std::uint64_t> work{0};
  const std::size_t m = sigma.size();

  for (std::size_t len = 1; len <= max_period; ++len) {
    std::vector<LevelSearch> parts;
    for (std::size_t j = 0; j < m; ++j) parts.emplace_back(ball, sigma, faces, len, work, options.budget);
    parallel_for(m, [&](std::size_t j) { parts[j].run(j, roots); });

    std::uint64_t alive = 0;
    std::vector<Word> found;
    for (auto& part : parts) {
      report.words_evaluated += part.evaluated;
      alive += part.alive_at_end;
      for (auto& w : part.found) found.push_back(canonical_rotation(w));
    }
    std::sort(found.begin(), found.end());
    report.noncontracting_words.insert(report.noncontracting_words.end(), found.begin(), found.end());
    report.words_checked += necklace_count(m, len);

    if (!found.empty() && options.stop_at_first) break;
    if (alive == 0) {
      report.settled_after = len;
      for (std::size_t rest = len + 1; rest <= max_period; ++rest) report.words_checked += necklace_count(m, rest);
      break;
    }
  }
  report.work = work.load();
  report.verdict = report.noncontracting_words.empty() ? Verdict::AllContracting : Verdict::Noncontracting;
  return report;
}

CrossValidation cross_validate(const SeminormBall& ball, const MatrixSet& sigma, const OracleOptions& options) {
  CrossValidation out;
  out.graph = decide(ball, sigma);
  out.oracle = bruteforce_decide(ball, sigma, out.graph.bound_pstar, options);
  out.agree = out.graph.verdict == out.oracle.verdict;
  if (!out.agree) {
    std::ostringstream os;
    os << "graph: " << to_string(out.graph.verdict) << ", witness " << word_text(sigma, out.graph.witness_word)
       << "; oracle: " << to_string(out.oracle.verdict) << ", witness "
       << word_text(sigma, out.oracle.noncontracting_words.empty() ? Word{} : out.oracle.noncontracting_words.front());
    out.details = os.str();
  }
  return out;
}

}  // namespace polystab

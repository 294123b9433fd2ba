#include "polystab/lp.hpp"

#include <limits>

#include "polystab/errors.hpp"

namespace polystab::lp {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  std::vector<std::vector<Rational>> rows;  // each row: coefficients, then rhs
  std::vector<std::size_t> basis;
  std::vector<Rational> reduced;            // reduced costs c_j - z_j
  Rational value;                           // current objective value
  std::vector<bool> allowed;                // columns that may enter

  std::size_t cols() const { return allowed.size(); }
  Rational& rhs(std::size_t r) { return rows[r].back(); }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows[r];
    const Rational piv = prow[c];
    if (piv != 1)
      for (auto& v : prow)
        if (sgn(v) != 0) v /= piv;
    Rational tmp;
    auto eliminate = [&](std::vector<Rational>& target, const Rational factor) {
      for (std::size_t j = 0; j < prow.size(); ++j) {
        if (sgn(prow[j]) == 0) continue;
        tmp = factor * prow[j];
        target[j] -= tmp;
      }
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      eliminate(rows[i], rows[i][c]);
    }
    if (sgn(reduced[c]) != 0) {
      const Rational factor = reduced[c];
      tmp = factor * prow.back();
      value += tmp;
      for (std::size_t j = 0; j + 1 < prow.size(); ++j) {
        if (sgn(prow[j]) == 0) continue;
        tmp = factor * prow[j];
        reduced[j] -= tmp;
      }
    }
    basis[r] = c;
  }

  void set_costs(const std::vector<Rational>& cost) {
    reduced = cost;
    value = 0;
    Rational tmp;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (sgn(cb) == 0) continue;
      tmp = cb * rows[i].back();
      value += tmp;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(rows[i][j]) == 0) continue;
        tmp = cb * rows[i][j];
        reduced[j] -= tmp;
      }
    }
  }

  // Returns false when unbounded.
  bool run() {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols(); ++j)
        if (allowed[j] && sgn(reduced[j]) > 0) {
          enter = j;
          break;
        }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best, ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (sgn(rows[i][enter]) <= 0) continue;
        ratio = rows[i].back() / rows[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

Solution maximize(const Problem& problem) {
  const std::size_t n = problem.num_vars;
  const std::size_t m = problem.constraints.size();
  if (!problem.objective.empty() && problem.objective.size() != n)
    throw InputError("lp: objective length mismatch");
  if (!problem.nonnegative.empty() && problem.nonnegative.size() != n)
    throw InputError("lp: sign vector length mismatch");

  // Column layout: structural columns (free variables split in two), slacks,
  // artificials.
  std::vector<std::size_t> pos_col(n), neg_col(n, kNone);
  std::size_t col = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = col++;
    const bool nonneg = !problem.nonnegative.empty() && problem.nonnegative[j];
    if (!nonneg) neg_col[j] = col++;
  }
  std::vector<std::size_t> slack_col(m, kNone);
  for (std::size_t i = 0; i < m; ++i)
    if (problem.constraints[i].rel == Relation::LessEqual) slack_col[i] = col++;
  std::vector<std::size_t> art_col(m, kNone);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = problem.constraints[i];
    if (!(con.rel == Relation::LessEqual && sgn(con.rhs) >= 0)) art_col[i] = col++;
  }
  const std::size_t total = col;

  Tableau t;
  t.rows.assign(m, std::vector<Rational>(total + 1));
  t.basis.assign(m, kNone);
  t.allowed.assign(total, true);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = problem.constraints[i];
    if (con.coeffs.size() != n) throw InputError("lp: constraint length mismatch");
    const bool flip = sgn(con.rhs) < 0;
    auto& row = t.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      Rational a = flip ? Rational(-con.coeffs[j]) : con.coeffs[j];
      if (neg_col[j] != kNone) row[neg_col[j]] = -a;
      row[pos_col[j]] = std::move(a);
    }
    if (slack_col[i] != kNone) row[slack_col[i]] = flip ? -1 : 1;
    row.back() = flip ? Rational(-con.rhs) : con.rhs;
    if (art_col[i] != kNone) {
      row[art_col[i]] = 1;
      t.basis[i] = art_col[i];
    } else {
      t.basis[i] = slack_col[i];
    }
  }

  // Phase 1: drive the artificials to zero.
  std::vector<Rational> cost(total);
  bool any_art = false;
  for (std::size_t i = 0; i < m; ++i)
    if (art_col[i] != kNone) {
      cost[art_col[i]] = -1;
      any_art = true;
    }
  if (any_art) {
    t.set_costs(cost);
    t.run();  // bounded by construction
    if (sgn(t.value) < 0) return Solution{Status::Infeasible, 0, {}};
    std::vector<bool> is_art(total, false);
    for (std::size_t i = 0; i < m; ++i)
      if (art_col[i] != kNone) is_art[art_col[i]] = true;
    for (std::size_t i = 0; i < t.rows.size();) {
      if (!is_art[t.basis[i]]) {
        ++i;
        continue;
      }
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < total; ++j)
        if (!is_art[j] && sgn(t.rows[i][j]) != 0) {
          enter = j;
          break;
        }
      if (enter == kNone) {  // redundant equality
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      t.pivot(i, enter);
      ++i;
    }
    for (std::size_t j = 0; j < total; ++j)
      if (is_art[j]) {
        t.allowed[j] = false;
        for (auto& row : t.rows) row[j] = 0;
      }
  }

  // Phase 2.
  std::fill(cost.begin(), cost.end(), Rational(0));
  for (std::size_t j = 0; j < n && !problem.objective.empty(); ++j) {
    cost[pos_col[j]] = problem.objective[j];
    if (neg_col[j] != kNone) cost[neg_col[j]] = -problem.objective[j];
  }
  t.set_costs(cost);
  const bool bounded = t.run();

  Solution sol;
  std::vector<Rational> colval(total);
  for (std::size_t i = 0; i < t.rows.size(); ++i) colval[t.basis[i]] = t.rows[i].back();
  sol.x.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    sol.x[j] = colval[pos_col[j]];
    if (neg_col[j] != kNone) sol.x[j] -= colval[neg_col[j]];
  }
  sol.status = bounded ? Status::Optimal : Status::Unbounded;
  sol.value = t.value;
  return sol;
}

}  // namespace polystab::lp

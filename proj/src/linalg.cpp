#include "polystab/linalg.hpp"

#include "polystab/errors.hpp"

namespace polystab::linalg {

RowEchelon rref(std::vector<Vector> rows, std::size_t ncols) {
  RowEchelon out;
  std::size_t lead = 0;
  Rational tmp;
  for (std::size_t col = 0; col < ncols && lead < rows.size(); ++col) {
    std::size_t sel = lead;
    while (sel < rows.size() && sgn(rows[sel][col]) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[lead], rows[sel]);
    const Rational piv = rows[lead][col];
    for (auto& v : rows[lead]) v /= piv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || sgn(rows[i][col]) == 0) continue;
      const Rational factor = rows[i][col];
      for (std::size_t j = 0; j < ncols; ++j) {
        if (sgn(rows[lead][j]) == 0) continue;
        tmp = factor * rows[lead][j];
        rows[i][j] -= tmp;
      }
    }
    out.pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  out.rows = std::move(rows);
  return out;
}

std::size_t rank(const std::vector<Vector>& rows, std::size_t ncols) {
  return rref(rows, ncols).pivots.size();
}

std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t ncols) {
  const auto ech = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> inverse(const std::vector<Vector>& rows) {
  const std::size_t n = rows.size();
  std::vector<Vector> aug(n, Vector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw InputError("inverse: matrix is not square");
    std::copy(rows[i].begin(), rows[i].end(), aug[i].begin());
    aug[i][n + i] = 1;
  }
  auto ech = rref(std::move(aug), 2 * n);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw InputError("inverse: singular matrix");
  std::vector<Vector> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(ech.rows[i].begin() + n, ech.rows[i].end());
  return inv;
}

}  // namespace polystab::linalg

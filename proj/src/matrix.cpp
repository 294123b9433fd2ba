#include "polystab/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "polystab/errors.hpp"

namespace polystab {

Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw InputError("invalid rational entry '" + std::string(text) + "'"); };
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) fail();

  auto all_digits = [](std::string_view v) {
    return !v.empty() && std::all_of(v.begin(), v.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  bool negative = false;
  std::string_view body(s);
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    Integer d(std::string(den), 10);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    value = Rational(Integer(std::string(num), 10), d);
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      fail();
    std::string digits = std::string(whole) + std::string(frac);
    Integer num(digits.empty() ? std::string("0") : digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    value = Rational(num, den);
    value.canonicalize();
  } else {
    if (!all_digits(body)) fail();
    value = Rational(Integer(std::string(body), 10));
  }
  if (negative) value = -value;
  return value;
}

Rational fraction(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw InputError("matrix has no rows");
  Matrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size())
      throw InputError("matrix is not square: row " + std::to_string(r + 1) + " has " +
                       std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(rows.size()));
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * m.dim_);
  }
  return m;
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim())
    throw InputError("mat_mul: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
  const std::size_t n = a.dim();
  Matrix out(n);
  Rational tmp;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        tmp = a(i, k) * b(k, j);
        out(i, j) += tmp;
      }
    }
  return out;
}

Vector apply(const Matrix& a, std::span<const Rational> x) {
  if (a.dim() != x.size())
    throw InputError("apply: matrix dimension " + std::to_string(a.dim()) +
                     " does not match vector length " + std::to_string(x.size()));
  Vector y(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) y[i] = dot(a.row(i), x);
  return y;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InputError("dot: length mismatch");
  Rational acc = 0, tmp;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    tmp = a[i] * b[i];
    acc += tmp;
  }
  return acc;
}

bool is_stochastic(const Matrix& a) {
  for (std::size_t r = 0; r < a.dim(); ++r) {
    Rational sum = 0;
    for (const auto& v : a.row(r)) {
      if (sgn(v) < 0) return false;
      sum += v;
    }
    if (sum != 1) return false;
  }
  return true;
}

MatrixSet::MatrixSet(std::vector<Matrix> matrices, std::vector<std::string> names)
    : matrices_(std::move(matrices)), names_(std::move(names)) {
  if (matrices_.empty()) throw InputError("matrix set is empty");
  const std::size_t n = matrices_.front().dim();
  if (n == 0) throw InputError("matrix dimension must be positive");
  for (std::size_t i = 0; i < matrices_.size(); ++i)
    if (matrices_[i].dim() != n)
      throw InputError("matrix " + std::to_string(i + 1) + " has dimension " +
                       std::to_string(matrices_[i].dim()) + ", expected " + std::to_string(n));
  if (names_.empty()) names_.resize(matrices_.size());
  if (names_.size() != matrices_.size()) throw InputError("number of names differs from number of matrices");
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i].empty()) names_[i] = "A" + std::to_string(i + 1);
  std::set<std::string> seen;
  for (const auto& name : names_)
    if (!seen.insert(name).second) throw InputError("duplicate matrix name '" + name + "'");
}

Matrix word_product(const MatrixSet& sigma, std::span<const std::size_t> word) {
  Matrix p = Matrix::identity(sigma.dim());
  for (std::size_t idx : word) {
    if (idx >= sigma.size()) throw InputError("word index out of range");
    p = mat_mul(p, sigma[idx]);
  }
  return p;
}

}  // namespace polystab

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polystab/rational.hpp"

namespace polystab {

using Vector = std::vector<Rational>;

// Dense square matrix over the rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim);  // zero matrix
  // Throws InputError unless rows form a nonempty square grid.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * dim_, dim_};
  }

  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

// Exact product a * b. Throws InputError on dimension mismatch.
Matrix mat_mul(const Matrix& a, const Matrix& b);

// Exact a * x. Throws InputError on dimension mismatch.
Vector apply(const Matrix& a, std::span<const Rational> x);

// Nonnegative entries and every row summing to exactly one.
bool is_stochastic(const Matrix& a);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

// Finite ordered set of equally sized square matrices, optionally named.
class MatrixSet {
 public:
  // Throws InputError when empty, when dimensions differ, or when names
  // collide. Missing or empty names default to "A1", "A2", ...
  MatrixSet(std::vector<Matrix> matrices, std::vector<std::string> names = {});

  std::size_t dim() const noexcept { return matrices_.front().dim(); }
  std::size_t size() const noexcept { return matrices_.size(); }
  const Matrix& operator[](std::size_t i) const { return matrices_[i]; }
  const std::vector<Matrix>& matrices() const noexcept { return matrices_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::vector<Matrix> matrices_;
  std::vector<std::string> names_;
};

// Product of a word given in written order: word[0] is applied last, so the
// result is A_{w[0]} * ... * A_{w[k-1]}.
Matrix word_product(const MatrixSet& sigma, std::span<const std::size_t> word);

}  // namespace polystab

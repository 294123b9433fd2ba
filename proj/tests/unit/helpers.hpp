#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "polystab/ball.hpp"
#include "polystab/matrix.hpp"
#include "polystab/rational.hpp"

namespace testing {

using namespace polystab;

inline Rational R(const char* text) { return parse_rational(text); }

inline Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Rational>> grid;
  for (auto row : rows) {
    std::vector<Rational> r;
    for (auto v : row) r.push_back(parse_rational(v));
    grid.push_back(std::move(r));
  }
  return Matrix::from_rows(grid);
}

inline Vector vec(std::initializer_list<const char*> entries) {
  Vector v;
  for (auto e : entries) v.push_back(parse_rational(e));
  return v;
}

inline Matrix sample_a1() { return mat({{"1/2", "0", "1/2"}, {"1", "0", "0"}, {"0", "1/2", "1/2"}}); }
inline Matrix sample_a2() { return mat({{"0", "1", "0"}, {"1/2", "0", "1/2"}, {"1", "0", "0"}}); }
inline MatrixSet sample_set() { return MatrixSet({sample_a1(), sample_a2()}); }

inline Matrix averaging(std::size_t n) {
  Matrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = fraction(1, static_cast<long>(n));
  return a;
}

// Sends x_i to x_{i+1 mod n}.
inline Matrix cyclic_permutation(std::size_t n) {
  Matrix a(n);
  for (std::size_t r = 0; r < n; ++r) a(r, (r + 1) % n) = 1;
  return a;
}

inline Rational random_rational(std::mt19937_64& rng, long range, long den_max = 6) {
  std::uniform_int_distribution<long> num(-range * den_max, range * den_max);
  std::uniform_int_distribution<long> den(1, den_max);
  return fraction(num(rng), den(rng));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  Matrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = random_rational(rng, 3);
  return a;
}

// Rows supported on 1..3 random columns with integer weights 1..3.
inline Matrix random_stochastic(std::mt19937_64& rng, std::size_t n) {
  Matrix a(n);
  std::vector<std::size_t> cols(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    const std::size_t k = std::min<std::size_t>(n, 1 + rng() % 3);
    std::vector<long> w(k);
    for (auto& x : w) x = 1 + static_cast<long>(rng() % 3);
    const long total = std::accumulate(w.begin(), w.end(), 0L);
    for (std::size_t i = 0; i < k; ++i) a(r, cols[i]) = fraction(w[i], total);
  }
  return a;
}

inline MatrixSet random_stochastic_set(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<Matrix> mats;
  for (std::size_t k = 0; k < m; ++k) mats.push_back(random_stochastic(rng, n));
  return MatrixSet(std::move(mats));
}

// Random point with max - min exactly 2 (a boundary point of the consensus
// ball), with ties planted so that low-dimensional faces also occur.
inline Vector random_consensus_boundary(std::mt19937_64& rng, std::size_t n) {
  const Rational lo = random_rational(rng, 2);
  Vector x(n);
  for (auto& v : x) {
    switch (rng() % 4) {
      case 0: v = lo; break;
      case 1: v = lo + 2; break;
      default: v = lo + fraction(static_cast<long>(rng() % 7) + 1, 4); break;  // lo + (0, 2)
    }
  }
  const std::size_t i = rng() % n;
  const std::size_t j = (i + 1 + rng() % (n - 1)) % n;
  x[i] = lo;
  x[j] = lo + 2;
  return x;
}

inline std::vector<Vector> axis_normals(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n, 0);
    e[i] = 1;
    out.push_back(e);
  }
  return out;
}

inline SeminormBall cube_ball(std::size_t n) { return SeminormBall::from_normals(axis_normals(n)); }

// Unit ball of the l1 norm: normals (+-1, ..., +-1) with first entry +1.
inline SeminormBall cross_ball(std::size_t n) {
  std::vector<Vector> normals;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    Vector b(n, 1);
    for (std::size_t i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1U) b[i] = -1;
    normals.push_back(b);
  }
  return SeminormBall::from_normals(normals);
}

inline SeminormBall interval_ball() { return SeminormBall::from_normals({vec({"1"})}); }

inline std::string fixture(const std::string& name) { return std::string(POLYSTAB_FIXTURE_DIR) + "/" + name; }

}  // namespace testing

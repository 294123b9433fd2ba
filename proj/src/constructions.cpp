#include "polystab/constructions.hpp"

#include <algorithm>

#include "polystab/consensus_face.hpp"
#include "polystab/errors.hpp"
#include "polystab/facemap.hpp"
#include "polystab/parallel.hpp"
#include "polystab/poset.hpp"
#include "polystab/stochastic.hpp"

namespace polystab {
namespace {

std::string describe(const DoubleFaceKey& key) {
  std::string s;
  for (auto t : key.pattern()) s += t == Tightness::Minus ? '-' : t == Tightness::Plus ? '+' : '0';
  return s;
}

Matrix outer(const Vector& v, const Vector& b) {
  Matrix a(v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < b.size(); ++c) a(r, c) = v[r] * b[c];
  return a;
}

// Matrix i must send every face inside closed cycle[i] onto cycle[i+1] and
// every other face to the interior.
void verify_cycle(const SeminormBall& ball, const Construction& out, const std::vector<FaceInfo>& faces) {
  const std::size_t p = out.cycle.size();
  parallel_for(p, [&](std::size_t i) {
    const Matrix& a = out.sigma[i];
    const auto& from = out.cycle[i];
    const auto& to = out.cycle[(i + 1) % p];
    if (!check_invariance(ball, a))
      throw ConstructionError("matrix " + out.sigma.names()[i] + " does not leave the ball invariant");
    for (const auto& g : faces) {
      const auto image = face_image_unchecked(ball, a, g.key);
      const bool inside = g.key == from || face_contained_in(g.key.pattern(), from.pattern());
      if (inside && (image.is_interior() || image.key() != to))
        throw ConstructionError("matrix " + out.sigma.names()[i] + " sends face " + describe(g.key) +
                                " of the closed face " + describe(from) + " off the target " + describe(to));
      if (!inside && !image.is_interior())
        throw ConstructionError("matrix " + out.sigma.names()[i] + " keeps face " + describe(g.key) +
                                " on the boundary");
    }
  });
}

}  // namespace

SupportingFunctional supporting_functional(const SeminormBall& ball, const FacePattern& oriented) {
  if (oriented.size() != ball.constraint_count())
    throw InputError("pattern length does not match the number of constraints");
  const Vector x = relative_interior_point(ball, oriented);  // throws InfeasibleError

  Vector b(ball.dim(), 0);
  std::size_t tight = 0;
  for (std::size_t i = 0; i < oriented.size(); ++i) {
    if (oriented[i] == Tightness::Slack) continue;
    const int sign = oriented[i] == Tightness::Plus ? 1 : -1;
    for (std::size_t j = 0; j < b.size(); ++j) b[j] += sign * ball.normals()[i][j];
    ++tight;
  }
  if (tight == 0) throw InputError("supporting functional needs a proper face");
  for (auto& v : b) v /= static_cast<long>(tight);

  if (dot(b, x) != 1) throw ConstructionError("supporting functional is not 1 on its face");
  const auto best = maximize_over_ball(ball, b);
  if (!best || *best != 1) throw ConstructionError("supporting functional exceeds 1 on the ball");
  return {std::move(b), DoubleFaceKey(oriented)};
}

SupportingFunctional supporting_functional(const SeminormBall& ball, const DoubleFaceKey& face) {
  return supporting_functional(ball, face.pattern());
}

Construction construct_general(const SeminormBall& ball) {
  const auto poset = build_poset(ball);
  if (poset.faces.empty()) throw InputError("ball has no proper double-face");
  const auto w = width(poset.order);

  Construction out{MatrixSet({Matrix::identity(ball.dim())}), {}, w.size, {}};
  for (auto idx : w.antichain) out.cycle.push_back(poset.faces[idx].key);
  const std::size_t p = out.cycle.size();

  std::vector<Matrix> mats(p);
  parallel_for(p, [&](std::size_t i) {
    const Vector v = relative_interior_point(ball, out.cycle[(i + 1) % p]);
    mats[i] = outer(v, supporting_functional(ball, out.cycle[i]).b);
  });
  out.sigma = MatrixSet(std::move(mats));

  verify_cycle(ball, out, poset.faces);
  out.checks = {"every matrix leaves the unit ball invariant",
                "matrix i maps the closed face F_i onto the open face F_{i+1 mod p}",
                "matrix i maps every point outside the closed face F_i into the interior"};
  return out;
}

Construction construct_stochastic(std::size_t n) {
  const auto ball = consensus_ball(n);
  const std::size_t d = dstar(n);
  std::vector<ConsensusFace> antichain;
  for (auto& f : enumerate_consensus_faces(n))
    if (f.dimension() == d) antichain.push_back(std::move(f));
  if (antichain.size() != pstar(n))
    throw ConstructionError("dimension-" + std::to_string(d) + " level has " + std::to_string(antichain.size()) +
                            " faces, expected " + std::to_string(pstar(n)));

  const std::size_t p = antichain.size();
  std::vector<Matrix> mats(p, Matrix(n));
  for (std::size_t i = 0; i < p; ++i) {
    const auto& from = antichain[i];
    const auto& to = antichain[(i + 1) % p];
    Matrix& a = mats[i];
    std::vector<int> block(n, 0);  // row block of F_{i+1}: -1 min, +1 max, 0 middle
    for (auto r : to.s_min) block[r] = -1;
    for (auto r : to.s_max) block[r] = 1;
    for (std::size_t r = 0; r < n; ++r) {
      if (block[r] == 0) {
        for (std::size_t c = 0; c < n; ++c) a(r, c) = Rational(1, n);
        continue;
      }
      const auto& support = block[r] < 0 ? from.s_min : from.s_max;
      for (auto c : support) a(r, c) = Rational(1, support.size());
    }
  }

  Construction out{MatrixSet(std::move(mats)), {}, p, {}};
  for (const auto& f : antichain) out.cycle.push_back(consensus_key(f));
  for (std::size_t i = 0; i < p; ++i)
    if (!is_stochastic(out.sigma[i]))
      throw ConstructionError("matrix " + out.sigma.names()[i] + " is not stochastic");
  verify_cycle(ball, out, enumerate_double_faces(ball));
  out.checks = {"every matrix is stochastic with positive entries on its block support",
                "matrix i maps the closed face F_i onto the open face F_{i+1 mod p}",
                "matrix i maps every point outside the closed face F_i into the interior"};
  return out;
}

}  // namespace polystab

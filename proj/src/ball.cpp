#include "polystab/ball.hpp"

#include <algorithm>
#include <string>

#include "polystab/consensus_face.hpp"
#include "polystab/errors.hpp"
#include "polystab/linalg.hpp"
#include "polystab/lp.hpp"

namespace polystab {

// Normals rewritten in a basis B of their span: b_i = coords[i]^T B. Any
// x with B x = y has b_i^T x = coords[i] . y, and lift(y) returns one such x.
struct SeminormBall::Reduced {
  std::size_t rank = 0;
  std::vector<Vector> coords;
  std::vector<std::size_t> pivot_cols;
  std::vector<Vector> basis_pivot_inverse;  // (B restricted to pivot columns)^-1
};

namespace {

using Reduced = SeminormBall::Reduced;

// Per-constraint status while building patterns; Unassigned only appears in
// partial patterns during enumeration.
enum class Status : std::uint8_t { Minus = 0, Slack = 1, Plus = 2, Unassigned = 3 };

struct PatternPoint {
  Vector y;       // reduced coordinates
  Rational margin;  // min over Slack constraints of 1 - |value|, capped at 1
};

Vector lift(const Reduced& red, std::size_t dim, const Vector& y) {
  Vector x(dim, 0);
  for (std::size_t r = 0; r < red.rank; ++r) x[red.pivot_cols[r]] = dot(red.basis_pivot_inverse[r], y);
  return x;
}

// Maximize the strict-inequality margin t subject to the pattern. Returns
// nullopt when the pattern (partial or full) has no point with t > 0.
std::optional<PatternPoint> solve_pattern(const Reduced& red, std::span<const Status> statuses) {
  const std::size_t r = red.rank;
  lp::Problem prob;
  prob.num_vars = r + 1;  // y, t
  auto row = [&](const Vector& c, int sign, bool with_t) {
    Vector coeffs(r + 1, 0);
    for (std::size_t k = 0; k < r; ++k) coeffs[k] = sign > 0 ? c[k] : Rational(-c[k]);
    if (with_t) coeffs[r] = 1;
    return coeffs;
  };
  for (std::size_t i = 0; i < statuses.size(); ++i) {
    const Vector& c = red.coords[i];
    switch (statuses[i]) {
      case Status::Minus:
        prob.constraints.push_back({row(c, 1, false), lp::Relation::Equal, -1});
        break;
      case Status::Plus:
        prob.constraints.push_back({row(c, 1, false), lp::Relation::Equal, 1});
        break;
      case Status::Slack:
        prob.constraints.push_back({row(c, 1, true), lp::Relation::LessEqual, 1});
        prob.constraints.push_back({row(c, -1, true), lp::Relation::LessEqual, 1});
        break;
      case Status::Unassigned:
        prob.constraints.push_back({row(c, 1, false), lp::Relation::LessEqual, 1});
        prob.constraints.push_back({row(c, -1, false), lp::Relation::LessEqual, 1});
        break;
    }
  }
  Vector cap(r + 1, 0);
  cap[r] = 1;
  prob.constraints.push_back({cap, lp::Relation::LessEqual, 1});
  prob.objective = cap;
  auto sol = lp::maximize(prob);
  if (sol.status != lp::Status::Optimal || sgn(sol.value) <= 0) return std::nullopt;
  PatternPoint out;
  out.margin = sol.value;
  out.y.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(r));
  return out;
}

bool status_holds(const Rational& value, Status s) {
  switch (s) {
    case Status::Minus: return value == -1;
    case Status::Plus: return value == 1;
    case Status::Slack: return value < 1 && value > -1;
    case Status::Unassigned: return value <= 1 && value >= -1;
  }
  return false;
}

std::vector<Status> to_status(const FacePattern& pattern) {
  std::vector<Status> s(pattern.size());
  std::transform(pattern.begin(), pattern.end(), s.begin(),
                 [](Tightness t) { return static_cast<Status>(t); });
  return s;
}

void check_pattern_size(const SeminormBall& ball, const FacePattern& pattern) {
  if (pattern.size() != ball.constraint_count())
    throw InputError("face pattern has " + std::to_string(pattern.size()) + " entries, ball has " +
                     std::to_string(ball.constraint_count()) + " constraints");
}

void check_dim(const SeminormBall& ball, std::size_t n) {
  if (n != ball.dim())
    throw InputError("dimension mismatch: ball has dimension " + std::to_string(ball.dim()) +
                     ", got " + std::to_string(n));
}

}  // namespace

FacePattern flip(const FacePattern& pattern) {
  FacePattern out(pattern.size());
  std::transform(pattern.begin(), pattern.end(), out.begin(), [](Tightness t) {
    return t == Tightness::Plus ? Tightness::Minus : t == Tightness::Minus ? Tightness::Plus : t;
  });
  return out;
}

DoubleFaceKey::DoubleFaceKey(FacePattern pattern) {
  if (std::all_of(pattern.begin(), pattern.end(), [](Tightness t) { return t == Tightness::Slack; }))
    throw InputError("a double-face pattern needs at least one tight constraint");
  auto flipped = flip(pattern);
  pattern_ = std::min(std::move(pattern), std::move(flipped));
}

std::size_t DoubleFaceKey::tight_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(pattern_.begin(), pattern_.end(), [](Tightness t) { return t != Tightness::Slack; }));
}

SeminormBall SeminormBall::from_normals(std::vector<Vector> normals) {
  if (normals.empty()) throw InputError("ball needs at least one normal");
  const std::size_t n = normals.front().size();
  if (n == 0) throw InputError("ball dimension must be positive");
  SeminormBall ball;
  ball.dim_ = n;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    auto& b = normals[i];
    if (b.size() != n)
      throw InputError("normal " + std::to_string(i + 1) + " has length " + std::to_string(b.size()) +
                       ", expected " + std::to_string(n));
    auto first = std::find_if(b.begin(), b.end(), [](const Rational& v) { return sgn(v) != 0; });
    if (first == b.end()) throw InputError("normal " + std::to_string(i + 1) + " is the zero vector");
    if (sgn(*first) < 0)
      for (auto& v : b) v = -v;
    if (std::find(ball.normals_.begin(), ball.normals_.end(), b) == ball.normals_.end())
      ball.normals_.push_back(std::move(b));
  }
  ball.build_reduced();
  return ball;
}

SeminormBall SeminormBall::consensus(std::size_t n) {
  if (n < 2) throw InputError("consensus ball needs n >= 2");
  std::vector<Vector> normals;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector b(n, 0);
      b[i] = Rational(1, 2);
      b[j] = Rational(-1, 2);
      normals.push_back(std::move(b));
    }
  auto ball = from_normals(std::move(normals));
  ball.consensus_ = true;
  return ball;
}

SeminormBall SeminormBall::generic() const {
  SeminormBall copy = *this;
  copy.consensus_ = false;
  return copy;
}

void SeminormBall::build_reduced() {
  auto red = std::make_shared<Reduced>();
  basis_.clear();
  std::size_t current_rank = 0;
  for (const auto& b : normals_) {
    basis_.push_back(b);
    const auto r = linalg::rank(basis_, dim_);
    if (r == current_rank) basis_.pop_back();
    else current_rank = r;
  }
  red->rank = basis_.size();
  red->pivot_cols = linalg::rref(basis_, dim_).pivots;
  std::vector<Vector> bp(red->rank, Vector(red->rank));
  for (std::size_t i = 0; i < red->rank; ++i)
    for (std::size_t k = 0; k < red->rank; ++k) bp[i][k] = basis_[i][red->pivot_cols[k]];
  // B_P is r x r (rows = basis normals, columns = pivots); x_P = B_P^-1 y.
  red->basis_pivot_inverse = linalg::inverse(bp);
  // coords: b_i restricted to pivots = c_i^T B_P  =>  c_i^T = b_iP^T B_P^-1.
  for (const auto& b : normals_) {
    Vector c(red->rank, 0);
    for (std::size_t k = 0; k < red->rank; ++k)
      for (std::size_t j = 0; j < red->rank; ++j) c[k] += b[red->pivot_cols[j]] * red->basis_pivot_inverse[j][k];
    red->coords.push_back(std::move(c));
  }
  reduced_ = std::move(red);
}

Vector SeminormBall::constraint_values(std::span<const Rational> x) const {
  check_dim(*this, x.size());
  Vector v(normals_.size());
  for (std::size_t i = 0; i < normals_.size(); ++i) v[i] = dot(normals_[i], x);
  return v;
}

Rational seminorm_value(const SeminormBall& ball, std::span<const Rational> x) {
  Rational best = 0;
  for (const auto& v : ball.constraint_values(x)) {
    Rational a = abs(v);
    if (a > best) best = std::move(a);
  }
  return best;
}

FacePattern pattern_at(const SeminormBall& ball, std::span<const Rational> x) {
  const auto values = ball.constraint_values(x);
  FacePattern p(values.size(), Tightness::Slack);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > 1 || values[i] < -1)
      throw OutsideBallError("point lies outside the unit ball (constraint " + std::to_string(i + 1) + ")");
    if (values[i] == 1) p[i] = Tightness::Plus;
    else if (values[i] == -1) p[i] = Tightness::Minus;
  }
  return p;
}

FaceLocation locate(const SeminormBall& ball, std::span<const Rational> x) {
  if (ball.is_consensus()) {
    check_dim(ball, x.size());
    auto face = locate_consensus(x);
    return face ? FaceLocation::proper(consensus_key(*face)) : FaceLocation::interior();
  }
  auto p = pattern_at(ball, x);
  if (std::all_of(p.begin(), p.end(), [](Tightness t) { return t == Tightness::Slack; }))
    return FaceLocation::interior();
  return FaceLocation::proper(DoubleFaceKey(std::move(p)));
}

bool is_realizable(const SeminormBall& ball, const FacePattern& pattern) {
  check_pattern_size(ball, pattern);
  if (ball.is_consensus()) return consensus_face_from_pattern(ball.dim(), pattern).has_value();
  if (std::all_of(pattern.begin(), pattern.end(), [](Tightness t) { return t == Tightness::Slack; }))
    return false;
  const auto st = to_status(pattern);
  return solve_pattern(ball.reduced(), st).has_value();
}

std::size_t face_dimension(const SeminormBall& ball, const FacePattern& pattern) {
  check_pattern_size(ball, pattern);
  std::vector<Vector> tight;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    if (pattern[i] != Tightness::Slack) tight.push_back(ball.normals()[i]);
  return ball.dim() - linalg::rank(tight, ball.dim());
}

std::vector<FaceInfo> enumerate_double_faces(const SeminormBall& ball) {
  std::vector<FaceInfo> out;
  if (ball.is_consensus()) {
    for (const auto& f : enumerate_consensus_faces(ball.dim()))
      out.push_back({consensus_key(f), f.dimension()});
    return out;
  }
  const Reduced& red = ball.reduced();
  const std::size_t m = ball.constraint_count();
  std::vector<Status> st(m, Status::Unassigned);

  // Depth-first over constraints in order, children Minus < Slack < Plus so
  // leaves come out sorted. Before the first tight constraint only Minus is
  // allowed as the tight choice (canonical orientation). A parent's witness
  // point is reused whenever it already satisfies the child's status.
  auto recurse = [&](auto&& self, std::size_t k, bool any_tight, const PatternPoint& witness) -> void {
    if (k == m) {
      if (!any_tight) return;
      FacePattern p(m);
      std::transform(st.begin(), st.end(), p.begin(), [](Status s) { return static_cast<Tightness>(s); });
      out.push_back({DoubleFaceKey(p), face_dimension(ball, p)});
      return;
    }
    const Rational value = dot(red.coords[k], witness.y);
    for (Status s : {Status::Minus, Status::Slack, Status::Plus}) {
      if (s == Status::Plus && !any_tight) continue;
      st[k] = s;
      if (status_holds(value, s)) {
        PatternPoint child = witness;
        if (s == Status::Slack) {
          Rational room = 1 - abs(value);
          if (room < child.margin) child.margin = std::move(room);
        }
        self(self, k + 1, any_tight || s != Status::Slack, child);
      } else if (auto child = solve_pattern(red, st)) {
        self(self, k + 1, any_tight || s != Status::Slack, *child);
      }
      st[k] = Status::Unassigned;
    }
  };
  auto root = solve_pattern(red, st);
  if (root) recurse(recurse, 0, false, *root);
  return out;
}

Vector relative_interior_point(const SeminormBall& ball, const FacePattern& pattern) {
  check_pattern_size(ball, pattern);
  if (ball.is_consensus()) {
    auto face = consensus_face_from_pattern(ball.dim(), pattern);
    if (!face) throw InfeasibleError("pattern is not a face of the consensus ball");
    return consensus_interior_point(*face);
  }
  if (std::all_of(pattern.begin(), pattern.end(), [](Tightness t) { return t == Tightness::Slack; }))
    throw InfeasibleError("all-slack pattern describes the interior, not a face");
  const auto st = to_status(pattern);
  auto sol = solve_pattern(ball.reduced(), st);
  if (!sol) throw InfeasibleError("face pattern is not realizable");
  return lift(ball.reduced(), ball.dim(), sol->y);
}

Vector relative_interior_point(const SeminormBall& ball, const DoubleFaceKey& key) {
  return relative_interior_point(ball, key.pattern());
}

std::vector<Vector> relative_interior_points(const SeminormBall& ball, const DoubleFaceKey& key,
                                             std::size_t count) {
  std::vector<Vector> points;
  if (count == 0) return points;
  const Vector base = relative_interior_point(ball, key);
  points.push_back(base);
  Vector neg(base.size());
  std::transform(base.begin(), base.end(), neg.begin(), [](const Rational& v) { return Rational(-v); });
  if (points.size() < count && neg != base) points.push_back(neg);

  const auto& pattern = key.pattern();
  std::vector<Vector> tight;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    if (pattern[i] != Tightness::Slack) tight.push_back(ball.normals()[i]);
  const auto directions = linalg::nullspace(tight, ball.dim());
  if (directions.empty()) return points;

  const auto base_values = ball.constraint_values(base);
  Rational margin = 1;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    if (pattern[i] == Tightness::Slack) margin = std::min(margin, Rational(1 - abs(base_values[i])));
  for (std::size_t step = 1; points.size() < count; ++step) {
    const Vector& d = directions[(step - 1) % directions.size()];
    Rational spread = 1;
    for (const auto& v : ball.constraint_values(d)) spread += abs(v);
    const Rational scale = margin / (2 * spread * static_cast<long>(step));
    Vector p = base;
    for (std::size_t j = 0; j < p.size(); ++j) p[j] += scale * d[j];
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(std::move(p));
  }
  return points;
}

std::optional<Rational> maximize_over_ball(const SeminormBall& ball, std::span<const Rational> w) {
  check_dim(ball, w.size());
  // w^T x is bounded over the ball only if w vanishes on the kernel.
  for (const auto& z : linalg::nullspace(ball.normals(), ball.dim()))
    if (sgn(dot(w, z)) != 0) return std::nullopt;

  const Reduced& red = ball.reduced();
  const std::size_t r = red.rank;
  lp::Problem prob;
  prob.num_vars = r;
  for (const auto& c : red.coords) {
    Vector neg(c.size());
    std::transform(c.begin(), c.end(), neg.begin(), [](const Rational& v) { return Rational(-v); });
    prob.constraints.push_back({c, lp::Relation::LessEqual, 1});
    prob.constraints.push_back({std::move(neg), lp::Relation::LessEqual, 1});
  }
  // w lies in the span of the normals, so w^T x = d . y with d^T = w_P^T B_P^-1.
  Vector d(r, 0);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < r; ++j) d[k] += w[red.pivot_cols[j]] * red.basis_pivot_inverse[j][k];
  prob.objective = std::move(d);
  const auto sol = lp::maximize(prob);
  if (sol.status != lp::Status::Optimal) return std::nullopt;
  return sol.value;
}

bool check_invariance(const SeminormBall& ball, const Matrix& a) {
  check_dim(ball, a.dim());
  if (ball.is_consensus() && is_stochastic(a)) return true;
  const Matrix at = a.transpose();
  for (const auto& b : ball.normals()) {
    const auto best = maximize_over_ball(ball, polystab::apply(at, b));
    if (!best || *best > 1) return false;
  }
  return true;
}

bool face_contained_in(const FacePattern& lower, const FacePattern& upper) {
  if (lower.size() != upper.size()) return false;
  auto sub = [&](bool flipped) {
    for (std::size_t i = 0; i < upper.size(); ++i) {
      if (upper[i] == Tightness::Slack) continue;
      Tightness want = upper[i];
      if (flipped) want = want == Tightness::Plus ? Tightness::Minus : Tightness::Plus;
      if (lower[i] != want) return false;
    }
    return true;
  };
  return sub(false) || sub(true);
}

}  // namespace polystab

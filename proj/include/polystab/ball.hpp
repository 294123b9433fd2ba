#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "polystab/matrix.hpp"

namespace polystab {

// Status of one constraint pair |b_i^T x| <= 1 at a point.
enum class Tightness : std::uint8_t { Minus = 0, Slack = 1, Plus = 2 };

// Oriented face pattern: one Tightness per constraint pair. Describes a
// single open face G; its antipode -G has the flipped pattern.
using FacePattern = std::vector<Tightness>;

FacePattern flip(const FacePattern& pattern);

// Identifies an open double-face G u -G. The stored pattern is the
// lexicographically smaller of the two orientations (Minus < Slack < Plus),
// so key(x) == key(-x).
class DoubleFaceKey {
 public:
  DoubleFaceKey() = default;
  // Canonicalizes. Throws InputError for an all-Slack pattern.
  explicit DoubleFaceKey(FacePattern pattern);

  const FacePattern& pattern() const noexcept { return pattern_; }
  std::size_t size() const noexcept { return pattern_.size(); }
  std::size_t tight_count() const noexcept;

  auto operator<=>(const DoubleFaceKey&) const = default;
  bool operator==(const DoubleFaceKey&) const = default;

 private:
  FacePattern pattern_;
};

// Interior of the ball, or the open double-face containing a boundary point.
class FaceLocation {
 public:
  static FaceLocation interior() { return FaceLocation(); }
  static FaceLocation proper(DoubleFaceKey key) { return FaceLocation(std::move(key)); }

  bool is_interior() const noexcept { return !key_.has_value(); }
  const DoubleFaceKey& key() const { return key_.value(); }

  auto operator<=>(const FaceLocation&) const = default;
  bool operator==(const FaceLocation&) const = default;

 private:
  FaceLocation() = default;
  explicit FaceLocation(DoubleFaceKey key) : key_(std::move(key)) {}
  std::optional<DoubleFaceKey> key_;
};

struct FaceInfo {
  DoubleFaceKey key;
  std::size_t dim = 0;  // affine dimension of the closed face
};

// Unit ball { x : |b_i^T x| <= 1 for all i } of a polyhedral seminorm.
//
// All geometry runs on the constraint values b_i^T x. Internally the
// normals are expressed in a basis of their span, so the kernel (where the
// ball is unbounded) is quotiented out and linear programs stay bounded.
class SeminormBall {
 public:
  // Scales each normal so its first nonzero entry is positive and merges
  // duplicates, keeping first-occurrence order. Throws InputError on zero
  // normals, ragged input, or an empty list.
  static SeminormBall from_normals(std::vector<Vector> normals);

  // One normal (e_i - e_j)/2 per pair i < j, in lexicographic pair order.
  // The result answers face queries combinatorially.
  static SeminormBall consensus(std::size_t n);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t constraint_count() const noexcept { return normals_.size(); }
  const std::vector<Vector>& normals() const noexcept { return normals_; }
  std::size_t kernel_dim() const noexcept { return dim_ - basis_.size(); }
  bool is_consensus() const noexcept { return consensus_; }

  // Same ball with the combinatorial shortcuts disabled.
  SeminormBall generic() const;

  // b_i^T x for every i.
  Vector constraint_values(std::span<const Rational> x) const;

  // Implementation detail shared with the face routines in ball.cpp.
  struct Reduced;
  const Reduced& reduced() const { return *reduced_; }

 private:
  SeminormBall() = default;
  void build_reduced();

  std::size_t dim_ = 0;
  std::vector<Vector> normals_;
  std::vector<Vector> basis_;  // independent subset of the normals
  bool consensus_ = false;
  std::shared_ptr<const Reduced> reduced_;
};

// max_i |b_i^T x|.
Rational seminorm_value(const SeminormBall& ball, std::span<const Rational> x);

// Oriented pattern of a point with seminorm exactly 1 (no canonicalization).
FacePattern pattern_at(const SeminormBall& ball, std::span<const Rational> x);

// Throws OutsideBallError when the seminorm exceeds 1.
FaceLocation locate(const SeminormBall& ball, std::span<const Rational> x);

// Every realizable proper double-face exactly once, sorted by key.
std::vector<FaceInfo> enumerate_double_faces(const SeminormBall& ball);

bool is_realizable(const SeminormBall& ball, const FacePattern& pattern);

// Affine dimension of the closed face with this (realizable) pattern.
std::size_t face_dimension(const SeminormBall& ball, const FacePattern& pattern);

// A deterministic point of the oriented open face. Throws InfeasibleError
// when the pattern is not realizable.
Vector relative_interior_point(const SeminormBall& ball, const FacePattern& pattern);
Vector relative_interior_point(const SeminormBall& ball, const DoubleFaceKey& key);

// Up to `count` distinct points of the open double-face (the deterministic
// point, its antipode, and shifts along the face's affine hull).
std::vector<Vector> relative_interior_points(const SeminormBall& ball, const DoubleFaceKey& key,
                                             std::size_t count);

// Maximum of w^T x over the ball; nullopt when unbounded (w does not vanish
// on the kernel).
std::optional<Rational> maximize_over_ball(const SeminormBall& ball, std::span<const Rational> w);

// True iff ||A x|| <= ||x|| for every x, decided by exact LP per normal.
bool check_invariance(const SeminormBall& ball, const Matrix& a);

// Closed-face inclusion: the face of `lower` lies in the closed face of
// `upper` (for one of the two orientations).
bool face_contained_in(const FacePattern& lower, const FacePattern& upper);

}  // namespace polystab

#include "polystab/consensus_face.hpp"

#include <algorithm>
#include <string>

#include "polystab/errors.hpp"

namespace polystab {

ConsensusFace ConsensusFace::canonical() const {
  if (!s_min.empty() && !s_max.empty() && s_max.front() < s_min.front())
    return ConsensusFace{n, s_max, s_min};
  return *this;
}

ConsensusFace make_consensus_face(std::size_t n, std::vector<std::size_t> s_min,
                                  std::vector<std::size_t> s_max) {
  if (s_min.empty() || s_max.empty()) throw InputError("consensus face needs nonempty s_min and s_max");
  std::sort(s_min.begin(), s_min.end());
  std::sort(s_max.begin(), s_max.end());
  std::vector<bool> used(n, false);
  for (const auto* set : {&s_min, &s_max})
    for (auto i : *set) {
      if (i >= n) throw InputError("consensus face index " + std::to_string(i) + " out of range");
      if (used[i]) throw InputError("consensus face sets overlap or repeat index " + std::to_string(i));
      used[i] = true;
    }
  return ConsensusFace{n, std::move(s_min), std::move(s_max)}.canonical();
}

std::size_t consensus_pair_index(std::size_t n, std::size_t i, std::size_t j) {
  // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

FacePattern consensus_pattern(const ConsensusFace& face) {
  const std::size_t n = face.n;
  // role: 0 middle, 1 min, 2 max
  std::vector<int> role(n, 0);
  for (auto i : face.s_min) role[i] = 1;
  for (auto i : face.s_max) role[i] = 2;
  FacePattern pattern(n * (n - 1) / 2, Tightness::Slack);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto& t = pattern[consensus_pair_index(n, i, j)];
      if (role[i] == 1 && role[j] == 2) t = Tightness::Minus;       // (x_i - x_j)/2 = -1
      else if (role[i] == 2 && role[j] == 1) t = Tightness::Plus;
    }
  return pattern;
}

DoubleFaceKey consensus_key(const ConsensusFace& face) { return DoubleFaceKey(consensus_pattern(face)); }

std::optional<ConsensusFace> consensus_face_from_pattern(std::size_t n, const FacePattern& pattern) {
  if (n < 2 || pattern.size() != n * (n - 1) / 2) return std::nullopt;
  std::vector<int> role(n, 0);
  auto assign = [&](std::size_t i, int r) {
    if (role[i] != 0 && role[i] != r) return false;
    role[i] = r;
    return true;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto t = pattern[consensus_pair_index(n, i, j)];
      if (t == Tightness::Minus && !(assign(i, 1) && assign(j, 2))) return std::nullopt;
      if (t == Tightness::Plus && !(assign(i, 2) && assign(j, 1))) return std::nullopt;
    }
  ConsensusFace face{n, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (role[i] == 1) face.s_min.push_back(i);
    if (role[i] == 2) face.s_max.push_back(i);
  }
  if (face.s_min.empty() || face.s_max.empty()) return std::nullopt;
  if (consensus_pattern(face) != pattern) return std::nullopt;
  return face;
}

Vector consensus_interior_point(const ConsensusFace& face) {
  Vector x(face.n, 0);
  for (auto i : face.s_min) x[i] = -1;
  for (auto i : face.s_max) x[i] = 1;
  return x;
}

std::optional<ConsensusFace> locate_consensus(std::span<const Rational> x) {
  if (x.empty()) throw InputError("locate_consensus: empty vector");
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  const Rational range = *hi - *lo;
  if (range > 2) throw OutsideBallError("point lies outside the consensus ball (max - min > 2)");
  if (range < 2) return std::nullopt;
  ConsensusFace face{x.size(), {}, {}};
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == *lo) face.s_min.push_back(i);
    else if (x[i] == *hi) face.s_max.push_back(i);
  }
  return face.canonical();
}

std::vector<ConsensusFace> enumerate_consensus_faces(std::size_t n) {
  if (n < 2) throw InputError("consensus ball needs n >= 2");
  std::vector<std::pair<DoubleFaceKey, ConsensusFace>> faces;
  std::vector<int> role(n, 0);
  // Index 0 of the first non-middle coordinate must be in s_min (canonical).
  auto emit = [&] {
    ConsensusFace f{n, {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
      if (role[i] == 1) f.s_min.push_back(i);
      if (role[i] == 2) f.s_max.push_back(i);
    }
    if (f.s_min.empty() || f.s_max.empty() || f.s_min.front() > f.s_max.front()) return;
    faces.emplace_back(consensus_key(f), std::move(f));
  };
  for (;;) {
    emit();
    std::size_t i = 0;
    while (i < n && role[i] == 2) role[i++] = 0;
    if (i == n) break;
    ++role[i];
  }
  std::sort(faces.begin(), faces.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ConsensusFace> out;
  out.reserve(faces.size());
  for (auto& [key, face] : faces) out.push_back(std::move(face));
  return out;
}

}  // namespace polystab

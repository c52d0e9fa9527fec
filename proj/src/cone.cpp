#include "planegen/cone.hpp"

#include <stdexcept>

namespace pg {

namespace {

std::vector<Q> to_qrow(const V3& a) { return {Q(a[0]), Q(a[1]), Q(a[2])}; }

// Membership of [x,i] in the plane of v reads 0 <= <x,v> < v_i: one weak row
// <x,v> >= 0 and one strict row v_i - <x,v> > 0.
void face_rows(const Face& f, std::vector<std::vector<Q>>& strict,
               std::vector<std::vector<Q>>& weak) {
  weak.push_back(to_qrow(f.x));
  V3 upper = -f.x;
  upper[f.t - 1] += 1;
  strict.push_back(to_qrow(upper));
}

}  // namespace

Cone::Cone(std::vector<V3> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("cone needs at least one constraint");
  std::vector<std::vector<Q>> strict;
  for (const auto& r : rows_) strict.push_back(to_qrow(r));
  if (!strict_homogeneous_feasible(strict, {}))
    throw std::invalid_argument("cone has no strictly feasible point");
}

bool Cone::admits_face(const Face& f) const {
  auto it = face_cache_.find(f);
  if (it != face_cache_.end()) return it->second;
  std::vector<std::vector<Q>> strict, weak;
  for (const auto& r : rows_) strict.push_back(to_qrow(r));
  face_rows(f, strict, weak);
  bool ok = strict_homogeneous_feasible(strict, weak);
  face_cache_[f] = ok;
  return ok;
}

bool Cone::admits_pattern(const Pattern& P) const {
  std::vector<std::vector<Q>> strict, weak;
  for (const auto& r : rows_) strict.push_back(to_qrow(r));
  for (const auto& f : P) face_rows(f, strict, weak);
  return strict_homogeneous_feasible(strict, weak);
}

bool Cone::admits_pattern_translated(const Pattern& P) const {
  // Variables (v1, v2, v3, s); s is the height of the translated anchor and
  // may take either sign.
  std::vector<std::vector<Q>> strict, weak;
  for (const auto& r : rows_) strict.push_back({Q(r[0]), Q(r[1]), Q(r[2]), Q(0)});
  for (const auto& f : P) {
    weak.push_back({Q(f.x[0]), Q(f.x[1]), Q(f.x[2]), Q(1)});
    V3 upper = -f.x;
    upper[f.t - 1] += 1;
    strict.push_back({Q(upper[0]), Q(upper[1]), Q(upper[2]), Q(-1)});
  }
  return strict_homogeneous_feasible(strict, weak);
}

const Cone& cone_brun() {
  static const Cone c({V3{1, 0, 0}, V3{-1, 1, 0}, V3{0, -1, 1}});
  return c;
}

const Cone& cone_jp() {
  static const Cone c({V3{1, 0, 0}, V3{0, 1, 0}, V3{-1, 0, 1}, V3{0, -1, 1}});
  return c;
}

const Cone& cone_positive() {
  static const Cone c({V3{1, 0, 0}, V3{0, 1, 0}, V3{0, 0, 1}});
  return c;
}

}  // namespace pg

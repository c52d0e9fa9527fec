#ifndef PLANEGEN_CONE_HPP
#define PLANEGEN_CONE_HPP

#include <map>
#include <memory>
#include <vector>

#include "planegen/geom.hpp"
#include "planegen/lp.hpp"

namespace pg {

// An open polyhedral cone of normal vectors, given by strict homogeneous
// inequalities a.v > 0 with integer coefficients. Checked nonempty on
// construction.
class Cone {
 public:
  explicit Cone(std::vector<V3> rows);

  const std::vector<V3>& rows() const { return rows_; }

  // Does some v in the cone satisfy 0 <= <f.x, v> < v[f.t]?
  bool admits_face(const Face& f) const;

  // Does some v in the cone contain every face of P in its discrete plane?
  bool admits_pattern(const Pattern& P) const;

  // Like admits_pattern, but up to a common translation of P: is some
  // translate of P contained in a discrete plane of the cone? Decided by
  // adding a free height variable s and asking 0 <= s + <x,v> < v_i for
  // every face [x,i] of P.
  bool admits_pattern_translated(const Pattern& P) const;

  bool operator==(const Cone& other) const { return rows_ == other.rows_; }

 private:
  std::vector<V3> rows_;
  mutable std::map<Face, bool> face_cache_;
};

// 0 < v1 < v2 < v3.
const Cone& cone_brun();
// 0 < v1 < v3 and 0 < v2 < v3.
const Cone& cone_jp();
// v1, v2, v3 > 0.
const Cone& cone_positive();

}  // namespace pg

#endif

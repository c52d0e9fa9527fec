#ifndef PLANEGEN_NUMBERS_HPP
#define PLANEGEN_NUMBERS_HPP

#include <gmpxx.h>

#include <array>
#include <memory>
#include <variant>
#include <vector>

#include "planegen/geom.hpp"
#include "planegen/lp.hpp"

namespace pg {

// Polynomial with rational coefficients, low degree first, no trailing zeros.
using Poly = std::vector<Q>;

Poly poly_normalized(Poly p);
int poly_degree(const Poly& p);  // -1 for the zero polynomial
Q poly_eval(const Poly& p, const Q& x);
Poly poly_derivative(const Poly& p);
Poly poly_neg_rem(const Poly& a, const Poly& b);  // -(a mod b)

int sgn(const Q& x);

// Sturm chain of a squarefree-or-not polynomial; count_roots counts distinct
// real roots in the half-open interval (a, b].
std::vector<Poly> sturm_chain(const Poly& p);
int sturm_count_roots(const std::vector<Poly>& chain, const Q& a, const Q& b);
int sturm_count_real_roots(const std::vector<Poly>& chain);

// Monic integer cubic x^3 + c2 x^2 + c1 x + c0: irreducible over Q iff it has
// no rational (hence integer, dividing c0) root.
bool monic_int_cubic_irreducible(const Q& c2, const Q& c1, const Q& c0);

// Real algebraic number field Q(beta), beta the unique root of an irreducible
// monic integer cubic inside a given isolating interval. Elements are stored
// as c0 + c1*beta + c2*beta^2 with rational ci; signs are decided exactly by
// interval refinement (a nonzero element never vanishes at beta because the
// minimal polynomial has degree 3).
class CubicField {
 public:
  CubicField(Poly minpoly, Q iso_lo, Q iso_hi);

  using Elem = std::array<Q, 3>;

  int sign(const Elem& e) const;
  Elem mul(const Elem& a, const Elem& b) const;
  const Poly& minpoly() const { return m_; }
  double root_approx(double tol = 1e-15) const;

 private:
  void refine() const;

  Poly m_;
  mutable Q lo_, hi_;
};

// A value in a shared cubic field, with exact field operations and order.
struct AlgQ {
  std::shared_ptr<const CubicField> F;
  CubicField::Elem c{0, 0, 0};

  static AlgQ rational(std::shared_ptr<const CubicField> F, const Q& q) {
    return AlgQ{std::move(F), {q, 0, 0}};
  }
  static AlgQ beta(std::shared_ptr<const CubicField> F) { return AlgQ{std::move(F), {0, 1, 0}}; }

  friend AlgQ operator+(const AlgQ& a, const AlgQ& b);
  friend AlgQ operator-(const AlgQ& a, const AlgQ& b);
  friend AlgQ operator*(const AlgQ& a, const AlgQ& b);
  friend bool operator==(const AlgQ& a, const AlgQ& b) { return cmp(a, b) == 0; }
  friend bool operator<(const AlgQ& a, const AlgQ& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const AlgQ& a, const AlgQ& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const AlgQ& a, const AlgQ& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const AlgQ& a, const AlgQ& b) { return cmp(a, b) >= 0; }
  static int cmp(const AlgQ& a, const AlgQ& b);
};

int sgn(const AlgQ& x);

Q mul_int(const Q& a, int64_t c);
AlgQ mul_int(const AlgQ& a, int64_t c);
double approx(const Q& a);
double approx(const AlgQ& a);

using Vec3Q = std::array<Q, 3>;
using Vec3A = std::array<AlgQ, 3>;

// Exact normal vector: rational or cubic-algebraic coordinates.
using NormalVector = std::variant<Vec3Q, Vec3A>;

bool normal_strictly_positive(const NormalVector& v);

// 0 <= <f.x, v> < v[f.t], evaluated exactly. Rejects non-positive v.
bool plane_contains(const NormalVector& v, const Face& f);

// All plane faces with max-norm(position) <= window, canonically ordered.
Pattern plane_patch(const NormalVector& v, int window);

}  // namespace pg

#endif

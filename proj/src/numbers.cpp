#include "planegen/numbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace pg {

int sgn(const Q& x) { return mpq_sgn(x.get_mpq_t()); }

Poly poly_normalized(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Q poly_eval(const Poly& p, const Q& x) {
  Q acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Q(static_cast<long>(i)) * p[i]);
  return poly_normalized(std::move(d));
}

Poly poly_neg_rem(const Poly& a, const Poly& b) {
  Poly r = poly_normalized(a);
  Poly bb = poly_normalized(b);
  if (bb.empty()) throw std::invalid_argument("division by zero polynomial");
  while (static_cast<int>(r.size()) >= static_cast<int>(bb.size()) && !r.empty()) {
    Q factor = r.back() / bb.back();
    std::size_t shift = r.size() - bb.size();
    for (std::size_t i = 0; i < bb.size(); ++i) r[shift + i] -= factor * bb[i];
    r = poly_normalized(std::move(r));
  }
  for (auto& c : r) c = -c;
  return r;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  Poly p0 = poly_normalized(p);
  if (p0.empty()) return chain;
  chain.push_back(p0);
  Poly p1 = poly_derivative(p0);
  while (!p1.empty()) {
    chain.push_back(p1);
    Poly r = poly_neg_rem(chain[chain.size() - 2], chain.back());
    p1 = std::move(r);
  }
  return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int variations_at(const std::vector<Poly>& chain, const Q& x) {
  std::vector<int> signs;
  for (const auto& p : chain) signs.push_back(sgn(poly_eval(p, x)));
  return variations(signs);
}

int variations_at_inf(const std::vector<Poly>& chain, int dir) {
  std::vector<int> signs;
  for (const auto& p : chain) {
    int s = sgn(p.back());
    if (dir < 0 && poly_degree(p) % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

}  // namespace

int sturm_count_roots(const std::vector<Poly>& chain, const Q& a, const Q& b) {
  if (chain.empty()) return 0;
  return variations_at(chain, a) - variations_at(chain, b);
}

int sturm_count_real_roots(const std::vector<Poly>& chain) {
  if (chain.empty()) return 0;
  return variations_at_inf(chain, -1) - variations_at_inf(chain, +1);
}

bool monic_int_cubic_irreducible(const Q& c2, const Q& c1, const Q& c0) {
  if (c2.get_den() != 1 || c1.get_den() != 1 || c0.get_den() != 1)
    throw std::invalid_argument("expected integer coefficients");
  if (c0 == 0) return false;  // root 0
  mpz_class n0 = abs(c0.get_num());
  // Any rational root of a monic integer polynomial is an integer dividing c0.
  for (mpz_class d = 1; d * d <= n0; ++d) {
    if (n0 % d != 0) continue;
    for (mpz_class cand : {mpz_class(d), mpz_class(n0 / d)}) {
      for (int s : {1, -1}) {
        Q r = Q(s * cand);
        if (r * r * r + c2 * r * r + c1 * r + c0 == 0) return false;
      }
    }
  }
  return true;
}

CubicField::CubicField(Poly minpoly, Q iso_lo, Q iso_hi)
    : m_(poly_normalized(std::move(minpoly))), lo_(std::move(iso_lo)), hi_(std::move(iso_hi)) {
  if (poly_degree(m_) != 3 || m_[3] != 1) throw std::invalid_argument("expected a monic cubic");
  if (!monic_int_cubic_irreducible(m_[2], m_[1], m_[0]))
    throw std::invalid_argument("minimal polynomial must be irreducible");
  if (lo_ >= hi_ || sgn(poly_eval(m_, lo_)) * sgn(poly_eval(m_, hi_)) >= 0)
    throw std::invalid_argument("interval does not isolate a root");
  auto chain = sturm_chain(m_);
  if (sturm_count_roots(chain, lo_, hi_) != 1)
    throw std::invalid_argument("interval contains more than one root");
}

void CubicField::refine() const {
  Q mid = (lo_ + hi_) / 2;
  int sm = sgn(poly_eval(m_, mid));
  if (sm == 0) throw std::logic_error("irreducible cubic has no rational root");
  if (sm == sgn(poly_eval(m_, lo_)))
    lo_ = mid;
  else
    hi_ = mid;
}

int CubicField::sign(const Elem& e) const {
  if (e[0] == 0 && e[1] == 0 && e[2] == 0) return 0;
  // e(beta) != 0 since deg < 3 and the minimal polynomial is irreducible.
  while (true) {
    // Interval evaluation of e0 + e1*x + e2*x^2 over [lo, hi].
    Q x2lo, x2hi;
    if (lo_ >= 0) {
      x2lo = lo_ * lo_;
      x2hi = hi_ * hi_;
    } else if (hi_ <= 0) {
      x2lo = hi_ * hi_;
      x2hi = lo_ * lo_;
    } else {
      x2lo = 0;
      x2hi = std::max(lo_ * lo_, hi_ * hi_);
    }
    auto scale = [](const Q& c, const Q& ilo, const Q& ihi) {
      return c >= 0 ? std::pair<Q, Q>{c * ilo, c * ihi} : std::pair<Q, Q>{c * ihi, c * ilo};
    };
    auto [l1, h1] = scale(e[1], lo_, hi_);
    auto [l2, h2] = scale(e[2], x2lo, x2hi);
    Q lo = e[0] + l1 + l2;
    Q hi = e[0] + h1 + h2;
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    refine();
  }
}

CubicField::Elem CubicField::mul(const Elem& a, const Elem& b) const {
  std::array<Q, 5> prod{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) prod[i + j] += a[i] * b[j];
  // Reduce with beta^3 = -c2 beta^2 - c1 beta - c0.
  for (int k = 4; k >= 3; --k) {
    Q c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    prod[k - 1] -= c * m_[2];
    prod[k - 2] -= c * m_[1];
    prod[k - 3] -= c * m_[0];
  }
  return {prod[0], prod[1], prod[2]};
}

double CubicField::root_approx(double tol) const {
  while (Q(hi_ - lo_).get_d() > tol) refine();
  return Q((lo_ + hi_) / 2).get_d();
}

namespace {

void check_same_field(const AlgQ& a, const AlgQ& b) {
  if (a.F != b.F && a.F->minpoly() != b.F->minpoly())
    throw std::invalid_argument("mixed algebraic fields");
}

}  // namespace

AlgQ operator+(const AlgQ& a, const AlgQ& b) {
  check_same_field(a, b);
  return AlgQ{a.F, {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]}};
}

AlgQ operator-(const AlgQ& a, const AlgQ& b) {
  check_same_field(a, b);
  return AlgQ{a.F, {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]}};
}

AlgQ operator*(const AlgQ& a, const AlgQ& b) {
  check_same_field(a, b);
  return AlgQ{a.F, a.F->mul(a.c, b.c)};
}

int AlgQ::cmp(const AlgQ& a, const AlgQ& b) {
  check_same_field(a, b);
  return a.F->sign({a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]});
}

int sgn(const AlgQ& x) { return x.F->sign(x.c); }

bool normal_strictly_positive(const NormalVector& v) {
  return std::visit([](const auto& w) { return sgn(w[0]) > 0 && sgn(w[1]) > 0 && sgn(w[2]) > 0; },
                    v);
}

Q mul_int(const Q& a, int64_t c) { return a * Q(static_cast<long>(c)); }

AlgQ mul_int(const AlgQ& a, int64_t c) {
  Q qc(static_cast<long>(c));
  return AlgQ{a.F, {a.c[0] * qc, a.c[1] * qc, a.c[2] * qc}};
}

double approx(const Q& a) { return a.get_d(); }

double approx(const AlgQ& a) {
  double beta = a.F->root_approx(1e-13);
  return a.c[0].get_d() + a.c[1].get_d() * beta + a.c[2].get_d() * beta * beta;
}

namespace {

template <class T>
bool plane_contains_t(const std::array<T, 3>& v, const Face& f) {
  T d = mul_int(v[0], f.x[0]) + mul_int(v[1], f.x[1]) + mul_int(v[2], f.x[2]);
  if (sgn(d) < 0) return false;
  T diff = v[f.t - 1] - d;
  return sgn(diff) > 0;
}

}  // namespace

bool plane_contains(const NormalVector& v, const Face& f) {
  if (!normal_strictly_positive(v))
    throw std::invalid_argument("normal vector must be strictly positive");
  return std::visit([&](const auto& w) { return plane_contains_t(w, f); }, v);
}

Pattern plane_patch(const NormalVector& v, int window) {
  if (window < 0) throw std::invalid_argument("window must be nonnegative");
  if (!normal_strictly_positive(v))
    throw std::invalid_argument("normal vector must be strictly positive");
  std::vector<Face> out;
  for (int64_t x = -window; x <= window; ++x)
    for (int64_t y = -window; y <= window; ++y)
      for (int64_t z = -window; z <= window; ++z)
        for (int t = 1; t <= 3; ++t) {
          Face f{{x, y, z}, t};
          if (plane_contains(v, f)) out.push_back(f);
        }
  return Pattern(std::move(out));
}

}  // namespace pg

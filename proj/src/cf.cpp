#include "planegen/cf.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace pg {

const Substitution& brun_substitution(int i) {
  static const Substitution s1("1", "2", "32");
  static const Substitution s2("1", "3", "23");
  static const Substitution s3("2", "3", "13");
  switch (i) {
    case 1:
      return s1;
    case 2:
      return s2;
    case 3:
      return s3;
    default:
      throw std::invalid_argument("Brun index must be 1, 2 or 3");
  }
}

Substitution jp_substitution(long a, long b) {
  if (a < 0 || b < 0) throw std::invalid_argument("digits must be nonnegative");
  return Substitution("3", "1" + std::string(a, '3'), "2" + std::string(b, '3'));
}

const Substitution& tau_substitution(int i) {
  static const Substitution t1("1", "21", "3");
  static const Substitution t2("1", "2", "31");
  static const Substitution t3("3", "1", "2");
  switch (i) {
    case 1:
      return t1;
    case 2:
      return t2;
    case 3:
      return t3;
    default:
      throw std::invalid_argument("tau index must be 1, 2 or 3");
  }
}

const Substitution& theta_substitution(int i) {
  static const Substitution th1 = tau_substitution(2);
  static const Substitution th2 = compose(tau_substitution(1), tau_substitution(2));
  static const Substitution th3 = compose(tau_substitution(3), tau_substitution(2));
  static const Substitution th4 =
      compose(tau_substitution(3), compose(tau_substitution(1), tau_substitution(2)));
  switch (i) {
    case 1:
      return th1;
    case 2:
      return th2;
    case 3:
      return th3;
    case 4:
      return th4;
    default:
      throw std::invalid_argument("theta index must be 1..4");
  }
}

std::vector<int> jp_additive_decompose(long a, long b) {
  if (!(0 <= a && a <= b && b != 0)) throw std::invalid_argument("digits must satisfy 0 <= a <= b, b != 0");
  std::vector<int> out;
  if (a == 0) {
    out.push_back(3);
    out.insert(out.end(), static_cast<std::size_t>(b - 1), 1);
  } else if (a < b) {
    out.push_back(3);
    out.insert(out.end(), static_cast<std::size_t>(b - a - 1), 1);
    out.insert(out.end(), static_cast<std::size_t>(a), 2);
  } else {
    out.push_back(4);
    out.insert(out.end(), static_cast<std::size_t>(a - 1), 2);
  }
  return out;
}

Substitution cubic_field_substitution(long c1, long c2) {
  if (c1 < 3 || c2 < 2 * c1 - 2) throw std::invalid_argument("need c1 >= 3 and c2 >= 2*c1 - 2");
  Substitution s =
      compose(compose(jp_substitution(0, 1), jp_substitution(0, 1)), jp_substitution(c1 - 3, c2 - c1));
  auto [p2, p1, p0] = s.incidence().char_poly();
  if (p2 != -c2 || p1 != c1 || p0 != -1)
    throw std::logic_error("characteristic polynomial mismatch in cubic-field construction");
  return s;
}

namespace {

template <class T>
std::pair<int, std::array<T, 3>> brun_step_t(const std::array<T, 3>& v) {
  if (sgn(v[0]) < 0 || (v[0] > v[1]) || (v[1] > v[2]))
    throw std::invalid_argument("expected 0 <= v1 <= v2 <= v3");
  T d = v[2] - v[1];
  if (v[1] <= d) return {1, {v[0], v[1], d}};
  if (v[0] <= d) return {2, {v[0], d, v[1]}};
  return {3, {d, v[0], v[1]}};
}

template <class T>
long floor_div_t(const T& num, const T& den) {
  // den > 0; largest k with k*den <= num
  double guess = std::floor(approx(num) / approx(den));
  long k = static_cast<long>(guess);
  while (mul_int(den, k + 1) <= num) ++k;
  while (mul_int(den, k) > num) --k;
  return k;
}

template <class T>
std::pair<std::pair<long, long>, std::array<T, 3>> jp_step_t(const std::array<T, 3>& v) {
  if (sgn(v[0]) <= 0 || v[0] > v[2] || v[1] > v[2])
    throw std::invalid_argument("expected 0 < v1 <= v3 and v2 <= v3");
  long a = floor_div_t(v[1], v[0]);
  long b = floor_div_t(v[2], v[0]);
  std::array<T, 3> next{v[1] - mul_int(v[0], a), v[2] - mul_int(v[0], b), v[0]};
  return {{a, b}, next};
}

template <class F>
auto visit_vec(const NormalVector& v, F&& f) {
  return std::visit(std::forward<F>(f), v);
}

}  // namespace

std::pair<int, NormalVector> brun_step(const NormalVector& v) {
  return visit_vec(v, [](const auto& w) -> std::pair<int, NormalVector> {
    auto [i, next] = brun_step_t(w);
    return {i, NormalVector(next)};
  });
}

std::pair<std::pair<long, long>, NormalVector> jp_step(const NormalVector& v) {
  return visit_vec(v, [](const auto& w) -> std::pair<std::pair<long, long>, NormalVector> {
    auto [ab, next] = jp_step_t(w);
    return {ab, NormalVector(next)};
  });
}

namespace {

bool has_zero_entry(const NormalVector& v) {
  return std::visit(
      [](const auto& w) { return sgn(w[0]) == 0 || sgn(w[1]) == 0 || sgn(w[2]) == 0; }, v);
}

}  // namespace

BrunExpansion brun_expansion(NormalVector v, int n) {
  if (n < 0) throw std::invalid_argument("digit count must be nonnegative");
  BrunExpansion out;
  for (int k = 0; k < n; ++k) {
    if (has_zero_entry(v)) {
      out.truncated = true;
      break;
    }
    auto [i, next] = brun_step(v);
    out.digits.push_back(i);
    v = std::move(next);
  }
  return out;
}

JPExpansion jp_expansion(NormalVector v, int n) {
  if (n < 0) throw std::invalid_argument("digit count must be nonnegative");
  JPExpansion out;
  for (int k = 0; k < n; ++k) {
    bool v1_zero = std::visit([](const auto& w) { return sgn(w[0]) == 0; }, v);
    if (v1_zero) {
      out.truncated = true;
      break;
    }
    auto [ab, next] = jp_step(v);
    out.digits.push_back(ab);
    v = std::move(next);
  }
  return out;
}

bool brun_admissible_finite(const std::vector<int>& digits) {
  for (int d : digits)
    if (d == 3) return true;
  return false;
}

bool brun_admissible_periodic(const std::vector<int>& period) {
  return brun_admissible_finite(period);
}

namespace {

bool jp_admissible_impl(const std::vector<std::pair<long, long>>& digits, bool wrap) {
  for (std::size_t k = 0; k < digits.size(); ++k) {
    auto [a, b] = digits[k];
    if (!(0 <= a && a <= b && b != 0)) return false;
    if (a == b) {
      if (k + 1 < digits.size()) {
        if (digits[k + 1].first == 0) return false;
      } else if (wrap && !digits.empty()) {
        if (digits[0].first == 0) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool jp_admissible_finite(const std::vector<std::pair<long, long>>& digits) {
  return jp_admissible_impl(digits, false);
}

bool jp_admissible_periodic(const std::vector<std::pair<long, long>>& period) {
  return jp_admissible_impl(period, true);
}

// --- parsing ---------------------------------------------------------------

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

Q parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  Q q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

// Sums of terms [coef][*]x[^k], e.g. "x^3-3x^2-x+1" or "5/2".
Poly parse_poly(const std::string& text) {
  std::string s = strip(text);
  Poly p;
  std::size_t i = 0;
  auto bump = [&](int deg, const Q& c) {
    if (static_cast<int>(p.size()) <= deg) p.resize(deg + 1, Q(0));
    p[deg] += c;
  };
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    std::string digits;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) digits += s[i++];
    Q coef = digits.empty() ? Q(1) : parse_rational(digits);
    if (sign < 0) coef = -coef;
    int deg = 0;
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string d;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) d += s[i++];
        if (d.empty()) throw std::invalid_argument("bad exponent in: " + text);
        deg = std::stoi(d);
      }
    } else if (digits.empty()) {
      throw std::invalid_argument("bad term in: " + text);
    }
    bump(deg, coef);
  }
  return poly_normalized(std::move(p));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else
      cur += c;
  }
  out.push_back(cur);
  return out;
}

// Isolate all real roots of p by Sturm bisection; return isolating intervals.
std::vector<std::pair<Q, Q>> isolate_real_roots(const Poly& p) {
  auto chain = sturm_chain(p);
  Q bound = 1;
  for (const auto& c : p) bound += abs(c / p.back());
  std::vector<std::pair<Q, Q>> done;
  std::vector<std::pair<Q, Q>> todo{{-bound, bound}};
  while (!todo.empty()) {
    auto [lo, hi] = todo.back();
    todo.pop_back();
    int n = sturm_count_roots(chain, lo, hi);
    if (n == 0) continue;
    if (n == 1 && sgn(poly_eval(p, lo)) != 0 && sgn(poly_eval(p, hi)) != 0 &&
        sgn(poly_eval(p, lo)) * sgn(poly_eval(p, hi)) < 0) {
      done.push_back({lo, hi});
      continue;
    }
    Q mid = (lo + hi) / 2;
    if (sgn(poly_eval(p, mid)) == 0) {
      // nudge the split point off the root
      mid = (lo + 3 * hi) / 4;
    }
    todo.push_back({lo, mid});
    todo.push_back({mid, hi});
  }
  std::sort(done.begin(), done.end());
  return done;
}

}  // namespace

NormalVector parse_normal_vector(const std::string& text) {
  std::string s = strip(text);
  if (s.find("poly=") == std::string::npos) {
    auto parts = split(s, ',');
    if (parts.size() != 3) throw std::invalid_argument("expected three comma-separated entries");
    return NormalVector(Vec3Q{parse_rational(parts[0]), parse_rational(parts[1]),
                              parse_rational(parts[2])});
  }
  Poly minpoly;
  double hint = 0;
  bool have_hint = false;
  std::vector<Poly> coords;
  for (const auto& field : split(s, ';')) {
    if (field.rfind("poly=", 0) == 0) {
      minpoly = parse_poly(field.substr(5));
    } else if (field.rfind("root~", 0) == 0) {
      hint = std::stod(field.substr(5));
      have_hint = true;
    } else if (field.rfind("v=(", 0) == 0 && field.back() == ')') {
      for (const auto& c : split(field.substr(3, field.size() - 4), ','))
        coords.push_back(parse_poly(c));
    } else if (!field.empty()) {
      throw std::invalid_argument("unrecognized field: " + field);
    }
  }
  if (minpoly.empty() || coords.size() != 3)
    throw std::invalid_argument("need poly=... and v=(..,..,..)");
  auto intervals = isolate_real_roots(minpoly);
  if (intervals.empty()) throw std::invalid_argument("polynomial has no real root");
  auto chosen = intervals.back();
  if (have_hint) {
    double best = 1e300;
    for (const auto& iv : intervals) {
      double mid = Q((iv.first + iv.second) / 2).get_d();
      if (std::abs(mid - hint) < best) {
        best = std::abs(mid - hint);
        chosen = iv;
      }
    }
  }
  auto F = std::make_shared<const CubicField>(minpoly, chosen.first, chosen.second);
  Vec3A v{AlgQ{F, {0, 0, 0}}, AlgQ{F, {0, 0, 0}}, AlgQ{F, {0, 0, 0}}};
  for (int k = 0; k < 3; ++k) {
    const Poly& c = coords[k];
    if (poly_degree(c) > 2) throw std::invalid_argument("coordinates must have degree <= 2");
    CubicField::Elem e{0, 0, 0};
    for (std::size_t d = 0; d < c.size(); ++d) e[d] = c[d];
    v[k] = AlgQ{F, e};
  }
  return NormalVector(v);
}

std::vector<int> parse_brun_word(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(strip(text), ',')) {
    if (part.size() != 1 || part[0] < '1' || part[0] > '3')
      throw std::invalid_argument("Brun digits are 1, 2 or 3");
    out.push_back(part[0] - '0');
  }
  return out;
}

std::vector<std::pair<long, long>> parse_jp_word(const std::string& text) {
  std::string s = strip(text);
  std::vector<std::pair<long, long>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw std::invalid_argument("expected '(' in digit list");
    auto close = s.find(')', i);
    if (close == std::string::npos) throw std::invalid_argument("unbalanced parenthesis");
    auto inner = split(s.substr(i + 1, close - i - 1), ',');
    if (inner.size() != 2) throw std::invalid_argument("expected (a,b)");
    out.push_back({std::stol(inner[0]), std::stol(inner[1])});
    i = close + 1;
  }
  return out;
}

}  // namespace pg

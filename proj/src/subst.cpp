#include "planegen/subst.hpp"

#include <algorithm>
#include <stdexcept>

#include "planegen/numbers.hpp"

namespace pg {

V3 abelianization(const Word& w) {
  V3 out{0, 0, 0};
  for (char c : w) {
    if (c < '1' || c > '3') throw std::invalid_argument("letters must be 1, 2 or 3");
    out[c - '1']++;
  }
  return out;
}

Mat3 Mat3::identity() {
  Mat3 I;
  for (int i = 0; i < 3; ++i) I.m[i][i] = 1;
  return I;
}

V3 Mat3::apply(const V3& v) const {
  V3 out{0, 0, 0};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[r] += m[r][c] * v[c];
  return out;
}

Mat3 Mat3::operator*(const Mat3& other) const {
  Mat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int k = 0; k < 3; ++k) out.m[r][c] += m[r][k] * other.m[k][c];
  return out;
}

Mat3 Mat3::transposed() const {
  Mat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.m[r][c] = m[c][r];
  return out;
}

int64_t Mat3::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 Mat3::inverse_unimodular() const {
  int64_t d = det();
  if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
  Mat3 adj;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      int64_t minor = m[(c + 1) % 3][(r + 1) % 3] * m[(c + 2) % 3][(r + 2) % 3] -
                      m[(c + 1) % 3][(r + 2) % 3] * m[(c + 2) % 3][(r + 1) % 3];
      adj.m[r][c] = minor;  // cofactor transpose via index rotation
    }
  if (d == -1)
    for (auto& row : adj.m)
      for (auto& x : row) x = -x;
  return adj;
}

std::array<int64_t, 3> Mat3::char_poly() const {
  int64_t tr = m[0][0] + m[1][1] + m[2][2];
  int64_t sum2 = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) +
                 (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                 (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  return {-tr, sum2, -det()};
}

bool Mat3::is_primitive() const {
  for (const auto& row : m)
    for (auto x : row)
      if (x < 0) return false;
  Mat3 p = *this;
  for (int it = 0; it < 8; ++it) {  // (n^2-2n+2)=5 suffices for 3x3; 8 is safe
    bool all = true;
    for (const auto& row : p.m)
      for (auto x : row)
        if (x <= 0) all = false;
    if (all) return true;
    p = p * *this;
  }
  return false;
}

Substitution::Substitution(Word im1, Word im2, Word im3)
    : im_{std::move(im1), std::move(im2), std::move(im3)} {
  for (const auto& w : im_) {
    if (w.empty()) throw std::invalid_argument("substitution must be non-erasing");
    abelianization(w);  // validates letters
  }
}

const Word& Substitution::image(int letter) const {
  if (letter < 1 || letter > 3) throw std::invalid_argument("letter must be 1, 2 or 3");
  return im_[letter - 1];
}

Word Substitution::apply(const Word& w) const {
  Word out;
  for (char c : w) out += image(c - '0');
  return out;
}

Mat3 Substitution::incidence() const {
  Mat3 M;
  for (int i = 0; i < 3; ++i) {
    V3 col = abelianization(im_[i]);
    for (int r = 0; r < 3; ++r) M.m[r][i] = col[r];
  }
  return M;
}

bool Substitution::is_unimodular() const {
  int64_t d = incidence().det();
  return d == 1 || d == -1;
}

bool Substitution::is_irreducible_pisot() const {
  auto [c2, c1, c0] = incidence().char_poly();
  if (!monic_int_cubic_irreducible(Q(static_cast<long>(c2)), Q(static_cast<long>(c1)),
                                   Q(static_cast<long>(c0))))
    return false;
  Poly p{Q(static_cast<long>(c0)), Q(static_cast<long>(c1)), Q(static_cast<long>(c2)), Q(1)};
  auto chain = sturm_chain(p);
  int real = sturm_count_real_roots(chain);
  // All roots lie within the Cauchy bound; irreducibility rules out roots at
  // the rational endpoints used below.
  Q cauchy = 1 + abs(Q(static_cast<long>(c2))) + abs(Q(static_cast<long>(c1))) +
             abs(Q(static_cast<long>(c0)));
  if (real == 1) {
    // One real root l and a complex pair of modulus sqrt(|c0|/|l|).
    // Pisot iff l > 1 and l > |c0| (then the pair modulus is < 1).
    Q bound = abs(Q(static_cast<long>(c0)));
    if (bound < 1) bound = 1;
    return sturm_count_roots(chain, bound, cauchy) == 1;
  }
  if (real == 3) {
    return sturm_count_roots(chain, Q(1), cauchy) == 1 &&
           sturm_count_roots(chain, Q(-1), Q(1)) == 2;
  }
  return false;
}

Pattern Substitution::dual_image(const Face& f) const {
  Mat3 Minv = incidence().inverse_unimodular();
  std::vector<Face> out;
  char target = static_cast<char>('0' + f.t);
  for (int j = 1; j <= 3; ++j) {
    const Word& w = im_[j - 1];
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (w[pos] != target) continue;
      V3 suffix_ab = abelianization(w.substr(pos + 1));
      out.push_back(Face{Minv.apply(f.x + suffix_ab), j});
    }
  }
  return Pattern(std::move(out));
}

Pattern Substitution::dual_image(const Pattern& P) const {
  Pattern out;
  for (const auto& f : P)
    for (const auto& g : dual_image(f)) out.insert(g);
  return out;
}

std::vector<Face> Substitution::dual_preimages(const Face& f, const Cone* filter) const {
  Mat3 M = incidence();
  if (M.det() != 1 && M.det() != -1) throw std::invalid_argument("substitution is not unimodular");
  std::vector<Face> out;
  const Word& w = im_[f.t - 1];
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    int i = w[pos] - '0';
    V3 suffix_ab = abelianization(w.substr(pos + 1));
    Face g{M.apply(f.x) - suffix_ab, i};
    if (filter && !filter->admits_face(g)) continue;
    out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Substitution compose(const Substitution& s1, const Substitution& s2) {
  return Substitution(s1.apply(s2.image(1)), s1.apply(s2.image(2)), s1.apply(s2.image(3)));
}

const Substitution& identity_substitution() {
  static const Substitution s("1", "2", "3");
  return s;
}

}  // namespace pg

#ifndef PLANEGEN_SUBST_HPP
#define PLANEGEN_SUBST_HPP

#include <array>
#include <optional>
#include <string>

#include "planegen/cone.hpp"
#include "planegen/geom.hpp"

namespace pg {

// Words over the alphabet {1,2,3}, stored as strings of '1','2','3'.
using Word = std::string;

V3 abelianization(const Word& w);

struct Mat3 {
  // m[r][c], row-major
  std::array<std::array<int64_t, 3>, 3> m{};

  static Mat3 identity();
  V3 apply(const V3& v) const;
  Mat3 operator*(const Mat3& other) const;
  Mat3 transposed() const;
  int64_t det() const;
  // Exact inverse; requires det = +-1.
  Mat3 inverse_unimodular() const;
  // Characteristic polynomial x^3 + c2 x^2 + c1 x + c0, returned as (c2,c1,c0).
  std::array<int64_t, 3> char_poly() const;
  bool is_primitive() const;  // some power strictly positive

  auto operator<=>(const Mat3&) const = default;
};

// A non-erasing morphism of the free monoid on {1,2,3}.
class Substitution {
 public:
  Substitution(Word im1, Word im2, Word im3);

  const Word& image(int letter) const;
  Word apply(const Word& w) const;

  // Column i is the abelianization of the image of i.
  Mat3 incidence() const;

  bool is_unimodular() const;
  bool is_irreducible_pisot() const;

  // E1* image of a single face; requires unimodularity.
  Pattern dual_image(const Face& f) const;
  Pattern dual_image(const Pattern& P) const;

  // All faces g with f in dual_image(g), optionally filtered by a cone.
  std::vector<Face> dual_preimages(const Face& f, const Cone* filter = nullptr) const;

  auto operator<=>(const Substitution&) const = default;

 private:
  std::array<Word, 3> im_;
};

Substitution compose(const Substitution& s1, const Substitution& s2);
const Substitution& identity_substitution();

}  // namespace pg

#endif

#ifndef PLANEGEN_CF_HPP
#define PLANEGEN_CF_HPP

#include <string>
#include <utility>
#include <vector>

#include "planegen/numbers.hpp"
#include "planegen/subst.hpp"

namespace pg {

// --- substitution families -------------------------------------------------

const Substitution& brun_substitution(int i);             // i in 1..3
Substitution jp_substitution(long a, long b);             // a,b >= 0
const Substitution& tau_substitution(int i);              // i in 1..3
const Substitution& theta_substitution(int i);            // i in 1..4

// Decomposition of the (a,b) step into theta factors, canonical form
// (prefers the theta3 variant when both are valid). Composing the factors in
// order reproduces jp_substitution(a,b).
std::vector<int> jp_additive_decompose(long a, long b);

// Composed substitution sigma_{0,1} sigma_{0,1} sigma_{c1-3,c2-c1}; its
// incidence matrix has characteristic polynomial X^3 - c2 X^2 + c1 X - 1.
// Requires c1 >= 3 and c2 >= 2*c1 - 2.
Substitution cubic_field_substitution(long c1, long c2);

// --- expansions ------------------------------------------------------------

// One step of the ordered additive algorithm on 0 <= v1 <= v2 <= v3:
// subtract the second largest entry from the largest and reorder.
// Satisfies v = M_i v' with M_i the transpose incidence matrix of the
// corresponding substitution.
std::pair<int, NormalVector> brun_step(const NormalVector& v);

// One step of (v1,v2,v3) -> (v2 - a v1, v3 - b v1, v1) with the floor digits;
// requires 0 < v1 <= v3 and v2 <= v3.
std::pair<std::pair<long, long>, NormalVector> jp_step(const NormalVector& v);

struct BrunExpansion {
  std::vector<int> digits;
  bool truncated = false;  // a coordinate reached zero before n steps
};
struct JPExpansion {
  std::vector<std::pair<long, long>> digits;
  bool truncated = false;
};

BrunExpansion brun_expansion(NormalVector v, int n);
JPExpansion jp_expansion(NormalVector v, int n);

// --- admissibility ---------------------------------------------------------

// Finite words: some digit equals 3. Periodic words: a 3 in the period.
bool brun_admissible_finite(const std::vector<int>& digits);
bool brun_admissible_periodic(const std::vector<int>& period);

// 0 <= a <= b, b != 0, and a = b forces the next a to be nonzero (for the
// periodic variant the successor of the last digit is the first one).
bool jp_admissible_finite(const std::vector<std::pair<long, long>>& digits);
bool jp_admissible_periodic(const std::vector<std::pair<long, long>>& period);

// --- input parsing ---------------------------------------------------------

// "1,2,5" as rationals, or "poly=x^3-3x^2-x+1;root~3.21;v=(1,x,x^2)" for
// coordinates in a cubic field (root~ is optional: defaults to the largest
// real root).
NormalVector parse_normal_vector(const std::string& text);

// Brun digit words "2,3,2" and Jacobi-Perron digit lists "(0,1)(1,3)".
std::vector<int> parse_brun_word(const std::string& text);
std::vector<std::pair<long, long>> parse_jp_word(const std::string& text);

}  // namespace pg

#endif

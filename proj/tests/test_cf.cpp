#include "doctest.h"
#include "planegen/cf.hpp"

#include <random>

using namespace pg;

namespace {

NormalVector rational_vec(long a, long b, long c) {
  return NormalVector(Vec3Q{Q(a), Q(b), Q(c)});
}

Vec3Q as_q(const NormalVector& v) { return std::get<Vec3Q>(v); }

Vec3Q apply_q(const Mat3& m, const Vec3Q& v) {
  Vec3Q out{0, 0, 0};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[r] += Q(static_cast<long>(m.m[r][c])) * v[c];
  return out;
}

}  // namespace

TEST_CASE("family definitions") {
  CHECK(brun_substitution(3).image(1) == "2");
  CHECK(brun_substitution(3).image(2) == "3");
  CHECK(brun_substitution(3).image(3) == "13");
  CHECK(brun_substitution(1).image(3) == "32");
  CHECK(brun_substitution(2).image(3) == "23");
  CHECK_THROWS(brun_substitution(0));

  Substitution jp01 = jp_substitution(0, 1);
  CHECK(jp01.image(1) == "3");
  CHECK(jp01.image(2) == "1");
  CHECK(jp01.image(3) == "23");
  CHECK(jp_substitution(2, 3).image(2) == "133");
  CHECK(jp_substitution(2, 3).image(3) == "2333");
  CHECK_THROWS(jp_substitution(-1, 2));

  CHECK(theta_substitution(1) == tau_substitution(2));
  CHECK(theta_substitution(2) == compose(tau_substitution(1), tau_substitution(2)));
  CHECK(theta_substitution(3) == compose(tau_substitution(3), tau_substitution(2)));
  CHECK(theta_substitution(4) ==
        compose(tau_substitution(3), compose(tau_substitution(1), tau_substitution(2))));
}

TEST_CASE("additive decomposition of multiplicative steps") {
  CHECK(jp_additive_decompose(0, 2) == std::vector<int>{3, 1});
  CHECK(jp_additive_decompose(1, 1) == std::vector<int>{4});
  CHECK(jp_additive_decompose(1, 3) == std::vector<int>{3, 1, 2});
  CHECK_THROWS(jp_additive_decompose(2, 1));
  CHECK_THROWS(jp_additive_decompose(0, 0));
  for (long b = 1; b <= 12; ++b)
    for (long a = 0; a <= b; ++a) {
      Substitution prod = identity_substitution();
      for (int t : jp_additive_decompose(a, b)) prod = compose(prod, theta_substitution(t));
      REQUIRE(prod == jp_substitution(a, b));
    }
}

TEST_CASE("one ordered subtractive step") {
  auto [i, next] = brun_step(rational_vec(1, 2, 5));
  CHECK(i == 1);
  CHECK(as_q(next) == Vec3Q{1, 2, 3});
  CHECK_THROWS(brun_step(rational_vec(2, 1, 5)));

  auto [j, next3] = brun_step(rational_vec(1, 1, 1));
  CHECK(j == 3);
  CHECK(as_q(next3) == Vec3Q{0, 1, 1});
}

TEST_CASE("subtractive step inverts through the transposed incidence matrix") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> d(1, 400);
  int done = 0;
  while (done < 2000) {
    long a = d(rng), b = d(rng), c = d(rng);
    if (!(a <= b && b <= c)) continue;
    ++done;
    auto [i, next] = brun_step(rational_vec(a, b, c));
    Mat3 mt = brun_substitution(i).incidence().transposed();
    REQUIRE(apply_q(mt, as_q(next)) == Vec3Q{Q(a), Q(b), Q(c)});
  }
}

TEST_CASE("floor-digit step inverts through the transposed incidence matrix") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<long> d(1, 400);
  int done = 0;
  while (done < 2000) {
    long a = d(rng), b = d(rng), c = d(rng);
    if (!(a <= c && b <= c)) continue;
    ++done;
    auto [ab, next] = jp_step(rational_vec(a, b, c));
    Mat3 mt = jp_substitution(ab.first, ab.second).incidence().transposed();
    REQUIRE(apply_q(mt, as_q(next)) == Vec3Q{Q(a), Q(b), Q(c)});
  }
}

TEST_CASE("expansion of the flagship cubic vector") {
  NormalVector v = parse_normal_vector("poly=x^3-3x^2-x+1; root~3.21; v=(1,x,x^2)");
  BrunExpansion e = brun_expansion(v, 10);
  CHECK(!e.truncated);
  CHECK(e.digits == std::vector<int>{1, 1, 3, 1, 1, 3, 2, 1, 3, 2});
}

TEST_CASE("rational expansions terminate with a truncation flag") {
  BrunExpansion e = brun_expansion(rational_vec(1, 1, 1), 5);
  CHECK(e.truncated);
  CHECK(e.digits == std::vector<int>{3});
  JPExpansion j = jp_expansion(rational_vec(2, 2, 4), 10);
  CHECK(j.truncated);
}

TEST_CASE("admissibility predicates") {
  CHECK(!brun_admissible_finite({1, 1, 2}));
  CHECK(brun_admissible_finite({1, 3, 2}));
  CHECK(brun_admissible_periodic({2, 3, 2}));
  CHECK(!brun_admissible_periodic({1, 2}));

  CHECK(!jp_admissible_finite({{2, 2}, {0, 5}}));
  CHECK(jp_admissible_finite({{2, 2}, {1, 5}}));
  CHECK(!jp_admissible_finite({{0, 0}}));
  CHECK(!jp_admissible_finite({{3, 2}}));
  CHECK(jp_admissible_periodic({{0, 1}, {1, 1}, {1, 2}}));
  CHECK(!jp_admissible_periodic({{0, 1}, {1, 1}}));  // wraps onto a zero a-digit
}

TEST_CASE("composed substitutions with prescribed characteristic polynomial") {
  struct Case {
    long c1, c2;
  };
  for (Case t : {Case{3, 4}, Case{3, 5}, Case{4, 6}, Case{5, 8}}) {
    Substitution s = cubic_field_substitution(t.c1, t.c2);
    auto [p2, p1, p0] = s.incidence().char_poly();
    CHECK(p2 == -t.c2);
    CHECK(p1 == t.c1);
    CHECK(p0 == -1);
    CHECK(s.incidence().is_primitive());
  }
  CHECK(cubic_field_substitution(3, 4) ==
        compose(compose(jp_substitution(0, 1), jp_substitution(0, 1)), jp_substitution(0, 1)));
  CHECK_THROWS(cubic_field_substitution(2, 5));
  CHECK_THROWS(cubic_field_substitution(4, 5));
}

TEST_CASE("periodic floor-digit expansion of the dominant eigenvector") {
  for (auto [c1, c2] : std::vector<std::pair<long, long>>{{3, 4}, {4, 6}, {5, 8}}) {
    Substitution s = cubic_field_substitution(c1, c2);
    // The dominant eigenvalue solves x^3 - c2 x^2 + c1 x - 1 = 0.
    auto F = std::make_shared<const CubicField>(Poly{-1, Q(c1), Q(-c2), 1}, Q(c2 - 1), Q(c2 + 1));
    AlgQ lam = AlgQ::beta(F);
    // Eigenvector of the transposed incidence matrix from the adjugate of
    // (transpose(M) - lambda I): any nonzero column works.
    Mat3 mt = s.incidence().transposed();
    std::array<std::array<AlgQ, 3>, 3> A;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        A[r][c] = AlgQ::rational(F, Q(static_cast<long>(mt.m[r][c])));
        if (r == c) A[r][c] = A[r][c] - lam;
      }
    auto det2 = [&](int r1, int c1_, int r2, int c2_) {
      return A[r1][c1_] * A[r2][c2_] - A[r1][c2_] * A[r2][c1_];
    };
    Vec3A v{det2(1, 1, 2, 2), AlgQ::rational(F, 0) - det2(1, 0, 2, 2), det2(1, 0, 2, 1)};
    if (sgn(v[0]) < 0)
      for (auto& x : v) x = AlgQ::rational(F, 0) - x;
    REQUIRE(sgn(v[0]) > 0);
    JPExpansion e = jp_expansion(NormalVector(v), 9);
    REQUIRE(!e.truncated);
    std::vector<std::pair<long, long>> period{{c1 - 3, c2 - c1}, {0, 1}, {0, 1}};
    std::vector<std::pair<long, long>> expect;
    for (int k = 0; k < 3; ++k) expect.insert(expect.end(), period.begin(), period.end());
    REQUIRE(e.digits == expect);
  }
}

TEST_CASE("short admissible floor-digit products are Pisot") {
  std::vector<std::pair<long, long>> digits;
  for (long b = 1; b <= 6; ++b)
    for (long a = 0; a <= b; ++a) digits.push_back({a, b});
  for (auto [a, b] : digits) {
    if (!jp_admissible_periodic({{a, b}})) continue;
    REQUIRE(jp_substitution(a, b).is_irreducible_pisot());
  }
  std::mt19937 rng(31337);
  std::uniform_int_distribution<std::size_t> pick(0, digits.size() - 1);
  int done = 0;
  while (done < 300) {
    auto d1 = digits[pick(rng)], d2 = digits[pick(rng)], d3 = digits[pick(rng)];
    if (!jp_admissible_periodic({d1, d2, d3})) continue;
    ++done;
    Substitution s = compose(compose(jp_substitution(d1.first, d1.second),
                                     jp_substitution(d2.first, d2.second)),
                             jp_substitution(d3.first, d3.second));
    REQUIRE(s.is_irreducible_pisot());
  }
}

TEST_CASE("input parsing") {
  NormalVector v = parse_normal_vector("1,2,5");
  CHECK(as_q(v) == Vec3Q{1, 2, 5});
  CHECK(as_q(parse_normal_vector(" 1/2 , 3 , 7/3 ")) == Vec3Q{Q(1, 2), Q(3), Q(7, 3)});
  CHECK_THROWS(parse_normal_vector("1,2"));
  CHECK_THROWS(parse_normal_vector("poly=x^3-1;v=(1,x)"));

  CHECK(parse_brun_word("2,3,2") == std::vector<int>{2, 3, 2});
  CHECK_THROWS(parse_brun_word("2,4"));
  CHECK(parse_jp_word("(0,1)(1,3)") ==
        std::vector<std::pair<long, long>>{{0, 1}, {1, 3}});
  CHECK_THROWS(parse_jp_word("0,1"));
}

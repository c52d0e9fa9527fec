#include "doctest.h"
#include "planegen/cf.hpp"
#include "planegen/subst.hpp"

#include <algorithm>
#include <random>

using namespace pg;

TEST_CASE("abelianization counts letters") {
  CHECK(abelianization("32") == V3{0, 1, 1});
  CHECK(abelianization("") == V3{0, 0, 0});
  CHECK(abelianization("13331") == V3{2, 0, 3});
  CHECK_THROWS(abelianization("14"));
}

TEST_CASE("matrix basics") {
  Mat3 m{{{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}}};
  CHECK(m.det() == 1);
  Mat3 inv = m.inverse_unimodular();
  CHECK(m * inv == Mat3::identity());
  CHECK(inv * m == Mat3::identity());
  CHECK(m.apply({1, 2, 3}) == V3{1, 5, 3});
  CHECK(m.transposed().apply({1, 2, 3}) == V3{1, 2, 5});
}

TEST_CASE("substitution validation and incidence") {
  CHECK_THROWS(Substitution("1", "", "3"));
  CHECK_THROWS(Substitution("1", "4", "3"));
  Substitution s("1", "2", "32");
  CHECK(s.apply("123") == "1232");
  Mat3 m = s.incidence();
  for (int i = 1; i <= 3; ++i) {
    V3 col = abelianization(s.image(i));
    for (int r = 0; r < 3; ++r) CHECK(m.m[r][i - 1] == col[r]);
  }
  CHECK(s.is_unimodular());
}

TEST_CASE("composition") {
  const Substitution& b1 = brun_substitution(1);
  CHECK(compose(b1, identity_substitution()) == b1);
  CHECK(compose(identity_substitution(), b1) == b1);
  Substitution sq = compose(brun_substitution(3), brun_substitution(3));
  CHECK(sq.image(1) == "3");
  CHECK(sq.image(2) == "13");
  CHECK(sq.image(3) == "213");
  // incidence of a composite is the product of incidences
  Substitution c = compose(brun_substitution(2), brun_substitution(3));
  CHECK(c.incidence() == brun_substitution(2).incidence() * brun_substitution(3).incidence());
}

TEST_CASE("Pisot classification of the additive family") {
  CHECK(!brun_substitution(1).is_irreducible_pisot());
  CHECK(!brun_substitution(2).is_irreducible_pisot());
  CHECK(brun_substitution(3).is_irreducible_pisot());
  CHECK(!compose(brun_substitution(1), brun_substitution(2)).is_irreducible_pisot());
  CHECK(compose(brun_substitution(2), compose(brun_substitution(3), brun_substitution(2)))
            .is_irreducible_pisot());
}

TEST_CASE("dual images of single faces") {
  const Substitution& b1 = brun_substitution(1);
  CHECK(b1.dual_image(Face{{0, 0, 0}, 3}) == Pattern{{Face{{0, 1, 0}, 3}}});
  CHECK(b1.dual_image(Face{{0, 0, 0}, 2}) ==
        Pattern{{Face{{0, 0, 0}, 2}, Face{{0, 0, 0}, 3}}});
  CHECK(b1.dual_image(Face{{0, 0, 0}, 1}) == Pattern{{Face{{0, 0, 0}, 1}}});
  for (long a = 0; a <= 4; ++a)
    for (long b = a; b <= 4; ++b) {
      if (b == 0) continue;
      Substitution s = jp_substitution(a, b);
      CHECK(s.dual_image(Face{{0, 0, 0}, 1}) == Pattern{{Face{{a, 0, 0}, 2}}});
      CHECK(s.dual_image(Face{{0, 0, 0}, 2}) == Pattern{{Face{{b, 0, 0}, 3}}});
      Pattern expect{{Face{{0, 0, 0}, 1}}};
      for (long k = 0; k < a; ++k) expect.insert(Face{{k, 0, 0}, 2});
      for (long k = 0; k < b; ++k) expect.insert(Face{{k, 0, 0}, 3});
      CHECK(s.dual_image(Face{{0, 0, 0}, 3}) == expect);
    }
}

TEST_CASE("dual image is translation equivariant") {
  const Substitution& b1 = brun_substitution(1);
  Mat3 minv = b1.incidence().inverse_unimodular();
  Face f{{1, 0, 0}, 2};
  Pattern direct = b1.dual_image(f);
  Pattern shifted = b1.dual_image(Face{{0, 0, 0}, 2}).translated(minv.apply({1, 0, 0}));
  CHECK(direct == shifted);
}

namespace {

Substitution random_unimodular_product(std::mt19937& rng, int len) {
  Substitution s = identity_substitution();
  std::uniform_int_distribution<int> fam(0, 1), idx(1, 3), dig(0, 2);
  for (int k = 0; k < len; ++k) {
    if (fam(rng) == 0) {
      s = compose(s, brun_substitution(idx(rng)));
    } else {
      long a = dig(rng), b = a + dig(rng);
      if (b == 0) b = 1;
      s = compose(s, jp_substitution(a, b));
    }
  }
  return s;
}

Face random_face(std::mt19937& rng, int window) {
  std::uniform_int_distribution<int64_t> c(-window, window);
  std::uniform_int_distribution<int> t(1, 3);
  return Face{{c(rng), c(rng), c(rng)}, t(rng)};
}

}  // namespace

TEST_CASE("dual action reverses composition order") {
  std::mt19937 rng(12345);
  for (int it = 0; it < 200; ++it) {
    Substitution s1 = random_unimodular_product(rng, 2);
    Substitution s2 = random_unimodular_product(rng, 2);
    Face f = random_face(rng, 3);
    Pattern lhs = compose(s1, s2).dual_image(f);
    Pattern rhs = s2.dual_image(s1.dual_image(f));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("image and preimage are adjoint") {
  std::mt19937 rng(999);
  for (int it = 0; it < 500; ++it) {
    Substitution s = random_unimodular_product(rng, 2);
    Face f = random_face(rng, 3);
    for (const Face& g : s.dual_preimages(f)) REQUIRE(s.dual_image(g).contains(f));
    // and the converse on a small window of candidate sources
    Face g = random_face(rng, 2);
    if (s.dual_image(g).contains(f)) {
      auto pre = s.dual_preimages(f);
      REQUIRE(std::find(pre.begin(), pre.end(), g) != pre.end());
    }
  }
}

TEST_CASE("preimages respect the cone filter") {
  const Substitution& b1 = brun_substitution(1);
  Face f{{0, 0, 0}, 3};
  auto all = b1.dual_preimages(f);
  auto filtered = b1.dual_preimages(f, &cone_brun());
  CHECK(filtered.size() <= all.size());
  for (const Face& g : filtered) CHECK(cone_brun().admits_face(g));
}

TEST_CASE("dual images of distinct plane faces do not overlap") {
  NormalVector v(Vec3Q{2, 3, 4});
  Pattern patch = plane_patch(v, 2);
  const Substitution& b2 = brun_substitution(2);
  std::vector<Pattern> images;
  for (const auto& f : patch) images.push_back(b2.dual_image(f));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      REQUIRE(!images[i].intersects(images[j]));
}

TEST_CASE("dual images map planes onto planes") {
  // window-restricted instance of the plane covariance identity
  for (int i = 1; i <= 3; ++i) {
    const Substitution& s = brun_substitution(i);
    Mat3 mt = s.incidence().transposed();
    for (auto vv : {V3{2, 3, 4}, V3{1, 5, 7}, V3{3, 4, 9}}) {
      NormalVector v(Vec3Q{Q(static_cast<long>(vv[0])), Q(static_cast<long>(vv[1])),
                           Q(static_cast<long>(vv[2]))});
      V3 mv = mt.apply(vv);
      NormalVector w(Vec3Q{Q(static_cast<long>(mv[0])), Q(static_cast<long>(mv[1])),
                           Q(static_cast<long>(mv[2]))});
      if (!normal_strictly_positive(w)) continue;
      Pattern img = s.dual_image(plane_patch(v, 12));
      Pattern target = plane_patch(w, 4);
      // image faces within the core window are exactly the target plane there
      for (const auto& f : target) REQUIRE(img.contains(f) == plane_contains(w, f));
      for (const auto& f : img) {
        bool inside = true;
        for (auto c : f.x) inside = inside && c >= -4 && c <= 4;
        if (inside) REQUIRE(plane_contains(w, f));
      }
    }
  }
}

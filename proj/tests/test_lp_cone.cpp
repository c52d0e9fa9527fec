#include "doctest.h"
#include "planegen/cone.hpp"
#include "planegen/lp.hpp"

using namespace pg;

TEST_CASE("strict homogeneous feasibility") {
  using Rows = std::vector<std::vector<Q>>;
  CHECK(strict_homogeneous_feasible(Rows{{1}}, {}));               // x > 0
  CHECK(!strict_homogeneous_feasible(Rows{{1}, {-1}}, {}));       // x > 0, -x > 0
  CHECK(!strict_homogeneous_feasible(Rows{{1, -1}}, Rows{{-1, 1}}));
  CHECK(strict_homogeneous_feasible(Rows{{1, 0}, {0, 1}}, Rows{{-1, 1}}));
  CHECK(strict_homogeneous_feasible(Rows{}, Rows{{1, 1}, {-1, -1}}));  // x = 0 allowed weakly
}

TEST_CASE("cone construction rejects empty cones") {
  CHECK_NOTHROW(Cone({{1, 0, 0}}));
  CHECK_THROWS(Cone({{1, 0, 0}, {-1, 0, 0}}));
  CHECK_THROWS(Cone(std::vector<V3>{}));
}

TEST_CASE("lower-half-cube faces pass every cone filter") {
  for (const Cone* c : {&cone_brun(), &cone_jp(), &cone_positive()})
    for (int t = 1; t <= 3; ++t) CHECK(c->admits_face(Face{{0, 0, 0}, t}));
}

TEST_CASE("ordered-cone filter verdicts") {
  CHECK(cone_brun().admits_face(Face{{1, 1, -1}, 1}));
  // 0 <= <x,v> = v3 < v2 is impossible under v2 < v3.
  CHECK(!cone_jp().admits_face(Face{{0, 0, 1}, 2}));
  CHECK(!cone_brun().admits_face(Face{{0, 0, 1}, 2}));
  CHECK(cone_positive().admits_face(Face{{0, 0, 1}, 2}));
  CHECK(!cone_brun().admits_face(Face{{5, 5, 5}, 3}));
}

TEST_CASE("joint pattern feasibility is stronger than facewise") {
  // Each face alone is admissible, but no single plane holds both:
  // f forces v3 < v2 while g forces v2 < v3.
  Face f{{0, 0, 1}, 2};
  Face g{{0, 1, 0}, 3};
  CHECK(cone_positive().admits_face(f));
  CHECK(cone_positive().admits_face(g));
  CHECK(cone_positive().admits_pattern(Pattern{{Face{{0, 0, 0}, 1}, g}}));
  CHECK(!cone_positive().admits_pattern(Pattern{{f, g}}));
}

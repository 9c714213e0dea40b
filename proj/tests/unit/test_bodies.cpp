#include "bodies/bodies.hpp"
#include "doctest.h"
#include "facelab/facelab.hpp"
#include "helpers.hpp"
#include "tensorcone/tensorcone.hpp"

using namespace conetensor;
using testutil::vecs;

namespace {

Polytope interval() { return Polytope::from_points(1, vecs({{-1}, {1}})); }
Polytope square() { return Polytope::from_points(2, vecs({{-1, -1}, {-1, 1}, {1, -1}, {1, 1}})); }

}  // namespace

TEST_SUITE("bodies") {
  TEST_CASE("from_points keeps extreme points") {
    const Polytope p = Polytope::from_points(2, vecs({{-1, -1}, {1, 1}, {0, 0}, {-1, 1}, {1, -1}, {1, 0}}));
    CHECK(p.vertices == square().vertices);
    CHECK(p.symmetric);
    CHECK_FALSE(Polytope::from_points(1, vecs({{2}, {3}})).symmetric);
    CHECK_THROWS_AS(Polytope::from_points(2, {}), PreconditionError);
  }

  TEST_CASE("homogenization") {
    CHECK(homogenize(interval()).rays() == vecs({{-1, 1}, {1, 1}}));
    const Cone q = Cone::from_generators(3, vecs({{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}}));
    CHECK(homogenize(square()) == q);
    CHECK(homogenize(Polytope::from_points(2, vecs({{0, 0}}))).rays() == vecs({{0, 0, 1}}));
  }

  TEST_CASE("tensor hulls") {
    CHECK(tensor_hull(interval(), interval()).vertices == vecs({{-1}, {1}}));
    CHECK(tensor_hull(interval(), square()).vertices == square().vertices);
    const Polytope h = tensor_hull(interval(), Polytope::from_points(1, vecs({{2}, {3}})));
    CHECK(h.vertices == vecs({{-3}, {3}}));
    CHECK_FALSE(h.has_vertex(make_vector({2})));
  }

  TEST_CASE("hull slices") {
    CHECK(hull_slice_check(interval(), interval()));
    CHECK(hull_slice_check(interval(), square()));
    CHECK(hull_slice_check(Polytope::from_points(1, vecs({{0}})), interval()));
  }

  TEST_CASE("face tensors") {
    CHECK(face_tensor_check(interval(), interval(), {1}, {1}));
    CHECK(face_tensor_check(square(), interval(), {2, 3}, {1}));
    CHECK_THROWS_AS(face_tensor_check(square(), interval(), {0, 1, 2, 3}, {1}), ImproperFaceError);
    CHECK_THROWS_AS(face_tensor_check(square(), interval(), {}, {1}), ImproperFaceError);
    CHECK_THROWS_AS(face_tensor_check(square(), interval(), {0, 3}, {1}), NotAFaceError);
  }

  TEST_CASE("extreme points survive for symmetric bodies") {
    const Polytope cross = Polytope::from_points(2, vecs({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
    CHECK(extreme_points_preserved(square(), cross));
    CHECK(extreme_points_preserved(cross, cross));
    CHECK(face_lattice(homogenize(square())).size() == 10);
  }
}

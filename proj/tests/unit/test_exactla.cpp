#include <random>

#include "doctest.h"
#include "exactla/exactla.hpp"
#include "helpers.hpp"

using namespace conetensor;
using testutil::vecs;

TEST_SUITE("exactla") {
  TEST_CASE("rref of the identity") {
    const RowEchelon r = rref(Matrix::identity(2));
    CHECK(r.reduced == Matrix::identity(2));
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("rref of a rank-one matrix") {
    const RowEchelon r = rref(Matrix::from_rows({{1, 2}, {2, 4}}));
    CHECK(r.rank() == 1);
    CHECK(r.pivots == std::vector<std::size_t>{0});
    CHECK(r.reduced.row(0) == make_vector({1, 2}));
    CHECK(is_zero(r.reduced.row(1)));
  }

  TEST_CASE("rref of a full-rank 3x3 matrix") {
    const RowEchelon r = rref(Matrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    CHECK(r.reduced == Matrix::identity(3));
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
  }

  TEST_CASE("rref keeps fractions exact") {
    const RowEchelon r = rref(Matrix::from_rows({{2, 1}, {4, 3}}));
    CHECK(r.reduced == Matrix::identity(2));
    const RowEchelon s = rref(Matrix::from_rows({{3, 1, 2}}));
    CHECK(s.reduced(0, 1) == Rational(1, 3));
    CHECK(s.reduced(0, 2) == Rational(2, 3));
  }

  TEST_CASE("kernel bases") {
    CHECK(kernel_basis(Matrix::identity(3)).empty());
    CHECK(kernel_basis(Matrix(2, 3)) == vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(kernel_basis(Matrix::from_rows({{1, 1, 0}})) == vecs({{1, -1, 0}, {0, 0, 1}}));
  }

  TEST_CASE("kernel vectors are annihilated") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
      Matrix m(2, 4);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 4; ++c) m(r, c) = d(rng);
      const auto k = kernel_basis(m);
      CHECK(k.size() + rank(m) == 4);
      for (const auto& v : k) CHECK(is_zero(m.apply(v)));
    }
  }

  TEST_CASE("subspace sum, intersection and containment") {
    const Subspace e1 = Subspace::span(vecs({{1, 0}}), 2);
    const Subspace e2 = Subspace::span(vecs({{0, 1}}), 2);
    CHECK(subspace_sum(e1, e2).is_whole());

    const Subspace a = Subspace::span(vecs({{1, 0, 0}, {0, 1, 0}}), 3);
    const Subspace b = Subspace::span(vecs({{0, 1, 0}, {0, 0, 1}}), 3);
    CHECK(subspace_intersection(a, b) == Subspace::span(vecs({{0, 1, 0}}), 3));

    CHECK(subspace_contains(Subspace::span(vecs({{1, 1}}), 2), Subspace::span(vecs({{2, 2}}), 2)));
    CHECK_FALSE(subspace_contains(e1, e2));
  }

  TEST_CASE("canonical bases do not depend on the spanning set") {
    const Subspace a = Subspace::span(vecs({{1, 2, 3}, {4, 5, 6}}), 3);
    const Subspace b = Subspace::span(vecs({{5, 7, 9}, {3, 3, 3}, {1, 2, 3}}), 3);
    CHECK(a == b);
    CHECK(a.dim() == 2);
    for (const auto& v : a.basis()) CHECK(primitive(v) == v);
  }

  TEST_CASE("orthogonal complement") {
    const Subspace a = Subspace::span(vecs({{1, 1, 0}}), 3);
    const Subspace c = a.orthogonal_complement();
    CHECK(c.dim() == 2);
    for (const auto& v : c.basis()) CHECK(dot(v, make_vector({1, 1, 0})) == 0);
    CHECK(c.orthogonal_complement() == a);
    CHECK(Subspace(3).orthogonal_complement().is_whole());
  }

  TEST_CASE("primitive and sign normalization") {
    Vector v{Rational(1, 2), Rational(-3, 4), 0};
    CHECK(primitive(v) == make_vector({2, -3, 0}));
    CHECK(primitive(negate(v)) == make_vector({-2, 3, 0}));
    CHECK(sign_normalized(negate(v)) == make_vector({2, -3, 0}));
    CHECK(primitive(zero_vector(2)) == zero_vector(2));
    CHECK(positively_parallel(make_vector({1, 2}), make_vector({3, 6})));
    CHECK_FALSE(positively_parallel(make_vector({1, 2}), make_vector({-1, -2})));
  }

  TEST_CASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS(dot(make_vector({1}), make_vector({1, 2})), DimensionError);
    CHECK_THROWS_AS(Matrix::identity(2).apply(make_vector({1, 2, 3})), DimensionError);
  }

  TEST_CASE("formatting") {
    CHECK(to_string(Rational(-1, 2)) == "-1/2");
    CHECK(to_string(Rational(4)) == "4");
    CHECK(to_string(make_vector({1, -2})) == "(1,-2)");
  }
}

#include <random>

#include "doctest.h"
#include "facelab/facelab.hpp"
#include "helpers.hpp"
#include "tensorcone/tensorcone.hpp"

using namespace conetensor;
using testutil::sorted;
using testutil::vecs;

namespace {

Cone orthant(std::size_t n) {
  std::vector<Vector> rays;
  for (std::size_t i = 0; i < n; ++i) rays.push_back(unit_vector(n, i));
  return Cone::from_generators(n, rays);
}
Cone square_cone() { return Cone::from_generators(3, vecs({{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}})); }
Cone halfplane() { return Cone::from_constraints(2, vecs({{0, 1}})); }

}  // namespace

TEST_SUITE("tensorcone") {
  TEST_CASE("elementary tensors") {
    CHECK(vec_tensor(make_vector({1, 0}), make_vector({0, 1})) == make_vector({0, 1, 0, 0}));
    CHECK(vec_tensor(make_vector({1, 2}), make_vector({3, 4})) == make_vector({3, 4, 6, 8}));
    CHECK(is_zero(vec_tensor(make_vector({5, 7}), zero_vector(3))));
    CHECK(TensorSpace{2, 3}.index(1, 2) == 5);
  }

  TEST_CASE("kron_map acts on elementary tensors factorwise") {
    const Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}});
    const Matrix k = kron_map(swap, Matrix::identity(2));
    const Vector e1 = unit_vector(2, 0), e2 = unit_vector(2, 1);
    CHECK(k.apply(vec_tensor(e1, e2)) == vec_tensor(e2, e2));

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-4, 4);
    Matrix t(2, 3), s(3, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        t(i, j) = d(rng);
        s(j, i) = d(rng);
      }
    for (int trial = 0; trial < 20; ++trial) {
      const Vector x{d(rng), d(rng), d(rng)}, y{d(rng), d(rng)};
      CHECK(kron_map(t, s).apply(vec_tensor(x, y)) == vec_tensor(t.apply(x), s.apply(y)));
    }
  }

  TEST_CASE("reshape and rank") {
    const Vector u = vec_tensor(make_vector({1, 2}), make_vector({3, 4, 5}));
    CHECK(tensor_rank(u, 2, 3) == 1);
    CHECK(reshape(u, 2, 3)(1, 2) == 10);
    CHECK(tensor_rank(make_vector({1, 0, 0, 1}), 2, 2) == 2);
    CHECK(tensor_rank(zero_vector(4), 2, 2) == 0);
  }

  TEST_CASE("projective cone of orthants is an orthant") {
    const Cone m = projective_cone(orthant(2), orthant(2));
    CHECK(m == orthant(4));
    CHECK(m.rays().size() == 4);
  }

  TEST_CASE("projective cone of Q and the plane orthant has 8 extremal rays") {
    const Cone sq = square_cone();
    const Cone m = projective_cone(sq, orthant(2));
    CHECK(extremal_rays(m).size() == 8);
    for (const auto& q : sq.rays())
      for (std::size_t j = 0; j < 2; ++j) CHECK(m.contains(vec_tensor(q, unit_vector(2, j))));
  }

  TEST_CASE("injective cone is the dual of the projective cone of duals") {
    const Cone q = square_cone();
    CHECK(injective_cone(q, q.dual()) == projective_cone(q.dual(), q).dual());
    CHECK(subset(projective_cone(q, q.dual()), injective_cone(q, q.dual())));
  }

  TEST_CASE("lineality formulas") {
    CHECK(projective_lineality(orthant(2), square_cone()).is_zero());
    CHECK(projective_lineality(halfplane(), orthant(1)).basis() == vecs({{1, 0}}));
    CHECK(projective_lineality(Cone::whole(2), Cone::zero(2)).is_zero());
    CHECK(injective_lineality(orthant(2), square_cone()).is_zero());
    CHECK(injective_lineality(halfplane(), orthant(1)).basis() == vecs({{1, 0}}));
    CHECK(injective_lineality(Cone::zero(2), orthant(2)).is_zero());
    CHECK(injective_lineality(Cone::whole(2), orthant(2)).is_whole());
    CHECK(injective_lineality(Cone::whole(2), orthant(2)) == injective_cone(Cone::whole(2), orthant(2)).lineality());
  }

  TEST_CASE("reasonable cones") {
    const Cone q = square_cone();
    CHECK(is_reasonable(projective_cone(q, q.dual()), q, q.dual()));
    CHECK(is_reasonable(injective_cone(q, q.dual()), q, q.dual()));
    CHECK_FALSE(is_reasonable(orthant(9), q, q.dual()));
    CHECK_THROWS_AS(is_reasonable(orthant(4), q, q.dual()), DimensionError);
  }

  TEST_CASE("rank-one classification clauses") {
    const Cone q = square_cone();
    const Cone qs = q.dual();
    const Vector x = make_vector({1, 1, 1}), y = make_vector({1, 0, 1});
    for (auto kind : {TensorKind::projective, TensorKind::injective}) {
      const auto pos = rank_one_classify(x, y, q, qs, kind);
      CHECK(pos.member);
      CHECK(pos.clause == RankOneClause::positive_pair);
      const auto neg = rank_one_classify(negate(x), negate(y), q, qs, kind);
      CHECK(neg.member);
      CHECK(neg.clause == RankOneClause::negated_pair);
      CHECK_FALSE(rank_one_classify(x, negate(y), q, qs, kind).member);
    }
    const auto lin = rank_one_classify(make_vector({1, 0}), make_vector({2}), halfplane(), orthant(1),
                                       TensorKind::projective);
    CHECK(lin.member);
    CHECK(lin.clause == RankOneClause::left_lineality);
    CHECK(std::string(clause_name(lin.clause)) == "left_lineality");
    CHECK_THROWS_AS(rank_one_classify(zero_vector(3), y, q, qs, TensorKind::projective), PreconditionError);
  }

  TEST_CASE("rank-one classification agrees with membership") {
    const Cone q = square_cone();
    const Cone qs = q.dual();
    const Cone mn = projective_cone(q, qs);
    const Cone mx = injective_cone(q, qs);
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(-2, 2);
    int tested = 0;
    while (tested < 60) {
      const Vector x{d(rng), d(rng), d(rng)}, y{d(rng), d(rng), d(rng)};
      if (is_zero(x) || is_zero(y)) continue;
      ++tested;
      const Vector u = vec_tensor(x, y);
      CHECK(rank_one_classify(x, y, q, qs, TensorKind::projective).member == mn.contains(u));
      CHECK(rank_one_classify(x, y, q, qs, TensorKind::injective).member == mx.contains(u));
    }
  }

  TEST_CASE("map checks") {
    CHECK(pushforward_check(Matrix::identity(2), orthant(2), orthant(2)));
    const Matrix t = Matrix::from_rows(square_cone().rays(), 3).transpose();
    CHECK(pushforward_check(t, orthant(4), square_cone()));
    CHECK_FALSE(pushforward_check(Matrix::from_rows({{1, 0}}), orthant(2), Cone::zero(1)));
    CHECK(positive_map_check(Matrix::from_rows({{1, 1}, {0, 1}}), orthant(2), orthant(2)));
    CHECK_FALSE(positive_map_check(Matrix::from_rows({{1, -1}, {0, 1}}), orthant(2), orthant(2)));
    const Matrix facets = Matrix::from_rows(square_cone().ineqs(), 3);
    CHECK(bipositive_check(facets, square_cone(), orthant(4)));
    CHECK_FALSE(bipositive_check(Matrix::from_rows({{1, 1}, {0, 1}}), orthant(2), orthant(2)));
  }

  TEST_CASE("tensor of bipositive maps pulls max back to max") {
    const Cone q = square_cone();
    const Matrix t = Matrix::from_rows(q.ineqs(), 3);
    const Matrix s = Matrix::from_rows(q.dual().ineqs(), 3);
    CHECK(preimage_cone(kron_map(t, s), injective_cone(orthant(4), orthant(4))) == injective_cone(q, q.dual()));
  }
}

#include "doctest.h"
#include "facelab/facelab.hpp"
#include "helpers.hpp"
#include "oracle/oracle.hpp"
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
Cone ray(const Vector& v) { return Cone::from_generators(v.size(), {v}); }
Cone rays_cone(std::size_t dim, const std::vector<Vector>& vs) { return Cone::from_generators(dim, vs); }

const Vector e1 = make_vector({1, 0});
const Vector e2 = make_vector({0, 1});

}  // namespace

TEST_SUITE("facelab") {
  TEST_CASE("is_face basics") {
    CHECK(is_face(orthant(2), ray(e1)));
    CHECK_FALSE(is_face(orthant(2), ray(make_vector({1, 1}))));
    const Cone m = projective_cone(orthant(3), orthant(2));
    const Vector f1 = unit_vector(3, 0), f2 = unit_vector(3, 1);
    CHECK(is_face(m, rays_cone(6, {vec_tensor(f1, e1), vec_tensor(f2, e1)})));
    CHECK_THROWS_AS(is_face(orthant(2), ray(make_vector({-1, 0}))), PreconditionError);
  }

  TEST_CASE("face lattices") {
    CHECK(face_lattice(orthant(2)).size() == 4);
    CHECK(face_lattice(orthant(3)).size() == 8);
    CHECK(face_lattice(square_cone()).size() == 10);
    CHECK(face_lattice(halfplane()).size() == 2);
    CHECK(face_lattice(Cone::whole(2)).size() == 1);
    for (const auto& f : face_lattice(square_cone())) CHECK(is_face(square_cone(), f.cone()));
  }

  TEST_CASE("spans of faces are ideals") {
    const OrderIdeal a = span_is_ideal(orthant(2), ray(e1));
    CHECK(a.subspace == Subspace::span(std::vector<Vector>{e1}, 2));
    CHECK(restrict_to_subspace(orthant(2), a.subspace) == ray(e1));

    const OrderIdeal b = span_is_ideal(halfplane(), subspace_cone(halfplane().lineality()));
    CHECK(b.subspace == halfplane().lineality());

    const Cone edge = rays_cone(3, vecs({{1, 1, 1}, {1, -1, 1}}));
    const OrderIdeal c = span_is_ideal(square_cone(), edge);
    CHECK(c.subspace.dim() == 2);
    CHECK(is_ideal(square_cone(), c.subspace));
    CHECK(quotient_cone(square_cone(), c.subspace).cone.is_proper());
  }

  TEST_CASE("quotients of the square cone by a line") {
    const Subspace ray_line = Subspace::span(vecs({{1, 1, 1}}), 3);
    CHECK(is_ideal(square_cone(), ray_line));
    const Quotient good = quotient_cone(square_cone(), ray_line);
    CHECK(good.cone.dim() == 2);
    CHECK(good.cone.is_proper());

    // (1,0,1) is interior to an edge of Q, so its span is not an ideal
    const Subspace edge_line = Subspace::span(vecs({{1, 0, 1}}), 3);
    CHECK_FALSE(is_ideal(square_cone(), edge_line));
    CHECK_FALSE(quotient_cone(square_cone(), edge_line).cone.is_proper());
  }

  TEST_CASE("orface and andface on the plane orthant") {
    const Cone k = orthant(2);
    const Cone of = orface(k, k, ray(e1), ray(e1));
    CHECK(of == rays_cone(4, {vec_tensor(e1, e1), vec_tensor(e1, e2), vec_tensor(e2, e1)}));
    CHECK(orface(k, k, k, ray(e2)) == projective_cone(k, k));
    CHECK(orface(k, k, Cone::zero(2), Cone::zero(2)).is_zero());
    CHECK(andface(k, k, ray(e1), ray(e1)) == ray(vec_tensor(e1, e1)));
  }

  TEST_CASE("andface of an edge of Q with a ray") {
    const Cone q = square_cone();
    const Cone edge = rays_cone(3, vecs({{1, 1, 1}, {1, -1, 1}}));
    const Cone a = andface(q, orthant(2), edge, ray(e1));
    CHECK(a.rays().size() == 2);
    CHECK(is_face(projective_cone(q, orthant(2)), a));
    CHECK(oracle::face_definitional(projective_cone(q, orthant(2)), a, 8).is_face);
  }

  TEST_CASE("sublattice identities") {
    const Cone k = orthant(2);
    CHECK(face_sublattice_check(k, k, ray(e1), ray(e1)).all());
    CHECK(face_sublattice_check(k, k, k, ray(e1)).all());
    const Cone q = square_cone();
    const Cone edge = rays_cone(3, vecs({{1, 1, 1}, {1, -1, 1}}));
    CHECK(face_sublattice_check(q, q.dual(), edge, ray(q.dual().rays()[0])).all());
  }

  TEST_CASE("combined faces") {
    const Cone k = orthant(2);
    const CombinedFace c = combined_face(k, k, ray(e1), ray(e1), ray(e2), ray(e2));
    CHECK(c.cone == rays_cone(4, {vec_tensor(e1, e1), vec_tensor(e2, e2)}));
    CHECK(c.is_face);
    const CombinedFace z = combined_face(k, k, Cone::zero(2), Cone::zero(2), Cone::zero(2), Cone::zero(2));
    CHECK(z.cone.is_zero());
    const Cone q = square_cone();
    const Cone facet = rays_cone(3, vecs({{1, 1, 1}, {1, -1, 1}}));
    CHECK_THROWS_AS(combined_face(q, q, facet, ray(make_vector({1, 1, 1})), facet, ray(make_vector({1, -1, 1}))),
                    PreconditionError);
  }

  TEST_CASE("extremal rays") {
    CHECK(extremal_rays(orthant(3)).size() == 3);
    const Cone q = square_cone();
    const Cone qs = q.dual();
    const auto r = extremal_rays(projective_cone(q, qs));
    CHECK(r.size() == 16);
    for (const auto& a : q.rays())
      for (const auto& b : qs.rays())
        CHECK(std::find(r.begin(), r.end(), primitive(vec_tensor(a, b))) != r.end());
    const auto rmax = extremal_rays(injective_cone(q, q.dual()));
    CHECK(rmax.size() > 16);
    bool higher = false;
    for (const auto& v : rmax) higher = higher || tensor_rank(v, 3, 3) >= 2;
    CHECK(higher);
  }

  TEST_CASE("injective faces from dual data") {
    const Cone k = orthant(2);
    CHECK(injective_face_msetn(k, k, k.dual().rays(), Cone::zero(2)).is_zero());
    CHECK(injective_face_msetn(k, k, {e1}, ray(e1)) ==
          rays_cone(4, {vec_tensor(e1, e1), vec_tensor(e2, e1), vec_tensor(e2, e2)}));
    const Cone via_right = injective_face_mfacen(k, k, ray(e1), {e1});
    CHECK(is_face(injective_cone(k, k), via_right));

    const Cone q = square_cone();
    const Cone mx = injective_cone(q, q.dual());
    const Cone f = injective_face_msetn(q, q.dual(), {q.dual().rays()[0]}, ray(q.dual().rays()[1]));
    CHECK(is_face(mx, f));
    CHECK(oracle::face_definitional(mx, f, 8).is_face);
  }

  TEST_CASE("scor and scand") {
    const Cone k = orthant(2);
    CHECK(injective_orface_andface(k, k, ray(e1), ray(e1), InjectiveFaceKind::scand) == ray(vec_tensor(e1, e1)));
    const Cone q = square_cone();
    CHECK(injective_orface_andface(q, q.dual(), q, q.dual(), InjectiveFaceKind::scor) == injective_cone(q, q.dual()));
  }

  TEST_CASE("injective ideals") {
    const Cone q = square_cone();
    const IdealVerdict w =
        injective_ideal(q, q, Subspace::whole(3), Subspace::whole(3), InjectiveIdealKind::tensor_plus_lineality);
    CHECK(w.subspace.is_whole());
    CHECK(w.is_ideal);
    const Subspace i = span_is_ideal(q, ray(make_vector({1, 1, 1}))).subspace;
    const Subspace j = span_is_ideal(q.dual(), ray(q.dual().rays()[0])).subspace;
    for (auto kind : {InjectiveIdealKind::tensor_plus_lineality, InjectiveIdealKind::sum_form})
      CHECK(injective_ideal(q, q.dual(), i, j, kind).is_ideal);
  }

  TEST_CASE("exposed and dual faces") {
    CHECK(exposed_face(orthant(2), e2).cone() == ray(e1));
    const Face f = exposed_face(square_cone(), make_vector({1, 0, 1}));
    std::vector<Vector> got;
    for (auto idx : f.ray_subset) got.push_back(square_cone().rays()[idx]);
    CHECK(sorted(got) == sorted(vecs({{-1, 1, 1}, {-1, -1, 1}})));
    CHECK(exposed_face(square_cone(), zero_vector(3)).cone() == square_cone());
    CHECK(dual_face(orthant(2), orthant(2).dual().rays()).cone().is_zero());
    CHECK(dual_face(square_cone(), {make_vector({1, 0, 1})}).ray_subset == f.ray_subset);
    CHECK(dual_face(square_cone(), {}).cone() == square_cone());
  }

  TEST_CASE("maximal ideals") {
    const MaximalIdeals a = maximal_ideals(orthant(2));
    CHECK(a.ideals.size() == 2);
    CHECK(maximal_ideals(square_cone()).ideals.size() == 4);
    CHECK(maximal_ideals(Cone::whole(2)).ideals.empty());
    CHECK(maximal_ideals(Cone::zero(2)).non_generating_warning);
  }

  TEST_CASE("homomorphism checks") {
    const Cone k = orthant(2);
    const HomomorphismReport r = homomorphism_checks(Matrix::identity(2), k, k, Subspace(2));
    CHECK(r.factored == Matrix::identity(2));
    CHECK(r.consistent());

    const Subspace x_axis = Subspace::span(std::vector<Vector>{e1}, 2);
    const Quotient qh = quotient_cone(halfplane(), x_axis);
    CHECK(homomorphism_checks(qh.projection, halfplane(), qh.cone, x_axis).quotient_bipositive);
    const Quotient qk = quotient_cone(k, x_axis);
    CHECK_FALSE(homomorphism_checks(qk.projection, k, qk.cone, x_axis).quotient_bipositive);
  }

  TEST_CASE("projective ideal inclusion") {
    const Cone q = square_cone();
    const Subspace i = span_is_ideal(q, ray(make_vector({1, 1, 1}))).subspace;
    CHECK(ideal_inclusion_bipositive(q, q.dual(), i, Subspace::whole(3)));
  }
}

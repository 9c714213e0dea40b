#include "facelab/facelab.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tensorcone/tensorcone.hpp"

namespace conetensor {

namespace {

void require_dual_member(const Cone& c, const Vector& phi, const char* op) {
  if (phi.size() != c.dim()) throw DimensionError(std::string(op) + ": functional length differs from cone");
  for (const auto& g : c.generators()) {
    if (sgn(dot(phi, g)) < 0) {
      throw PreconditionError(std::string(op) + ": functional " + to_string(phi) + " is negative on " + to_string(g));
    }
  }
}

Cone with_constraints(const Cone& base, const std::vector<Vector>& ineqs, const std::vector<Vector>& eqs) {
  std::vector<Vector> all_ineqs = base.ineqs();
  all_ineqs.insert(all_ineqs.end(), ineqs.begin(), ineqs.end());
  std::vector<Vector> all_eqs = base.eqs().basis();
  all_eqs.insert(all_eqs.end(), eqs.begin(), eqs.end());
  return Cone::from_constraints(base.dim(), all_ineqs, all_eqs);
}

std::vector<std::size_t> rays_annihilated_by(const Cone& c, const std::vector<Vector>& functionals) {
  std::vector<std::size_t> idx;
  for (std::size_t r = 0; r < c.rays().size(); ++r) {
    bool tight = std::all_of(functionals.begin(), functionals.end(),
                             [&](const Vector& phi) { return sgn(dot(phi, c.rays()[r])) == 0; });
    if (tight) idx.push_back(r);
  }
  return idx;
}

}  // namespace

Cone Face::cone() const { return face_cone(parent, ray_subset); }

Face face_of(const Cone& c, const Cone& sub) {
  if (sub.dim() != c.dim()) throw DimensionError("face_of: dimensions differ");
  Face f{c, {}};
  for (std::size_t r = 0; r < c.rays().size(); ++r)
    if (sub.contains(c.rays()[r])) f.ray_subset.push_back(r);
  return f;
}

Cone face_cone(const Cone& c, const std::vector<std::size_t>& ray_subset) {
  std::vector<Vector> rays;
  for (auto r : ray_subset) rays.push_back(c.rays().at(r));
  return Cone::from_generators(c.dim(), rays, c.lineality().basis());
}

std::vector<Face> face_lattice(const Cone& c) {
  std::vector<std::vector<std::size_t>> tight;
  for (const auto& a : c.ineqs()) tight.push_back(rays_annihilated_by(c, {a}));

  std::vector<std::size_t> all(c.rays().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<std::vector<std::size_t>> seen{all};
  std::deque<std::vector<std::size_t>> queue{all};
  while (!queue.empty()) {
    auto s = std::move(queue.front());
    queue.pop_front();
    for (const auto& t : tight) {
      std::vector<std::size_t> meet;
      std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(meet));
      if (seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  std::vector<std::vector<std::size_t>> ordered(seen.begin(), seen.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Face> faces;
  for (auto& s : ordered) faces.push_back(Face{c, std::move(s)});
  return faces;
}

bool is_face(const Cone& c, const Cone& candidate) {
  if (!subset(candidate, c)) throw PreconditionError("is_face: candidate is not contained in the cone");
  const Subspace s = candidate.span();
  if (!(restrict_to_subspace(c, s) == candidate)) return false;
  return quotient_cone(c, s).cone.is_proper();
}

bool is_ideal(const Cone& c, const Subspace& subspace) { return quotient_cone(c, subspace).cone.is_proper(); }

OrderIdeal span_is_ideal(const Cone& c, const Cone& m) {
  if (!is_face(c, m)) throw PreconditionError("span_is_ideal: argument is not a face");
  Subspace s = m.span();
  if (!(restrict_to_subspace(c, s) == m)) throw PreconditionError("span_is_ideal: span(M) ∩ E+ differs from M");
  return OrderIdeal{c, std::move(s)};
}

Cone orface(const Cone& e, const Cone& f, const Cone& m, const Cone& n) {
  return minkowski_sum(projective_cone(m, f), projective_cone(e, n));
}

Cone andface(const Cone& e, const Cone& f, const Cone& m, const Cone& n) {
  return minkowski_sum(projective_cone(m, n), subspace_cone(projective_lineality(e, f)));
}

SublatticeReport face_sublattice_check(const Cone& e, const Cone& f, const Cone& m, const Cone& n) {
  const Cone lin_e = subspace_cone(e.lineality());
  const Cone lin_f = subspace_cone(f.lineality());
  const Cone and_mf = andface(e, f, m, f);
  const Cone and_en = andface(e, f, e, n);
  SublatticeReport r;
  r.or_is_join = orface(e, f, m, n) == minkowski_sum(and_mf, and_en);
  r.and_is_meet = andface(e, f, m, n) == intersect(and_mf, and_en);
  r.or_left_degenerate = orface(e, f, m, lin_f) == and_mf;
  r.or_right_degenerate = orface(e, f, lin_e, n) == and_en;
  return r;
}

CombinedFace combined_face(const Cone& e, const Cone& f, const Cone& m1, const Cone& n1, const Cone& m2,
                           const Cone& n2) {
  if (!(intersect(m1, m2) == subspace_cone(e.lineality()))) {
    throw PreconditionError("combined_face: M1 ∩ M2 is larger than the lineality of the left cone");
  }
  if (!(intersect(n1, n2) == subspace_cone(f.lineality()))) {
    throw PreconditionError("combined_face: N1 ∩ N2 is larger than the lineality of the right cone");
  }
  CombinedFace out{minkowski_sum(andface(e, f, m1, n1), andface(e, f, m2, n2))};
  out.matches_or_intersection = out.cone == intersect(orface(e, f, m1, n2), orface(e, f, m2, n1));
  out.is_face = is_face(projective_cone(e, f), out.cone);
  return out;
}

std::vector<Vector> extremal_rays(const Cone& c) {
  if (!c.is_proper()) return {};
  return c.rays();
}

Cone dual_face_cone(const Cone& c, const std::vector<Vector>& functionals) {
  for (const auto& phi : functionals) require_dual_member(c, phi, "dual face");
  if (functionals.empty()) return c;
  return restrict_to_subspace(c, Subspace::span(functionals, c.dim()).orthogonal_complement());
}

Cone diamond(const Cone& c, const Cone& m) { return dual_face_cone(c.dual(), m.generators()); }

Cone injective_face_msetn(const Cone& e, const Cone& f, const std::vector<Vector>& mprime, const Cone& n) {
  if (n.dim() != f.dim()) throw DimensionError("<M'|>N>: face dimension differs from the right cone");
  std::vector<Vector> ineqs, eqs;
  for (const auto& phi : mprime) {
    require_dual_member(e, phi, "<M'|>N>");
    for (const auto& a : n.ineqs()) ineqs.push_back(vec_tensor(phi, a));
    for (const auto& q : n.eqs().basis()) eqs.push_back(vec_tensor(phi, q));
  }
  return with_constraints(injective_cone(e, f), ineqs, eqs);
}

Cone injective_face_mfacen(const Cone& e, const Cone& f, const Cone& m, const std::vector<Vector>& nprime) {
  if (m.dim() != e.dim()) throw DimensionError("<M<|N'>: face dimension differs from the left cone");
  std::vector<Vector> ineqs, eqs;
  for (const auto& psi : nprime) {
    require_dual_member(f, psi, "<M<|N'>");
    for (const auto& a : m.ineqs()) ineqs.push_back(vec_tensor(a, psi));
    for (const auto& q : m.eqs().basis()) eqs.push_back(vec_tensor(q, psi));
  }
  return with_constraints(injective_cone(e, f), ineqs, eqs);
}

Cone injective_orface_andface(const Cone& e, const Cone& f, const Cone& m, const Cone& n, InjectiveFaceKind kind) {
  if (kind == InjectiveFaceKind::scor) {
    const Cone m_dia = diamond(e, m);
    const Cone n_dia = diamond(f, n);
    return intersect(injective_face_mfacen(e, f, m, n_dia.generators()),
                     injective_face_msetn(e, f, m_dia.generators(), n));
  }
  return intersect(injective_face_mfacen(e, f, m, f.dual().generators()),
                   injective_face_msetn(e, f, e.dual().generators(), n));
}

Cone predual_face(const Cone& e, const Cone& f, const Cone& x) {
  const Cone max = injective_cone(e, f);
  if (x.dim() != max.dim()) throw DimensionError("predual face: dimension differs from the tensor space");
  return dual_face_cone(max, x.generators());
}

IdealVerdict injective_ideal(const Cone& e, const Cone& f, const Subspace& i, const Subspace& j,
                             InjectiveIdealKind kind) {
  if (!is_ideal(e, i)) throw PreconditionError("injective_ideal: I is not an ideal of the left cone");
  if (!is_ideal(f, j)) throw PreconditionError("injective_ideal: J is not an ideal of the right cone");
  IdealVerdict v;
  if (kind == InjectiveIdealKind::tensor_plus_lineality) {
    v.subspace = subspace_sum(tensor_subspace(i, j), injective_lineality(e, f));
  } else {
    v.subspace = subspace_sum(tensor_subspace(i, Subspace::whole(f.dim())), tensor_subspace(Subspace::whole(e.dim()), j));
  }
  v.is_ideal = is_ideal(injective_cone(e, f), v.subspace);
  return v;
}

Face exposed_face(const Cone& c, const Vector& phi) {
  require_dual_member(c, phi, "exposed face");
  return Face{c, rays_annihilated_by(c, {phi})};
}

Face dual_face(const Cone& c, const std::vector<Vector>& subset) {
  for (const auto& phi : subset) require_dual_member(c, phi, "dual face");
  return Face{c, rays_annihilated_by(c, subset)};
}

MaximalIdeals maximal_ideals(const Cone& c) {
  MaximalIdeals out;
  out.non_generating_warning = !c.is_generating();
  for (const auto& phi : c.ineqs()) out.ideals.push_back(Subspace::kernel(Matrix::from_rows(std::span<const Vector>(&phi, 1), c.dim())));
  return out;
}

bool HomomorphismReport::consistent() const {
  return factors && factored_positive && quotient_bipositive == ideal_in_lineality && third_isomorphism.value_or(true) &&
         ideal_correspondence.value_or(true);
}

HomomorphismReport homomorphism_checks(const Matrix& t, const Cone& e, const Cone& g, const Subspace& i,
                                       const std::optional<Subspace>& j) {
  if (t.cols() != e.dim() || t.rows() != g.dim()) throw DimensionError("homomorphism: map shape differs from cones");
  if (i.ambient() != e.dim()) throw DimensionError("homomorphism: subspace dimension differs from cone");
  for (const auto& b : i.basis())
    if (!is_zero(t.apply(b))) throw PreconditionError("homomorphism: I is not contained in ker T");
  if (!positive_map_check(t, e, g)) throw PreconditionError("homomorphism: T is not positive");

  HomomorphismReport r;
  const Quotient q = quotient_cone(e, i);
  r.factored = t * q.section;
  r.factors = r.factored * q.projection == t;
  r.factored_positive = positive_map_check(r.factored, q.cone, g);
  r.quotient_bipositive = bipositive_check(q.projection, e, q.cone);
  r.ideal_in_lineality = e.lineality().contains(i);

  if (j) {
    if (!j->contains(i)) throw PreconditionError("homomorphism: I is not contained in J");
    std::vector<Vector> image;
    for (const auto& b : j->basis()) image.push_back(q.projection.apply(b));
    const Subspace j_mod_i = Subspace::span(image, q.cone.dim());
    const Quotient q2 = quotient_cone(q.cone, j_mod_i);
    const Quotient qj = quotient_cone(e, *j);
    const Matrix phi = q2.projection * q.projection * qj.section;
    r.third_isomorphism = rank(phi) == phi.rows() && phi.rows() == phi.cols() && bipositive_check(phi, qj.cone, q2.cone);
    r.ideal_correspondence = is_ideal(e, *j) == is_ideal(q.cone, j_mod_i);
  }
  return r;
}

bool ideal_inclusion_bipositive(const Cone& e, const Cone& f, const Subspace& i, const Subspace& j) {
  const Cone lhs = restrict_to_subspace(projective_cone(e, f), tensor_subspace(i, j));
  const Cone rhs = projective_cone(restrict_to_subspace(e, i), restrict_to_subspace(f, j));
  return lhs == rhs;
}

}  // namespace conetensor

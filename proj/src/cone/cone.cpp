#include "cone/cone.hpp"

#include <sstream>

namespace conetensor {

namespace {

void check_lengths(std::size_t dim, const std::vector<Vector>& vs, const char* what) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != dim) {
      throw DimensionError(std::string(what) + " " + std::to_string(i) + " has length " + std::to_string(vs[i].size()) +
                           ", expected " + std::to_string(dim));
    }
  }
}

void require_same_dim(const Cone& a, const Cone& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimensions " + std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()));
  }
}

}  // namespace

Cone Cone::from_generators(std::size_t dim, const std::vector<Vector>& rays, const std::vector<Vector>& lineality) {
  check_lengths(dim, rays, "ray");
  check_lengths(dim, lineality, "lineality vector");
  GeneratorSet dual = enumerate_generators(dim, rays, lineality);
  GeneratorSet primal = enumerate_generators(dim, dual.rays, dual.lineality.basis());
  return Cone(dim, std::move(primal), std::move(dual));
}

Cone Cone::from_constraints(std::size_t dim, const std::vector<Vector>& ineqs, const std::vector<Vector>& eqs) {
  check_lengths(dim, ineqs, "inequality");
  check_lengths(dim, eqs, "equation");
  GeneratorSet primal = enumerate_generators(dim, ineqs, eqs);
  GeneratorSet dual = enumerate_generators(dim, primal.rays, primal.lineality.basis());
  return Cone(dim, std::move(primal), std::move(dual));
}

Cone Cone::zero(std::size_t dim) {
  GeneratorSet primal{{}, Subspace(dim)};
  GeneratorSet dual{{}, Subspace::whole(dim)};
  return Cone(dim, std::move(primal), std::move(dual));
}

Cone Cone::whole(std::size_t dim) { return zero(dim).dual(); }

std::vector<Vector> Cone::generators() const {
  std::vector<Vector> g = primal_.rays;
  for (const auto& l : primal_.lineality.basis()) {
    g.push_back(l);
    g.push_back(negate(l));
  }
  return g;
}

Subspace Cone::span() const {
  std::vector<Vector> g = primal_.rays;
  g.insert(g.end(), primal_.lineality.basis().begin(), primal_.lineality.basis().end());
  return Subspace::span(g, dim_);
}

bool Cone::contains(const Vector& x) const {
  if (x.size() != dim_) {
    throw DimensionError("membership: point of length " + std::to_string(x.size()) + " in cone of dimension " +
                         std::to_string(dim_));
  }
  for (const auto& a : dual_.rays)
    if (sgn(dot(a, x)) < 0) return false;
  for (const auto& e : dual_.lineality.basis())
    if (sgn(dot(e, x)) != 0) return false;
  return true;
}

Cone cone_from(const ConeRepInput& input) {
  if (!input.has_generators() && !input.has_constraints()) {
    throw PreconditionError("cone input carries neither generators nor constraints");
  }
  static const std::vector<Vector> kNone;
  if (input.has_generators()) {
    Cone c = Cone::from_generators(input.dim, input.rays.value_or(kNone), input.lineality.value_or(kNone));
    if (input.has_constraints()) {
      Cone h = Cone::from_constraints(input.dim, input.ineqs.value_or(kNone), input.eqs.value_or(kNone));
      if (!(h == c)) throw PreconditionError("generators and constraints describe different cones");
    }
    return c;
  }
  return Cone::from_constraints(input.dim, input.ineqs.value_or(kNone), input.eqs.value_or(kNone));
}

Cone intersect(const Cone& a, const Cone& b) {
  require_same_dim(a, b, "intersect");
  std::vector<Vector> ineqs = a.ineqs();
  ineqs.insert(ineqs.end(), b.ineqs().begin(), b.ineqs().end());
  std::vector<Vector> eqs = a.eqs().basis();
  eqs.insert(eqs.end(), b.eqs().basis().begin(), b.eqs().basis().end());
  return Cone::from_constraints(a.dim(), ineqs, eqs);
}

Cone minkowski_sum(const Cone& a, const Cone& b) {
  require_same_dim(a, b, "minkowski_sum");
  std::vector<Vector> rays = a.rays();
  rays.insert(rays.end(), b.rays().begin(), b.rays().end());
  std::vector<Vector> lin = a.lineality().basis();
  lin.insert(lin.end(), b.lineality().basis().begin(), b.lineality().basis().end());
  return Cone::from_generators(a.dim(), rays, lin);
}

bool subset(const Cone& a, const Cone& b) {
  require_same_dim(a, b, "subset");
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

Cone subspace_cone(const Subspace& s) { return Cone::from_generators(s.ambient(), {}, s.basis()); }

Cone restrict_to_subspace(const Cone& c, const Subspace& s) {
  if (s.ambient() != c.dim()) throw DimensionError("restrict: subspace and cone dimensions differ");
  std::vector<Vector> eqs = c.eqs().basis();
  const auto perp = s.orthogonal_complement().basis();
  eqs.insert(eqs.end(), perp.begin(), perp.end());
  return Cone::from_constraints(c.dim(), c.ineqs(), eqs);
}

Cone image_cone(const Matrix& t, const Cone& c) {
  if (t.cols() != c.dim()) throw DimensionError("image: map and cone dimensions differ");
  std::vector<Vector> rays, lin;
  for (const auto& r : c.rays()) rays.push_back(t.apply(r));
  for (const auto& l : c.lineality().basis()) lin.push_back(t.apply(l));
  return Cone::from_generators(t.rows(), rays, lin);
}

Cone preimage_cone(const Matrix& t, const Cone& c) {
  if (t.rows() != c.dim()) throw DimensionError("preimage: map and cone dimensions differ");
  Matrix tt = t.transpose();
  std::vector<Vector> ineqs, eqs;
  for (const auto& a : c.ineqs()) ineqs.push_back(tt.apply(a));
  for (const auto& e : c.eqs().basis()) eqs.push_back(tt.apply(e));
  return Cone::from_constraints(t.cols(), ineqs, eqs);
}

Quotient quotient_cone(const Cone& c, const Subspace& ideal) {
  const std::size_t n = c.dim();
  if (ideal.ambient() != n) throw DimensionError("quotient: subspace and cone dimensions differ");
  std::vector<std::size_t> pivots;
  Matrix reduced;
  if (!ideal.is_zero()) {
    RowEchelon e = rref(ideal.basis_matrix());
    pivots = e.pivots;
    reduced = std::move(e.reduced);
  }
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  const std::size_t q = free_cols.size();
  Matrix projection(q, n);
  Matrix section(n, q);
  for (std::size_t r = 0; r < q; ++r) {
    const std::size_t j = free_cols[r];
    projection(r, j) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) projection(r, pivots[i]) = -reduced(i, j);
    section(j, r) = 1;
  }
  Cone image = image_cone(projection, c);
  return Quotient{std::move(image), std::move(projection), std::move(section)};
}

std::string describe(const Cone& c) {
  std::ostringstream os;
  os << "cone(dim=" << c.dim() << ", rays=" << c.rays().size() << ", lineality=" << c.lineality().dim()
     << ", facets=" << c.ineqs().size() << ", eqs=" << c.eqs().dim() << ")";
  return os.str();
}

}  // namespace conetensor

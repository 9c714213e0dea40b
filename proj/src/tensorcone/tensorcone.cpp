#include "tensorcone/tensorcone.hpp"

namespace conetensor {

namespace {

std::vector<Vector> pairwise(const std::vector<Vector>& xs, const std::vector<Vector>& ys) {
  std::vector<Vector> out;
  out.reserve(xs.size() * ys.size());
  for (const auto& x : xs)
    for (const auto& y : ys) out.push_back(vec_tensor(x, y));
  return out;
}

std::vector<Vector> concat(std::vector<Vector> a, const std::vector<Vector>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Vector> with_negations(const std::vector<Vector>& rays, const Subspace& lin) {
  std::vector<Vector> out = rays;
  for (const auto& l : lin.basis()) {
    out.push_back(l);
    out.push_back(negate(l));
  }
  return out;
}

}  // namespace

Vector vec_tensor(const Vector& x, const Vector& y) {
  Vector u(x.size() * y.size(), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) u[i * y.size() + j] = x[i] * y[j];
  }
  return u;
}

Matrix kron_map(const Matrix& t, const Matrix& s) {
  Matrix k(t.rows() * s.rows(), t.cols() * s.cols());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (sgn(t(i, j)) == 0) continue;
      for (std::size_t p = 0; p < s.rows(); ++p)
        for (std::size_t q = 0; q < s.cols(); ++q) k(i * s.rows() + p, j * s.cols() + q) = t(i, j) * s(p, q);
    }
  return k;
}

Matrix reshape(const Vector& u, std::size_t left_dim, std::size_t right_dim) {
  if (u.size() != left_dim * right_dim) throw DimensionError("reshape: length is not left_dim * right_dim");
  Matrix m(left_dim, right_dim);
  for (std::size_t i = 0; i < left_dim; ++i)
    for (std::size_t j = 0; j < right_dim; ++j) m(i, j) = u[i * right_dim + j];
  return m;
}

std::size_t tensor_rank(const Vector& u, std::size_t left_dim, std::size_t right_dim) {
  return rank(reshape(u, left_dim, right_dim));
}

Subspace tensor_subspace(const Subspace& a, const Subspace& b) {
  return Subspace::span(pairwise(a.basis(), b.basis()), a.ambient() * b.ambient());
}

Cone projective_cone(const Cone& e, const Cone& f) {
  const std::size_t dim = e.dim() * f.dim();
  std::vector<Vector> rays = pairwise(e.rays(), f.rays());
  const auto& le = e.lineality().basis();
  const auto& lf = f.lineality().basis();
  std::vector<Vector> lin = pairwise(le, concat(f.rays(), lf));
  lin = concat(std::move(lin), pairwise(concat(e.rays(), le), lf));
  return Cone::from_generators(dim, rays, lin);
}

Cone injective_cone(const Cone& e, const Cone& f) {
  const std::size_t dim = e.dim() * f.dim();
  std::vector<Vector> phis = with_negations(e.ineqs(), e.eqs());
  std::vector<Vector> psis = with_negations(f.ineqs(), f.eqs());
  return Cone::from_constraints(dim, pairwise(phis, psis));
}

Subspace projective_lineality(const Cone& e, const Cone& f) {
  return subspace_sum(tensor_subspace(e.lineality(), f.span()), tensor_subspace(e.span(), f.lineality()));
}

Subspace injective_lineality(const Cone& e, const Cone& f) {
  return subspace_sum(tensor_subspace(e.lineality(), Subspace::whole(f.dim())),
                      tensor_subspace(Subspace::whole(e.dim()), f.lineality()));
}

bool is_reasonable(const Cone& k, const Cone& e, const Cone& f) {
  if (k.dim() != e.dim() * f.dim()) {
    throw DimensionError("reasonable: cone of dimension " + std::to_string(k.dim()) + " over factors of dimension " +
                         std::to_string(e.dim()) + " and " + std::to_string(f.dim()));
  }
  return subset(projective_cone(e, f), k) && subset(k, injective_cone(e, f));
}

const char* clause_name(RankOneClause clause) {
  switch (clause) {
    case RankOneClause::left_lineality: return "left_lineality";
    case RankOneClause::right_lineality: return "right_lineality";
    case RankOneClause::positive_pair: return "positive_pair";
    case RankOneClause::negated_pair: return "negated_pair";
    case RankOneClause::none: break;
  }
  return "none";
}

RankOneVerdict rank_one_classify(const Vector& x, const Vector& y, const Cone& e, const Cone& f, TensorKind kind) {
  if (x.size() != e.dim() || y.size() != f.dim()) throw DimensionError("rank-one: factor lengths differ from cones");
  if (is_zero(x) || is_zero(y)) throw PreconditionError("rank-one: factors must be nonzero");
  auto verdict = [](RankOneClause c) { return RankOneVerdict{true, c}; };
  if (kind == TensorKind::projective) {
    if (e.lineality().contains(x) && f.span().contains(y)) return verdict(RankOneClause::left_lineality);
    if (e.span().contains(x) && f.lineality().contains(y)) return verdict(RankOneClause::right_lineality);
  } else {
    if (e.lineality().contains(x)) return verdict(RankOneClause::left_lineality);
    if (f.lineality().contains(y)) return verdict(RankOneClause::right_lineality);
  }
  if (e.contains(x) && f.contains(y)) return verdict(RankOneClause::positive_pair);
  if (e.contains(negate(x)) && f.contains(negate(y))) return verdict(RankOneClause::negated_pair);
  return RankOneVerdict{};
}

bool pushforward_check(const Matrix& t, const Cone& e, const Cone& g) {
  if (t.cols() != e.dim() || t.rows() != g.dim()) throw DimensionError("pushforward: map shape differs from cones");
  return image_cone(t, e) == g;
}

bool positive_map_check(const Matrix& t, const Cone& e, const Cone& g) {
  if (t.cols() != e.dim() || t.rows() != g.dim()) throw DimensionError("positive map: map shape differs from cones");
  for (const auto& x : e.generators())
    if (!g.contains(t.apply(x))) return false;
  return true;
}

bool bipositive_check(const Matrix& t, const Cone& e, const Cone& g) {
  if (t.cols() != e.dim() || t.rows() != g.dim()) throw DimensionError("bipositive: map shape differs from cones");
  return preimage_cone(t, g) == e;
}

}  // namespace conetensor

#include "bodies/bodies.hpp"

#include <algorithm>

#include "facelab/facelab.hpp"
#include "tensorcone/tensorcone.hpp"

namespace conetensor {

namespace {

Vector lift(const Vector& v) {
  Vector h = v;
  h.emplace_back(1);
  return h;
}

std::vector<Vector> points_of(const std::vector<Vector>& rays, std::size_t height_index,
                              const std::vector<std::size_t>& keep) {
  std::vector<Vector> pts;
  for (const auto& r : rays) {
    const Rational& h = r[height_index];
    Vector p;
    p.reserve(keep.size());
    for (auto k : keep) p.push_back(r[k] / h);
    pts.push_back(std::move(p));
  }
  return pts;
}

Cone homogenized_subset(const Polytope& p, const std::vector<std::size_t>& subset) {
  std::vector<Vector> gens;
  for (auto i : subset) gens.push_back(lift(p.vertices.at(i)));
  return Cone::from_generators(p.dim + 1, gens);
}

void check_proper_face(const Polytope& p, const std::vector<std::size_t>& subset, const char* which) {
  std::vector<std::size_t> s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (auto i : s)
    if (i >= p.vertices.size()) throw PreconditionError(std::string(which) + ": vertex index out of range");
  if (s.empty()) throw ImproperFaceError(std::string(which) + ": empty vertex subset");
  if (s.size() == p.vertices.size()) throw ImproperFaceError(std::string(which) + ": subset is the whole polytope");
  if (!is_face(homogenize(p), homogenized_subset(p, s))) {
    throw NotAFaceError(std::string(which) + ": vertex subset does not span a face");
  }
}

}  // namespace

Polytope Polytope::from_points(std::size_t dim, const std::vector<Vector>& points) {
  if (points.empty()) throw PreconditionError("polytope: no points");
  std::vector<Vector> gens;
  for (const auto& v : points) {
    if (v.size() != dim) throw DimensionError("polytope: point length differs from dimension");
    gens.push_back(lift(v));
  }
  Cone h = Cone::from_generators(dim + 1, gens);
  std::vector<std::size_t> keep(dim);
  for (std::size_t i = 0; i < dim; ++i) keep[i] = i;
  Polytope p;
  p.dim = dim;
  p.vertices = points_of(h.rays(), dim, keep);
  std::sort(p.vertices.begin(), p.vertices.end(), [](const Vector& a, const Vector& b) { return compare_lex(a, b) < 0; });
  p.symmetric = std::all_of(p.vertices.begin(), p.vertices.end(),
                            [&](const Vector& v) { return p.has_vertex(negate(v)); });
  return p;
}

bool Polytope::has_vertex(const Vector& v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }

Cone homogenize(const Polytope& p) {
  std::vector<Vector> gens;
  for (const auto& v : p.vertices) gens.push_back(lift(v));
  return Cone::from_generators(p.dim + 1, gens);
}

Polytope tensor_hull(const Polytope& c, const Polytope& d) {
  std::vector<Vector> pts;
  for (const auto& x : c.vertices)
    for (const auto& y : d.vertices) pts.push_back(vec_tensor(x, y));
  return Polytope::from_points(c.dim * d.dim, pts);
}

bool hull_slice_check(const Polytope& c, const Polytope& d) {
  if (!c.symmetric || !d.symmetric) throw PreconditionError("hull slice: both polytopes must be symmetric");
  const std::size_t m = c.dim;
  const std::size_t n = d.dim;
  const TensorSpace space{m + 1, n + 1};
  const Cone k = projective_cone(homogenize(c), homogenize(d));

  std::vector<Vector> mixed;
  for (std::size_t i = 0; i < m; ++i) mixed.push_back(unit_vector(space.total_dim(), space.index(i, n)));
  for (std::size_t j = 0; j < n; ++j) mixed.push_back(unit_vector(space.total_dim(), space.index(m, j)));
  const Cone sliced = restrict_to_subspace(k, Subspace::kernel(Matrix::from_rows(mixed, space.total_dim())));
  if (!sliced.is_proper() || sliced.rays().empty()) return false;

  const std::size_t height = space.index(m, n);
  for (const auto& r : sliced.rays())
    if (sgn(r[height]) <= 0) return false;  // unbounded slice
  std::vector<std::size_t> block;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) block.push_back(space.index(i, j));
  const Polytope slice = Polytope::from_points(m * n, points_of(sliced.rays(), height, block));
  return slice.vertices == tensor_hull(c, d).vertices;
}

bool face_tensor_check(const Polytope& c, const Polytope& d, const std::vector<std::size_t>& m,
                       const std::vector<std::size_t>& n) {
  if (!c.symmetric || !d.symmetric) throw PreconditionError("face tensor: both polytopes must be symmetric");
  check_proper_face(c, m, "left face");
  check_proper_face(d, n, "right face");
  std::vector<Vector> pts;
  for (auto i : m)
    for (auto j : n) pts.push_back(lift(vec_tensor(c.vertices[i], d.vertices[j])));
  const Cone hull = homogenize(tensor_hull(c, d));
  return is_face(hull, Cone::from_generators(hull.dim(), pts));
}

bool extreme_points_preserved(const Polytope& c, const Polytope& d) {
  const Polytope hull = tensor_hull(c, d);
  for (const auto& x : c.vertices)
    for (const auto& y : d.vertices)
      if (!hull.has_vertex(vec_tensor(x, y))) return false;
  return true;
}

}  // namespace conetensor

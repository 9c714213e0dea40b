#pragma once

#include <cstddef>
#include <vector>

#include "cone/cone.hpp"
#include "exactla/exactla.hpp"

namespace conetensor {

/// A face argument that is empty or the whole polytope where a proper face is required.
class ImproperFaceError : public PreconditionError {
 public:
  explicit ImproperFaceError(const std::string& what) : PreconditionError(what) {}
};

/// A vertex subset that does not span a face.
class NotAFaceError : public PreconditionError {
 public:
  explicit NotAFaceError(const std::string& what) : PreconditionError(what) {}
};

/**
 * A convex polytope given by its extreme points, sorted ascending.
 * `symmetric` records whether the vertex set is closed under negation.
 */
struct Polytope {
  std::size_t dim = 0;
  std::vector<Vector> vertices;
  bool symmetric = false;

  /// Keeps only the extreme points of conv(points); throws PreconditionError when empty.
  static Polytope from_points(std::size_t dim, const std::vector<Vector>& points);

  bool has_vertex(const Vector& v) const;
};

/// The cone over p × {1}.
Cone homogenize(const Polytope& p);

/// conv{x ⊗ y : x ∈ c, y ∈ d}.
Polytope tensor_hull(const Polytope& c, const Polytope& d);

/**
 * Slices min(homogenize(c), homogenize(d)) at the tensor coordinate of
 * (1 ⊗ 1) = 1 with the mixed coordinates zero, and compares the slice
 * with tensor_hull(c, d). Both inputs must be symmetric.
 */
bool hull_slice_check(const Polytope& c, const Polytope& d);

/**
 * Whether conv(M ⊗ N) is a face of tensor_hull(c, d), where m and n index
 * vertices of c and d. Requires symmetric inputs and proper nonempty
 * faces: ImproperFaceError for an empty or full subset, NotAFaceError when
 * a subset does not span a face.
 */
bool face_tensor_check(const Polytope& c, const Polytope& d, const std::vector<std::size_t>& m,
                       const std::vector<std::size_t>& n);

/// Every x ⊗ y with x, y vertices is a vertex of tensor_hull(c, d).
bool extreme_points_preserved(const Polytope& c, const Polytope& d);

}  // namespace conetensor

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cone/double_description.hpp"
#include "exactla/exactla.hpp"

namespace conetensor {

/// A documented precondition of an operation does not hold for its inputs.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

struct ConeRepInput {
  std::size_t dim = 0;
  std::optional<std::vector<Vector>> rays;
  std::optional<std::vector<Vector>> lineality;
  std::optional<std::vector<Vector>> ineqs;
  std::optional<std::vector<Vector>> eqs;

  bool has_generators() const { return rays.has_value() || lineality.has_value(); }
  bool has_constraints() const { return ineqs.has_value() || eqs.has_value(); }
};

/**
 * A closed polyhedral cone carrying both of its representations.
 *
 * V-side: extremal rays (modulo lineality) and a lineality basis.
 * H-side: facet normals and a basis of the implicit equations.
 * The facet normals are exactly the rays of the dual cone and the
 * equations span its lineality space, so dual() only swaps the two sides.
 * Both sides are canonical, which makes structural equality the same as
 * set equality.
 */
class Cone {
 public:
  Cone() : Cone(zero(0)) {}

  static Cone from_generators(std::size_t dim, const std::vector<Vector>& rays,
                              const std::vector<Vector>& lineality = {});
  static Cone from_constraints(std::size_t dim, const std::vector<Vector>& ineqs,
                               const std::vector<Vector>& eqs = {});
  static Cone zero(std::size_t dim);
  static Cone whole(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<Vector>& rays() const { return primal_.rays; }
  const Subspace& lineality() const { return primal_.lineality; }
  const std::vector<Vector>& ineqs() const { return dual_.rays; }
  /// Basis of the equations; this is span(cone)^⊥.
  const Subspace& eqs() const { return dual_.lineality; }

  /// Rays followed by ± each lineality basis vector.
  std::vector<Vector> generators() const;
  Subspace span() const;

  bool contains(const Vector& x) const;
  bool is_proper() const { return primal_.lineality.is_zero(); }
  bool is_generating() const { return dual_.lineality.is_zero(); }
  bool is_full_space() const { return dual_.rays.empty() && dual_.lineality.is_zero(); }
  bool is_zero() const { return primal_.rays.empty() && primal_.lineality.is_zero(); }

  Cone dual() const { return Cone(dim_, dual_, primal_); }

  bool operator==(const Cone& other) const {
    return dim_ == other.dim_ && primal_.rays == other.primal_.rays && primal_.lineality == other.primal_.lineality;
  }

 private:
  Cone(std::size_t dim, GeneratorSet primal, GeneratorSet dual)
      : dim_(dim), primal_(std::move(primal)), dual_(std::move(dual)) {}

  std::size_t dim_;
  GeneratorSet primal_;
  GeneratorSet dual_;
};

/**
 * Builds a cone from whichever representation is present. When both are
 * given they must describe the same cone; a mismatch is a PreconditionError.
 */
Cone cone_from(const ConeRepInput& input);

Cone intersect(const Cone& a, const Cone& b);
Cone minkowski_sum(const Cone& a, const Cone& b);
/// True when a ⊆ b.
bool subset(const Cone& a, const Cone& b);

/// The subspace itself as a (non-proper) cone.
Cone subspace_cone(const Subspace& s);
/// c ∩ s.
Cone restrict_to_subspace(const Cone& c, const Subspace& s);

/// T[c] for T with dim(c) columns.
Cone image_cone(const Matrix& t, const Cone& c);
/// {x : Tx ∈ c} for T with dim(c) rows.
Cone preimage_cone(const Matrix& t, const Cone& c);

struct Quotient {
  Cone cone;
  Matrix projection;  // (n - dim I) x n, kernel exactly I
  Matrix section;     // n x (n - dim I), projection * section = identity
};

/**
 * Pushforward of c to E/I, with E/I identified with the coordinates that
 * are not pivots of the reduced echelon basis of I.
 */
Quotient quotient_cone(const Cone& c, const Subspace& ideal);

std::string describe(const Cone& c);

}  // namespace conetensor

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

/**
 * Exact rational linear algebra.
 *
 * Every geometric predicate in the library is decided over the rationals.
 * Scalars are GMP rationals (always kept in lowest terms with a positive
 * denominator), vectors are plain sequences of scalars, and subspaces carry
 * a canonical basis so that two subspaces are equal exactly when their
 * bases compare equal.
 */
namespace conetensor {

using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/** Thrown when operands live in different ambient dimensions. */
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/** Builds a vector from integer literals; handy in tests and the corpus. */
Vector make_vector(std::initializer_list<long> entries);
Vector zero_vector(std::size_t dim);
Vector unit_vector(std::size_t dim, std::size_t index);

Rational dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Vector& v, const Rational& factor);
Vector negate(const Vector& v);
bool is_zero(const Vector& v);

/// Lexicographic three-way comparison; vectors must have equal length.
int compare_lex(const Vector& a, const Vector& b);

/**
 * Clears denominators and divides by the gcd of the resulting integers.
 * Orientation is preserved, so this is the canonical form of a ray.
 * The zero vector is returned unchanged.
 */
Vector primitive(const Vector& v);

/// Primitive form with the first nonzero entry made positive.
Vector sign_normalized(const Vector& v);

/// True when b = t·a for some t > 0 (both nonzero).
bool positively_parallel(const Vector& a, const Vector& b);

std::string to_string(const Rational& q);
std::string to_string(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_list() const;

  Matrix transpose() const;
  Vector apply(const Vector& x) const;
  Matrix operator*(const Matrix& other) const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Unique reduced row echelon form with its pivot columns.
RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/**
 * Canonical basis of the null space: the reduced row echelon form of any
 * basis, each row scaled to a primitive integer vector. Empty when the map
 * is injective.
 */
std::vector<Vector> kernel_basis(const Matrix& m);

/**
 * A linear subspace of Q^n held by its canonical basis.
 *
 * The canonical basis is the set of nonzero rows of the reduced row echelon
 * form of any spanning set, each scaled to a primitive integer vector (the
 * pivot entry stays positive). Rows keep pivot order, which is descending
 * lexicographic order.
 */
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::span<const Vector> vectors, std::size_t ambient);
  static Subspace whole(std::size_t ambient);
  /// Null space of `m` (ambient = m.cols()).
  static Subspace kernel(const Matrix& m);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_whole() const { return basis_.size() == ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }
  Matrix basis_matrix() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// The annihilator under the standard pairing.
  Subspace orthogonal_complement() const;

  /// v minus its orthogonal projection onto this subspace.
  Vector project_out(const Vector& v) const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Computed as the kernel of the stacked annihilators of `a` and `b`.
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
/// True when `inner` ⊆ `outer`.
bool subspace_contains(const Subspace& outer, const Subspace& inner);

}  // namespace conetensor

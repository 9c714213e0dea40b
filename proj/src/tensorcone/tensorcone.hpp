#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cone/cone.hpp"
#include "exactla/exactla.hpp"

namespace conetensor {

/**
 * E ⊗ F with E = Q^m, F = Q^n, flattened row-major: the coordinate of
 * e_i ⊗ f_j is i*n + j (0-based). Every tensor routine uses this map.
 */
struct TensorSpace {
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;

  std::size_t total_dim() const { return left_dim * right_dim; }
  std::size_t index(std::size_t i, std::size_t j) const { return i * right_dim + j; }
};

Vector vec_tensor(const Vector& x, const Vector& y);
Matrix kron_map(const Matrix& t, const Matrix& s);

/// Reads u ∈ Q^{m·n} back as an m×n matrix.
Matrix reshape(const Vector& u, std::size_t left_dim, std::size_t right_dim);
std::size_t tensor_rank(const Vector& u, std::size_t left_dim, std::size_t right_dim);

/// span{a ⊗ b : a ∈ A, b ∈ B}.
Subspace tensor_subspace(const Subspace& a, const Subspace& b);

/// The projective (min) cone generated by the elementary tensors x ⊗ y, x ∈ e, y ∈ f.
Cone projective_cone(const Cone& e, const Cone& f);
/// The injective (max) cone: u with <u, φ⊗ψ> ≥ 0 for all φ ∈ dual(e), ψ ∈ dual(f).
Cone injective_cone(const Cone& e, const Cone& f);

/// lin(e) ⊗ span(f) + span(e) ⊗ lin(f).
Subspace projective_lineality(const Cone& e, const Cone& f);
/// lin(e) ⊗ F + E ⊗ lin(f).
Subspace injective_lineality(const Cone& e, const Cone& f);

bool is_reasonable(const Cone& k, const Cone& e, const Cone& f);

enum class TensorKind { projective, injective };

enum class RankOneClause {
  none,
  left_lineality,   // projective: x ∈ lin(e), y ∈ span(f); injective: x ∈ lin(e)
  right_lineality,  // projective: x ∈ span(e), y ∈ lin(f); injective: y ∈ lin(f)
  positive_pair,    // x ∈ e and y ∈ f
  negated_pair,     // -x ∈ e and -y ∈ f
};

struct RankOneVerdict {
  bool member = false;
  RankOneClause clause = RankOneClause::none;
};

const char* clause_name(RankOneClause clause);

/**
 * Decides x ⊗ y ∈ min(e,f) or max(e,f) by the rank-one criteria, without
 * building the tensor cone. The first clause that holds is reported.
 * Throws PreconditionError for a zero factor.
 */
RankOneVerdict rank_one_classify(const Vector& x, const Vector& y, const Cone& e, const Cone& f, TensorKind kind);

/// T[e] == g.
bool pushforward_check(const Matrix& t, const Cone& e, const Cone& g);
/// T[e] ⊆ g.
bool positive_map_check(const Matrix& t, const Cone& e, const Cone& g);
/// T positive and, additionally, T^{-1}[g] == e.
bool bipositive_check(const Matrix& t, const Cone& e, const Cone& g);

}  // namespace conetensor

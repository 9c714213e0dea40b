#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cone/cone.hpp"
#include "exactla/exactla.hpp"

namespace conetensor {

/**
 * A face of `parent`, stored as the indices of the parent's rays that it
 * contains. The parent's lineality is always part of the face, so an empty
 * index set is the minimal face lin(parent).
 */
struct Face {
  Cone parent;
  std::vector<std::size_t> ray_subset;

  Cone cone() const;
};

/// Indices of c's rays that lie in `sub`.
Face face_of(const Cone& c, const Cone& sub);
Cone face_cone(const Cone& c, const std::vector<std::size_t>& ray_subset);

/**
 * All faces of c, from lin(c) up to c, ordered by (ray count, indices).
 * Faces are intersections of facet tight sets, so this is combinatorial.
 */
std::vector<Face> face_lattice(const Cone& c);

/// Throws PreconditionError when candidate ⊄ c.
bool is_face(const Cone& c, const Cone& candidate);

struct OrderIdeal {
  Cone parent;
  Subspace subspace;
};

/// True when the quotient cone c/I is proper.
bool is_ideal(const Cone& c, const Subspace& subspace);

/// span(m) as an ideal of c. Throws PreconditionError unless m is a face with span(m) ∩ c = m.
OrderIdeal span_is_ideal(const Cone& c, const Cone& m);

Cone orface(const Cone& e, const Cone& f, const Cone& m, const Cone& n);
Cone andface(const Cone& e, const Cone& f, const Cone& m, const Cone& n);

struct SublatticeReport {
  bool or_is_join = false;           // orface(M,N) = andface(M,F) + andface(E,N)
  bool and_is_meet = false;          // andface(M,N) = andface(M,F) ∩ andface(E,N)
  bool or_left_degenerate = false;   // orface(M, lin F) = andface(M,F)
  bool or_right_degenerate = false;  // orface(lin E, N) = andface(E,N)

  bool all() const { return or_is_join && and_is_meet && or_left_degenerate && or_right_degenerate; }
};

SublatticeReport face_sublattice_check(const Cone& e, const Cone& f, const Cone& m, const Cone& n);

struct CombinedFace {
  Cone cone;
  bool matches_or_intersection = false;
  bool is_face = false;
};

/// andface(M1,N1) + andface(M2,N2); requires M1 ∩ M2 = lin(e) and N1 ∩ N2 = lin(f).
CombinedFace combined_face(const Cone& e, const Cone& f, const Cone& m1, const Cone& n1, const Cone& m2,
                           const Cone& n2);

/// c.rays() when c is proper, otherwise empty.
std::vector<Vector> extremal_rays(const Cone& c);

/// c ∩ S^⊥ where S is spanned by `functionals`; requires each functional in dual(c).
Cone dual_face_cone(const Cone& c, const std::vector<Vector>& functionals);
/// The face of dual(c) annihilating the face m: dual(c) ∩ m^⊥.
Cone diamond(const Cone& c, const Cone& m);

/**
 * <M' ▷ N> ∩ max(e,f): tensors u whose partial evaluation u(φ, ·) lies in N
 * for every φ in M'. Each φ must lie in dual(e).
 */
Cone injective_face_msetn(const Cone& e, const Cone& f, const std::vector<Vector>& mprime, const Cone& n);
/// <M ◁ N'> ∩ max(e,f): u(·, ψ) ∈ M for every ψ in N'. Each ψ must lie in dual(f).
Cone injective_face_mfacen(const Cone& e, const Cone& f, const Cone& m, const std::vector<Vector>& nprime);

enum class InjectiveFaceKind { scor, scand };

Cone injective_orface_andface(const Cone& e, const Cone& f, const Cone& m, const Cone& n, InjectiveFaceKind kind);

/// max(e,f) ∩ X^⊥ for X a cone in dual(e) ⊗ dual(f).
Cone predual_face(const Cone& e, const Cone& f, const Cone& x);

enum class InjectiveIdealKind { tensor_plus_lineality, sum_form };

struct IdealVerdict {
  Subspace subspace;
  bool is_ideal = false;
};

/// Throws PreconditionError when i or j is not an ideal of its cone.
IdealVerdict injective_ideal(const Cone& e, const Cone& f, const Subspace& i, const Subspace& j,
                             InjectiveIdealKind kind);

/// c ∩ ker(phi); phi must lie in dual(c).
Face exposed_face(const Cone& c, const Vector& phi);
/// c ∩ subset^⊥; every element of subset must lie in dual(c).
Face dual_face(const Cone& c, const std::vector<Vector>& subset);

struct MaximalIdeals {
  std::vector<Subspace> ideals;
  bool non_generating_warning = false;
};

/// ker(φ) for each extremal ray φ of dual(c).
MaximalIdeals maximal_ideals(const Cone& c);

struct HomomorphismReport {
  Matrix factored;                     // T̃ with T = T̃ ∘ P
  bool factors = false;                // T̃ P == T
  bool factored_positive = false;      // T̃ maps E/I into g
  bool quotient_bipositive = false;    // P is bipositive onto (E/I)_+
  bool ideal_in_lineality = false;     // I ⊆ lin(e)
  std::optional<bool> third_isomorphism;  // (E/I)/(J/I) ≅ E/J bipositively, when J is given
  std::optional<bool> ideal_correspondence;  // J ideal of E ⇔ J/I ideal of E/I

  bool consistent() const;
};

HomomorphismReport homomorphism_checks(const Matrix& t, const Cone& e, const Cone& g, const Subspace& i,
                                       const std::optional<Subspace>& j = std::nullopt);

/// For proper e,f: min(e,f) ∩ (I⊗J) == min(e∩I, f∩J).
bool ideal_inclusion_bipositive(const Cone& e, const Cone& f, const Subspace& i, const Subspace& j);

}  // namespace conetensor

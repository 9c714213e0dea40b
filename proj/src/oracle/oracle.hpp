#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cone/cone.hpp"
#include "exactla/exactla.hpp"

// Slow, exact verifiers. Nothing here calls the double description code:
// every decision goes through Fourier-Motzkin elimination on generator
// combinations.
namespace conetensor::oracle {

/**
 * Affine system over `nvars` variables. Each row has nvars + 1 entries and
 * means row · (v, 1) = 0 (eqs) or ≥ 0 (ineqs).
 */
struct FmSystem {
  std::size_t nvars = 0;
  std::vector<Vector> eqs;
  std::vector<Vector> ineqs;
};

/// Rows over the kept variables (in their original order) plus the constant.
struct FmProjection {
  bool infeasible = false;
  std::vector<Vector> eqs;
  std::vector<Vector> ineqs;
};

/**
 * Projects out the variables flagged in `eliminate`: Gaussian elimination
 * on the equations first, then Fourier-Motzkin with Chernikov's history
 * rule on the inequalities.
 */
FmProjection fm_project(const FmSystem& system, const std::vector<bool>& eliminate);

enum class LpStatus { infeasible, unbounded, optimal };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
};

/// sup of variable `objective` over the system.
LpResult fm_maximize(const FmSystem& system, std::size_t objective);

/// x ∈ cone(generators), decided on the combination system Σ λ_i g_i = x, λ ≥ 0.
bool membership_fm(std::size_t dim, const std::vector<Vector>& generators, const Vector& x);

/**
 * cone(generators) with a constraint description obtained by eliminating
 * the combination weights, so membership is a direct evaluation.
 */
class FmCone {
 public:
  FmCone(std::size_t dim, std::vector<Vector> generators);
  /// Uses c.generators() (rays and ± lineality) and nothing else from c.
  explicit FmCone(const Cone& c) : FmCone(c.dim(), c.generators()) {}

  std::size_t dim() const { return dim_; }
  const std::vector<Vector>& generators() const { return generators_; }
  bool contains(const Vector& x) const;

  /// sup{ε ≥ 0 : y − εg ∈ cone}; y must be a member. nullopt when unbounded.
  std::optional<Rational> max_step(const Vector& y, const Vector& g) const;

 private:
  std::size_t dim_;
  std::vector<Vector> generators_;
  std::vector<Vector> ineqs_;
  std::vector<Vector> eqs_;
};

/// True when no decomposition of x over generators uses a generator not parallel to x.
bool extremality_definitional(const FmCone& c, const Vector& x);

struct FaceEvidence {
  bool is_face = true;
  std::string witness;  // empty when is_face
};

/**
 * Literal face test: segments between generator pairs at t ∈ {1/4, 1/2, 3/4},
 * an order-interval probe from a relative-interior point of the candidate,
 * and `samples` extra random segments from a fixed seed.
 */
FaceEvidence face_definitional(const FmCone& c, const FmCone& candidate, std::size_t samples,
                               std::uint32_t seed = 20240611u);
FaceEvidence face_definitional(const Cone& c, const Cone& candidate, std::size_t samples);

}  // namespace conetensor::oracle

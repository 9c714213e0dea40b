#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactla/exactla.hpp"

namespace conetensor {

/// Raised when the intermediate ray list outgrows CONETENSOR_MAX_DD_ROWS.
class DdLimitExceeded : public std::runtime_error {
 public:
  DdLimitExceeded(std::size_t limit, std::size_t reached)
      : std::runtime_error("double description exceeded " + std::to_string(limit) +
                           " intermediate rays (reached " + std::to_string(reached) + ")"),
        limit_(limit) {}

  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

struct GeneratorSet {
  std::vector<Vector> rays;  // primitive, orthogonal to lineality, sorted ascending
  Subspace lineality;
};

/// Reads CONETENSOR_MAX_DD_ROWS; 4096 when unset or unparsable.
std::size_t dd_ray_limit();

/**
 * Minimal generators of {x : <a,x> >= 0 for a in ineqs, <e,x> = 0 for e in eqs}.
 *
 * Incremental double description with the combinatorial adjacency test on
 * the pointed part of the cone. The lineality space is split off first, so
 * the returned rays are extremal modulo lineality.
 */
GeneratorSet enumerate_generators(std::size_t dim, const std::vector<Vector>& ineqs,
                                  const std::vector<Vector>& eqs);

}  // namespace conetensor

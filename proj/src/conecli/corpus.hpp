#pragma once

#include <string>
#include <vector>

#include "bodies/bodies.hpp"
#include "cone/cone.hpp"

namespace conetensor::corpus {

struct NamedCone {
  std::string name;
  Cone cone;
};

struct NamedPolytope {
  std::string name;
  Polytope polytope;
};

/**
 * Bundled cones:
 *   std1, std2, std3   nonnegative orthants
 *   Q, Qstar           square cone {z >= |x| + |y|} and its dual
 *   halfplane          {y >= 0} in Q^2
 *   zero2, full2       {0} and all of Q^2
 *   point0             the only cone in Q^0
 *   pent5              cone over a pentagon in Q^3
 */
const std::vector<NamedCone>& cones();
/// The 8 cones used for the properness and lineality grids, in grid order.
const std::vector<NamedCone>& grid();
/// Pairs beyond the grid that the suites also cover.
const std::vector<std::pair<std::string, std::string>>& extra_pairs();

/// interval [-1,1], square [-1,1]^2, cube [-1,1]^3, cross2, cross3, seg23 = [2,3].
const std::vector<NamedPolytope>& polytopes();

/// Throws std::out_of_range for unknown names.
const Cone& cone(const std::string& name);
const Polytope& polytope(const std::string& name);

}  // namespace conetensor::corpus

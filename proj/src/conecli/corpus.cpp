#include "conecli/corpus.hpp"

#include <stdexcept>

namespace conetensor::corpus {

namespace {

Cone orthant(std::size_t n) {
  std::vector<Vector> rays;
  for (std::size_t i = 0; i < n; ++i) rays.push_back(unit_vector(n, i));
  return Cone::from_generators(n, rays);
}

std::vector<NamedCone> build_cones() {
  const Cone q = Cone::from_generators(
      3, {make_vector({1, 1, 1}), make_vector({1, -1, 1}), make_vector({-1, 1, 1}), make_vector({-1, -1, 1})});
  return {
      {"std1", orthant(1)},
      {"std2", orthant(2)},
      {"std3", orthant(3)},
      {"Q", q},
      {"Qstar", q.dual()},
      {"halfplane", Cone::from_constraints(2, {make_vector({0, 1})})},
      {"zero2", Cone::zero(2)},
      {"full2", Cone::whole(2)},
      {"point0", Cone::zero(0)},
      {"pent5", Cone::from_generators(3, {make_vector({1, 0, 1}), make_vector({0, 1, 1}), make_vector({-1, 1, 1}),
                                          make_vector({-1, -1, 1}), make_vector({0, -1, 1})})},
  };
}

std::vector<NamedPolytope> build_polytopes() {
  auto cube = [](std::size_t n) {
    std::vector<Vector> pts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Vector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1 ? 1 : -1;
      pts.push_back(v);
    }
    return Polytope::from_points(n, pts);
  };
  auto cross = [](std::size_t n) {
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < n; ++i) {
      pts.push_back(unit_vector(n, i));
      pts.push_back(negate(unit_vector(n, i)));
    }
    return Polytope::from_points(n, pts);
  };
  return {
      {"interval", cube(1)},
      {"square", cube(2)},
      {"cube3", cube(3)},
      {"cross2", cross(2)},
      {"cross3", cross(3)},
      {"seg23", Polytope::from_points(1, {make_vector({2}), make_vector({3})})},
  };
}

}  // namespace

const std::vector<NamedCone>& cones() {
  static const std::vector<NamedCone> all = build_cones();
  return all;
}

const std::vector<NamedCone>& grid() {
  static const std::vector<NamedCone> g = [] {
    std::vector<NamedCone> out;
    for (const char* name : {"std1", "std2", "Q", "Qstar", "halfplane", "zero2", "full2", "point0"})
      out.push_back({name, cone(name)});
    return out;
  }();
  return g;
}

const std::vector<std::pair<std::string, std::string>>& extra_pairs() {
  static const std::vector<std::pair<std::string, std::string>> pairs = {
      {"std3", "Qstar"}, {"Qstar", "std3"}, {"pent5", "std2"}, {"pent5", "Q"}, {"std2", "pent5"}, {"std3", "std2"},
  };
  return pairs;
}

const std::vector<NamedPolytope>& polytopes() {
  static const std::vector<NamedPolytope> all = build_polytopes();
  return all;
}

const Cone& cone(const std::string& name) {
  for (const auto& c : cones())
    if (c.name == name) return c.cone;
  throw std::out_of_range("no bundled cone named '" + name + "'");
}

const Polytope& polytope(const std::string& name) {
  for (const auto& p : polytopes())
    if (p.name == name) return p.polytope;
  throw std::out_of_range("no bundled polytope named '" + name + "'");
}

}  // namespace conetensor::corpus

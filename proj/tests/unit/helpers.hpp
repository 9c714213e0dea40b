#pragma once

#include <algorithm>
#include <vector>

#include "exactla/exactla.hpp"

namespace testutil {

using conetensor::Vector;

inline std::vector<Vector> vecs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> out;
  for (auto r : rows) out.push_back(conetensor::make_vector(r));
  return out;
}

inline std::vector<Vector> sorted(std::vector<Vector> v) {
  std::sort(v.begin(), v.end(), [](const Vector& a, const Vector& b) { return conetensor::compare_lex(a, b) < 0; });
  return v;
}

}  // namespace testutil

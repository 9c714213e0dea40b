#include "cone/double_description.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

#include <boost/dynamic_bitset.hpp>

namespace conetensor {

namespace {

using ZeroSet = boost::dynamic_bitset<>;

struct WorkRay {
  Vector coords;
  ZeroSet zeros;
};

void sort_unique(std::vector<Vector>& vs) {
  std::sort(vs.begin(), vs.end(), [](const Vector& a, const Vector& b) { return compare_lex(a, b) < 0; });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace

std::size_t dd_ray_limit() {
  const char* raw = std::getenv("CONETENSOR_MAX_DD_ROWS");
  constexpr std::size_t kDefault = 4096;
  if (raw == nullptr || *raw == '\0') return kDefault;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return kDefault;
  return value;
}

GeneratorSet enumerate_generators(std::size_t dim, const std::vector<Vector>& ineqs,
                                  const std::vector<Vector>& eqs) {
  for (const auto& a : ineqs)
    if (a.size() != dim) throw DimensionError("inequality length differs from ambient dimension");
  for (const auto& e : eqs)
    if (e.size() != dim) throw DimensionError("equation length differs from ambient dimension");

  GeneratorSet out;
  std::vector<Vector> all_rows = ineqs;
  all_rows.insert(all_rows.end(), eqs.begin(), eqs.end());
  out.lineality = all_rows.empty() ? Subspace::whole(dim) : Subspace::kernel(Matrix::from_rows(all_rows, dim));

  // Working space: solutions of the equations orthogonal to the lineality.
  std::vector<Vector> w_rows = eqs;
  w_rows.insert(w_rows.end(), out.lineality.basis().begin(), out.lineality.basis().end());
  const std::vector<Vector> w =
      w_rows.empty() ? Subspace::whole(dim).basis() : kernel_basis(Matrix::from_rows(w_rows, dim));
  const std::size_t k = w.size();
  if (k == 0) return out;

  std::vector<Vector> rows;
  for (const auto& a : ineqs) {
    Vector r(k);
    for (std::size_t j = 0; j < k; ++j) r[j] = dot(a, w[j]);
    if (!is_zero(r)) rows.push_back(primitive(r));
  }
  sort_unique(rows);
  const std::size_t m = rows.size();

  // Seed with a simplicial cone on k independent rows.
  std::vector<std::size_t> seed;
  std::vector<Vector> chosen;
  for (std::size_t i = 0; i < m && seed.size() < k; ++i) {
    chosen.push_back(rows[i]);
    if (rank(Matrix::from_rows(chosen, k)) == chosen.size()) {
      seed.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (seed.size() != k) throw std::logic_error("double description: reduced system is not pointed");

  Matrix aug(k, 2 * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug(r, c) = rows[seed[r]][c];
    aug(r, k + r) = 1;
  }
  RowEchelon inv = rref(aug);
  std::vector<WorkRay> rays;
  for (std::size_t j = 0; j < k; ++j) {
    WorkRay ray;
    ray.coords.resize(k);
    for (std::size_t r = 0; r < k; ++r) ray.coords[r] = inv.reduced(r, k + j);
    ray.coords = primitive(ray.coords);
    ray.zeros.resize(m);
    for (std::size_t s = 0; s < k; ++s)
      if (s != j) ray.zeros.set(seed[s]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> in_seed(m, false);
  for (auto s : seed) in_seed[s] = true;
  const std::size_t limit = dd_ray_limit();

  for (std::size_t i = 0; i < m; ++i) {
    if (in_seed[i]) continue;
    const Vector& a = rows[i];
    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(a, rays[r].coords);
      int s = sgn(value[r]);
      if (s > 0) pos.push_back(r);
      if (s < 0) neg.push_back(r);
      if (s == 0) rays[r].zeros.set(i);
    }
    if (neg.empty()) continue;

    std::vector<WorkRay> created;
    for (auto p : pos) {
      for (auto n : neg) {
        ZeroSet common = rays[p].zeros & rays[n].zeros;
        if (k >= 2 && common.count() < k - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        WorkRay fresh;
        fresh.coords = primitive(subtract(scale(rays[n].coords, value[p]), scale(rays[p].coords, value[n])));
        fresh.zeros = std::move(common);
        fresh.zeros.set(i);
        created.push_back(std::move(fresh));
      }
    }

    std::vector<WorkRay> next;
    next.reserve(rays.size() - neg.size() + created.size());
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (sgn(value[r]) >= 0) next.push_back(std::move(rays[r]));
    for (auto& c : created) next.push_back(std::move(c));
    rays = std::move(next);
    if (rays.size() > limit) throw DdLimitExceeded(limit, rays.size());
  }

  for (const auto& ray : rays) {
    Vector x = zero_vector(dim);
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(ray.coords[j]) == 0) continue;
      for (std::size_t t = 0; t < dim; ++t) x[t] += ray.coords[j] * w[j][t];
    }
    out.rays.push_back(primitive(x));
  }
  sort_unique(out.rays);
  return out;
}

}  // namespace conetensor

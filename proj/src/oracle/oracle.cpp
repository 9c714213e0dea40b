#include "oracle/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

#include <boost/dynamic_bitset.hpp>

namespace conetensor::oracle {

namespace {

using History = boost::dynamic_bitset<>;

struct Row {
  Vector coeffs;  // nvars + 1, last is the constant
  History history;
};

bool only_constant(const Vector& row, const std::vector<bool>& live) {
  for (std::size_t c = 0; c + 1 < row.size(); ++c)
    if (live[c] && sgn(row[c]) != 0) return false;
  return true;
}

void insert_dedup(std::map<Vector, History>& pool, Vector coeffs, History history) {
  auto [it, fresh] = pool.try_emplace(std::move(coeffs), history);
  if (!fresh && history.count() < it->second.count()) it->second = std::move(history);
}

Vector drop_columns(const Vector& row, const std::vector<bool>& eliminate) {
  Vector out;
  for (std::size_t c = 0; c + 1 < row.size(); ++c)
    if (!eliminate[c]) out.push_back(row[c]);
  out.push_back(row.back());
  return out;
}

}  // namespace

FmProjection fm_project(const FmSystem& system, const std::vector<bool>& eliminate) {
  const std::size_t n = system.nvars;
  if (eliminate.size() != n) throw DimensionError("fm_project: elimination mask has the wrong length");
  for (const auto& r : system.eqs)
    if (r.size() != n + 1) throw DimensionError("fm_project: equation row has the wrong length");
  for (const auto& r : system.ineqs)
    if (r.size() != n + 1) throw DimensionError("fm_project: inequality row has the wrong length");

  FmProjection out;
  std::vector<Vector> eqs = system.eqs;
  std::vector<Vector> ineqs = system.ineqs;
  std::vector<bool> used(eqs.size(), false);

  // Substitute every equation that can be solved for an eliminated variable.
  for (std::size_t c = 0; c < n; ++c) {
    if (!eliminate[c]) continue;
    std::size_t pivot = eqs.size();
    for (std::size_t r = 0; r < eqs.size(); ++r) {
      if (!used[r] && sgn(eqs[r][c]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == eqs.size()) continue;
    used[pivot] = true;
    eqs[pivot] = scale(eqs[pivot], 1 / eqs[pivot][c]);
    const Vector& p = eqs[pivot];
    auto reduce = [&](Vector& row) {
      if (sgn(row[c]) == 0) return;
      Rational f = row[c];
      for (std::size_t k = 0; k <= n; ++k)
        if (sgn(p[k]) != 0) row[k] -= f * p[k];
    };
    for (std::size_t r = 0; r < eqs.size(); ++r)
      if (r != pivot) reduce(eqs[r]);
    for (auto& row : ineqs) reduce(row);
  }

  std::vector<bool> live(n, true);
  for (std::size_t r = 0; r < eqs.size(); ++r) {
    if (used[r]) continue;
    Vector row = primitive(eqs[r]);
    if (only_constant(row, live)) {
      if (sgn(row.back()) != 0) {
        out.infeasible = true;
        return out;
      }
      continue;
    }
    out.eqs.push_back(drop_columns(row, eliminate));
  }

  std::map<Vector, History> pool;
  for (std::size_t r = 0; r < ineqs.size(); ++r) {
    History h(ineqs.size());
    h.set(r);
    insert_dedup(pool, primitive(ineqs[r]), std::move(h));
  }

  std::size_t steps = 0;
  while (true) {
    // Pick the eliminated variable with the fewest new combinations.
    std::size_t best = n;
    std::size_t best_cost = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!eliminate[c] || !live[c]) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& [coeffs, h] : pool) {
        int s = sgn(coeffs[c]);
        pos += s > 0;
        neg += s < 0;
      }
      if (pos + neg == 0) {
        live[c] = false;
        continue;
      }
      std::size_t cost = pos * neg;
      if (best == n || cost < best_cost) {
        best = c;
        best_cost = cost;
      }
    }
    if (best == n) break;
    const std::size_t v = best;
    live[v] = false;
    ++steps;

    std::vector<const std::pair<const Vector, History>*> pos, neg;
    std::map<Vector, History> next;
    for (const auto& entry : pool) {
      int s = sgn(entry.first[v]);
      if (s > 0) pos.push_back(&entry);
      if (s < 0) neg.push_back(&entry);
      if (s == 0) insert_dedup(next, entry.first, entry.second);
    }
    for (const auto* p : pos) {
      for (const auto* q : neg) {
        History h = p->second | q->second;
        if (h.count() > steps + 1) continue;  // Chernikov: provably redundant
        const Rational a = -q->first[v];
        const Rational b = p->first[v];
        Vector combo(n + 1);
        for (std::size_t k = 0; k <= n; ++k) combo[k] = a * p->first[k] + b * q->first[k];
        insert_dedup(next, primitive(combo), std::move(h));
      }
    }
    pool.clear();
    for (auto& [coeffs, h] : next) {
      if (only_constant(coeffs, live)) {
        if (sgn(coeffs.back()) < 0) {
          out.infeasible = true;
          return out;
        }
        continue;
      }
      pool.emplace(coeffs, std::move(h));
    }
  }

  for (const auto& [coeffs, h] : pool) {
    if (only_constant(coeffs, live)) {
      if (sgn(coeffs.back()) < 0) {
        out.infeasible = true;
        return out;
      }
      continue;
    }
    out.ineqs.push_back(drop_columns(coeffs, eliminate));
  }
  return out;
}

LpResult fm_maximize(const FmSystem& system, std::size_t objective) {
  if (objective >= system.nvars) throw DimensionError("fm_maximize: objective index out of range");
  std::vector<bool> eliminate(system.nvars, true);
  eliminate[objective] = false;
  const FmProjection proj = fm_project(system, eliminate);
  LpResult res;
  if (proj.infeasible) return res;

  std::optional<Rational> lower, upper, fixed;
  for (const auto& row : proj.eqs) {
    if (sgn(row[0]) == 0) continue;
    Rational z = -row[1] / row[0];
    if (fixed && *fixed != z) return res;
    fixed = z;
  }
  for (const auto& row : proj.ineqs) {
    const int s = sgn(row[0]);
    if (s == 0) continue;
    Rational bound = -row[1] / row[0];
    if (s > 0 && (!lower || bound > *lower)) lower = bound;
    if (s < 0 && (!upper || bound < *upper)) upper = bound;
  }
  if (fixed) {
    if ((lower && *fixed < *lower) || (upper && *fixed > *upper)) return res;
    res.status = LpStatus::optimal;
    res.value = *fixed;
    return res;
  }
  if (lower && upper && *lower > *upper) return res;
  if (!upper) {
    res.status = LpStatus::unbounded;
    return res;
  }
  res.status = LpStatus::optimal;
  res.value = *upper;
  return res;
}

bool membership_fm(std::size_t dim, const std::vector<Vector>& generators, const Vector& x) {
  if (x.size() != dim) throw DimensionError("membership_fm: point length differs from dimension");
  const std::size_t k = generators.size();
  FmSystem sys;
  sys.nvars = k;
  for (std::size_t t = 0; t < dim; ++t) {
    Vector row(k + 1);
    for (std::size_t i = 0; i < k; ++i) row[i] = generators[i].at(t);
    row[k] = -x[t];
    sys.eqs.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < k; ++i) {
    Vector row(k + 1);
    row[i] = 1;
    sys.ineqs.push_back(std::move(row));
  }
  return !fm_project(sys, std::vector<bool>(k, true)).infeasible;
}

FmCone::FmCone(std::size_t dim, std::vector<Vector> generators) : dim_(dim), generators_(std::move(generators)) {
  const std::size_t k = generators_.size();
  for (const auto& g : generators_)
    if (g.size() != dim) throw DimensionError("FmCone: generator length differs from dimension");
  // Variables: weights λ_0..λ_{k-1}, then the point x_0..x_{d-1}.
  FmSystem sys;
  sys.nvars = k + dim;
  for (std::size_t t = 0; t < dim; ++t) {
    Vector row(k + dim + 1);
    for (std::size_t i = 0; i < k; ++i) row[i] = generators_[i][t];
    row[k + t] = -1;
    sys.eqs.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < k; ++i) {
    Vector row(k + dim + 1);
    row[i] = 1;
    sys.ineqs.push_back(std::move(row));
  }
  std::vector<bool> eliminate(k + dim, false);
  for (std::size_t i = 0; i < k; ++i) eliminate[i] = true;
  const FmProjection proj = fm_project(sys, eliminate);
  for (auto row : proj.eqs) {
    row.pop_back();
    eqs_.push_back(std::move(row));
  }
  for (auto row : proj.ineqs) {
    row.pop_back();
    ineqs_.push_back(std::move(row));
  }
}

bool FmCone::contains(const Vector& x) const {
  if (x.size() != dim_) throw DimensionError("FmCone: point length differs from dimension");
  for (const auto& e : eqs_)
    if (sgn(dot(e, x)) != 0) return false;
  for (const auto& a : ineqs_)
    if (sgn(dot(a, x)) < 0) return false;
  return true;
}

std::optional<Rational> FmCone::max_step(const Vector& y, const Vector& g) const {
  for (const auto& e : eqs_)
    if (sgn(dot(e, g)) != 0) return Rational(0);
  std::optional<Rational> best;
  for (const auto& a : ineqs_) {
    Rational ag = dot(a, g);
    if (sgn(ag) <= 0) continue;
    Rational bound = dot(a, y) / ag;
    if (!best || bound < *best) best = bound;
  }
  return best;
}

bool extremality_definitional(const FmCone& c, const Vector& x) {
  if (is_zero(x)) throw PreconditionError("extremality: zero vector");
  if (!c.contains(x)) throw PreconditionError("extremality: vector is not in the cone");
  for (const auto& g : c.generators()) {
    if (positively_parallel(g, x)) continue;
    auto step = c.max_step(x, g);
    if (!step || sgn(*step) > 0) return false;
  }
  return true;
}

FaceEvidence face_definitional(const FmCone& c, const FmCone& candidate, std::size_t samples, std::uint32_t seed) {
  if (c.dim() != candidate.dim()) throw DimensionError("face_definitional: dimensions differ");
  for (const auto& g : candidate.generators())
    if (!c.contains(g)) throw PreconditionError("face_definitional: candidate is not contained in the cone");

  const auto& gens = c.generators();
  std::vector<bool> inside(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) inside[i] = candidate.contains(gens[i]);

  const Rational grid[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (inside[i] && inside[j]) continue;
      for (const auto& t : grid) {
        Vector p = add(scale(gens[i], t), scale(gens[j], 1 - t));
        if (candidate.contains(p)) {
          return {false, "segment " + to_string(gens[i]) + " -- " + to_string(gens[j]) + " at t=" + to_string(t) +
                             " meets the candidate"};
        }
      }
    }
  }

  Vector y = zero_vector(c.dim());
  for (const auto& g : candidate.generators()) y = add(y, g);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (inside[i]) continue;
    auto step = c.max_step(y, gens[i]);
    if (!step || sgn(*step) > 0) {
      return {false, "interior point " + to_string(y) + " minus a multiple of " + to_string(gens[i]) +
                         " stays in the cone"};
    }
  }

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> weight(0, 3);
  std::uniform_int_distribution<std::size_t> pick(0, 2);
  for (std::size_t s = 0; s < samples && !gens.empty(); ++s) {
    Vector a = zero_vector(c.dim()), b = zero_vector(c.dim());
    for (const auto& g : gens) {
      a = add(a, scale(g, weight(rng)));
      b = add(b, scale(g, weight(rng)));
    }
    const Rational& t = grid[pick(rng)];
    Vector p = add(scale(a, t), scale(b, 1 - t));
    if (candidate.contains(p) && !(candidate.contains(a) && candidate.contains(b))) {
      return {false, "sampled segment " + to_string(a) + " -- " + to_string(b) + " meets the candidate"};
    }
  }
  return {};
}

FaceEvidence face_definitional(const Cone& c, const Cone& candidate, std::size_t samples) {
  return face_definitional(FmCone(c), FmCone(candidate), samples);
}

}  // namespace conetensor::oracle

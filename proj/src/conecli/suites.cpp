#include "conecli/suites.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "bodies/bodies.hpp"
#include "conecli/corpus.hpp"
#include "facelab/facelab.hpp"
#include "oracle/oracle.hpp"
#include "tensorcone/tensorcone.hpp"

namespace conetensor::suites {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Check make_check(std::string id, bool passed, std::string detail, Json data = Json::object()) {
  return Check{std::move(id), passed, std::move(detail), std::move(data)};
}

std::optional<Vector> generator_outside(const Cone& a, const Cone& b) {
  for (const auto& g : a.generators())
    if (!b.contains(g)) return g;
  return std::nullopt;
}

Check cone_equality(std::string id, const Cone& a, const Cone& b, std::string detail) {
  Check c = make_check(std::move(id), a == b, std::move(detail));
  if (!c.passed) {
    auto w = generator_outside(a, b);
    if (!w) w = generator_outside(b, a);
    if (w) c.data["witness"] = emit_vector(*w);
  }
  return c;
}

Check subspace_equality(std::string id, const Subspace& a, const Subspace& b, std::string detail) {
  Check c = make_check(std::move(id), a == b, std::move(detail));
  c.data["dim"] = a.dim();
  if (!c.passed) {
    for (const auto& v : a.basis())
      if (!b.contains(v)) c.data["witness"] = emit_vector(v);
    for (const auto& v : b.basis())
      if (!a.contains(v)) c.data["witness"] = emit_vector(v);
  }
  return c;
}

void sort_vectors(std::vector<Vector>& vs) {
  std::sort(vs.begin(), vs.end(), [](const Vector& a, const Vector& b) { return compare_lex(a, b) < 0; });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

std::vector<Vector> tensor_pairs(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::vector<Vector> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(primitive(vec_tensor(x, y)));
  sort_vectors(out);
  return out;
}

bool contains_vector(const std::vector<Vector>& vs, const Vector& v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

struct Pair {
  std::string left;
  std::string right;
  const Cone* e;
  const Cone* f;

  std::string name() const { return left + "x" + right; }
};

std::vector<Pair> grid_pairs() {
  std::vector<Pair> out;
  for (const auto& a : corpus::grid())
    for (const auto& b : corpus::grid()) out.push_back({a.name, b.name, &a.cone, &b.cone});
  return out;
}

std::vector<Pair> all_pairs() {
  std::vector<Pair> out = grid_pairs();
  for (const auto& [l, r] : corpus::extra_pairs()) out.push_back({l, r, &corpus::cone(l), &corpus::cone(r)});
  return out;
}

Cone orthant(std::size_t n) {
  std::vector<Vector> rays;
  for (std::size_t i = 0; i < n; ++i) rays.push_back(unit_vector(n, i));
  return Cone::from_generators(n, rays);
}

/// Columns are the generators, so the standard rays map onto cone(generators).
Matrix generator_map(const std::vector<Vector>& gens, std::size_t dim) {
  return Matrix::from_rows(gens, dim).transpose();
}

/// Rows are the facet functionals: a bipositive embedding into an orthant.
Matrix facet_embedding(const Cone& c) { return Matrix::from_rows(c.ineqs(), c.dim()); }

std::vector<Cone> faces_as_cones(const Cone& c) {
  std::vector<Cone> out;
  for (const auto& f : face_lattice(c)) out.push_back(f.cone());
  return out;
}

std::string index_list(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << '}';
  return os.str();
}

Vector random_vector(std::mt19937& rng, std::size_t dim, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Vector v(dim);
  for (auto& q : v) q = d(rng);
  return v;
}

Vector random_nonzero(std::mt19937& rng, std::size_t dim, int lo, int hi) {
  Vector v;
  do {
    v = random_vector(rng, dim, lo, hi);
  } while (is_zero(v));
  return v;
}

// ---------------------------------------------------------------- thmA

SuiteReport suite_thmA() {
  std::vector<Task> tasks;
  for (const auto& p : grid_pairs()) {
    tasks.push_back([p] {
      const Cone m = projective_cone(*p.e, *p.f);
      const bool expected = p.e->is_zero() || p.f->is_zero() || (p.e->is_proper() && p.f->is_proper());
      Check c = make_check("min_proper/" + p.name(), m.is_proper() == expected,
                           std::string("proper=") + yes_no(m.is_proper()) + " predicted=" + yes_no(expected));
      c.data["proper"] = m.is_proper();
      c.data["predicted"] = expected;
      if (!c.passed && !m.lineality().is_zero()) c.data["witness"] = emit_vector(m.lineality().basis().front());
      return std::vector<Check>{c};
    });
  }

  tasks.push_back([] {
    const Cone& q = corpus::cone("Q");
    const Cone& qs = corpus::cone("Qstar");
    const Cone& s2 = corpus::cone("std2");
    const Cone s4 = orthant(4);
    struct Instance {
      std::string name;
      Matrix t, s;
      const Cone *e, *g, *f, *h;
    };
    const Matrix shear = Matrix::from_rows({{1, 2}, {0, 1}});
    const Matrix swap_xy = Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    const Matrix t4 = generator_map(q.rays(), 3);
    const std::vector<Instance> instances = {
        {"shear_x_swap", shear, swap_xy, &s2, &s2, &q, &q},
        {"rays_onto_Q_x_id", t4, Matrix::identity(3), &s4, &q, &qs, &qs},
        {"facet_embedding_x_shear", facet_embedding(q), shear, &q, &s4, &s2, &s2},
    };
    std::vector<Check> out;
    for (const auto& in : instances) {
      const bool pre = positive_map_check(in.t, *in.e, *in.g) && positive_map_check(in.s, *in.f, *in.h);
      const bool post =
          positive_map_check(kron_map(in.t, in.s), projective_cone(*in.e, *in.f), projective_cone(*in.g, *in.h));
      out.push_back(make_check("positive_map/" + in.name, pre && post,
                               std::string("factors positive=") + yes_no(pre) + ", tensor map positive=" + yes_no(post)));
    }

    const bool push_pre = pushforward_check(t4, s4, q);
    const bool push_post = pushforward_check(kron_map(t4, Matrix::identity(3)), projective_cone(s4, qs),
                                             projective_cone(q, qs));
    out.push_back(make_check("pushforward/rays_onto_Q_x_id", push_pre && push_post,
                             std::string("factor pushforward=") + yes_no(push_pre) +
                                 ", tensor pushforward=" + yes_no(push_post)));
    const Matrix first = Matrix::from_rows({{1, 0}});
    const bool push2 = pushforward_check(first, s2, corpus::cone("std1")) &&
                       pushforward_check(kron_map(first, t4), projective_cone(s2, s4),
                                         projective_cone(corpus::cone("std1"), q));
    out.push_back(make_check("pushforward/projection_x_rays_onto_Q", push2, std::string("holds=") + yes_no(push2)));

    // The facet embedding of Q is bipositive, yet its tensor with the
    // identity pulls min(R^4_+, Q*) back to max(Q, Q*).
    const Matrix emb = facet_embedding(q);
    const Matrix big = kron_map(emb, Matrix::identity(3));
    const Cone pulled = preimage_cone(big, projective_cone(s4, qs));
    const Cone mn = projective_cone(q, qs);
    const Cone mx = injective_cone(q, qs);
    const bool factor_bip = bipositive_check(emb, q, s4);
    Check fail = make_check("bipositivity_failure/facet_embedding_x_id", factor_bip && pulled == mx && !(pulled == mn),
                            std::string("factor bipositive=") + yes_no(factor_bip) + ", preimage equals max=" +
                                yes_no(pulled == mx) + ", preimage equals min=" + yes_no(pulled == mn));
    if (auto w = generator_outside(pulled, mn)) fail.data["witness"] = emit_vector(*w);
    out.push_back(fail);
    return out;
  });
  return {"thmA", run_tasks(tasks, "thmA")};
}

// ---------------------------------------------------------------- thmB

SuiteReport suite_thmB() {
  std::vector<Task> tasks;
  for (const auto& p : grid_pairs()) {
    tasks.push_back([p] {
      const Cone mx = injective_cone(*p.e, *p.f);
      const Cone mn = projective_cone(*p.e, *p.f);
      const bool expected = p.e->dim() == 0 || p.f->dim() == 0 || (p.e->is_proper() && p.f->is_proper());
      Check c = make_check("max_proper/" + p.name(), mx.is_proper() == expected,
                           std::string("proper=") + yes_no(mx.is_proper()) + " predicted=" + yes_no(expected));
      c.data["proper"] = mx.is_proper();
      c.data["predicted"] = expected;
      if (!c.passed && !mx.lineality().is_zero()) c.data["witness"] = emit_vector(mx.lineality().basis().front());
      std::vector<Check> out{c};
      out.push_back(cone_equality("duality/" + p.name(), mx, projective_cone(p.e->dual(), p.f->dual()).dual(),
                                  "max(E,F) = dual(min(E',F'))"));
      Check sandwich = make_check("sandwich/" + p.name(), subset(mn, mx), "min(E,F) ⊆ max(E,F)");
      if (auto w = generator_outside(mn, mx)) sandwich.data["witness"] = emit_vector(*w);
      out.push_back(sandwich);
      return out;
    });
  }

  tasks.push_back([] {
    const Cone& q = corpus::cone("Q");
    const Cone& qs = corpus::cone("Qstar");
    const Cone s4 = orthant(4);
    std::vector<Check> out;

    const Matrix t4 = generator_map(q.rays(), 3);
    const Cone image = image_cone(kron_map(t4, Matrix::identity(3)), injective_cone(s4, qs));
    const Cone mn = projective_cone(q, qs);
    const Cone mx = injective_cone(q, qs);
    Check push = make_check("pushforward_failure/rays_onto_Q_x_id", image == mn && !(mn == mx),
                            std::string("image equals min(Q,Q*)=") + yes_no(image == mn) +
                                ", min(Q,Q*) strictly inside max=" + yes_no(subset(mn, mx) && !(mn == mx)));
    if (auto w = generator_outside(mx, image)) push.data["witness"] = emit_vector(*w);
    out.push_back(push);

    struct Instance {
      std::string name;
      const Cone* e;
      const Cone* f;
    };
    const std::vector<Instance> instances = {
        {"Q_x_Qstar", &q, &qs}, {"pent5_x_std2", &corpus::cone("pent5"), &corpus::cone("std2")}};
    for (const auto& in : instances) {
      const Matrix t = facet_embedding(*in.e);
      const Matrix s = facet_embedding(*in.f);
      const Cone gt = orthant(t.rows());
      const Cone gs = orthant(s.rows());
      const bool pre = bipositive_check(t, *in.e, gt) && bipositive_check(s, *in.f, gs);
      const Cone pulled = preimage_cone(kron_map(t, s), injective_cone(gt, gs));
      Check c = cone_equality("bipositive_preserved/" + in.name, pulled, injective_cone(*in.e, *in.f),
                              std::string("factors bipositive=") + yes_no(pre));
      c.passed = c.passed && pre;
      out.push_back(c);
    }
    return out;
  });
  return {"thmB", run_tasks(tasks, "thmB")};
}

// ---------------------------------------------------------------- thmC

SuiteReport suite_thmC() {
  std::vector<Task> tasks;
  for (const auto& p : all_pairs()) {
    tasks.push_back([p] {
      const Cone mn = projective_cone(*p.e, *p.f);
      const Cone mx = injective_cone(*p.e, *p.f);
      return std::vector<Check>{
          subspace_equality("projective_lineality/" + p.name(), projective_lineality(*p.e, *p.f), mn.lineality(),
                            "formula vs lineality of min, dim " + std::to_string(mn.lineality().dim())),
          subspace_equality("injective_lineality/" + p.name(), injective_lineality(*p.e, *p.f), mx.lineality(),
                            "formula vs lineality of max, dim " + std::to_string(mx.lineality().dim())),
      };
    });
  }
  return {"thmC", run_tasks(tasks, "thmC")};
}

// ---------------------------------------------------------------- thmF_rays

SuiteReport suite_thmF() {
  std::vector<Task> tasks;
  for (const auto& p : all_pairs()) {
    tasks.push_back([p] {
      const std::vector<Vector> expected = tensor_pairs(extremal_rays(*p.e), extremal_rays(*p.f));
      const std::vector<Vector> got = extremal_rays(projective_cone(*p.e, *p.f));
      Check c = make_check("projective_rays/" + p.name(), got == expected,
                           std::to_string(got.size()) + " extremal rays, " + std::to_string(extremal_rays(*p.e).size()) +
                               " x " + std::to_string(extremal_rays(*p.f).size()) + " tensor pairs");
      c.data["count"] = got.size();
      for (const auto& v : expected)
        if (!contains_vector(got, v)) c.data["witness"] = emit_vector(v);
      for (const auto& v : got)
        if (!contains_vector(expected, v)) c.data["witness"] = emit_vector(v);

      const std::vector<Vector> max_rays = extremal_rays(injective_cone(*p.e, *p.f));
      std::size_t missing = 0;
      Check inj = make_check("injective_contains_pairs/" + p.name(), true, "");
      for (const auto& v : expected) {
        if (!contains_vector(max_rays, v)) {
          ++missing;
          inj.data["witness"] = emit_vector(v);
        }
      }
      inj.passed = missing == 0;
      inj.detail = std::to_string(expected.size()) + " tensor pairs, " + std::to_string(max_rays.size()) +
                   " extremal rays of max";
      return std::vector<Check>{c, inj};
    });
  }

  tasks.push_back([] {
    const Cone& q = corpus::cone("Q");
    const Cone& qs = corpus::cone("Qstar");
    const Cone mn = projective_cone(q, qs);
    const Cone mx = injective_cone(q, qs);
    std::vector<Check> out;
    out.push_back(make_check("projective_ray_count/QxQstar", extremal_rays(mn).size() == 16,
                             std::to_string(extremal_rays(mn).size()) + " = 4 x 4 extremal rays",
                             Json{{"count", extremal_rays(mn).size()}}));

    const bool inside = subset(mn, mx);
    const bool equal = mn == mx;
    auto w = generator_outside(mx, mn);
    Check strict = make_check("strict_inclusion/QxQstar", inside && !equal && w.has_value(),
                              std::string("min ⊆ max=") + yes_no(inside) + ", min = max=" + yes_no(equal));
    if (w) {
      strict.data["witness"] = emit_vector(*w);
      strict.data["witness_rank"] = tensor_rank(*w, 3, 3);
      strict.data["witness_in_max"] = mx.contains(*w);
      strict.data["witness_in_min"] = mn.contains(*w);
    }
    out.push_back(strict);

    const Cone& s3 = corpus::cone("std3");
    out.push_back(cone_equality("simplex_collapse/std3xQstar", projective_cone(s3, qs), injective_cone(s3, qs),
                                "min(R^3_+, Q*) = max(R^3_+, Q*)"));

    const bool r_min = is_reasonable(mn, q, qs);
    const bool r_max = is_reasonable(mx, q, qs);
    const bool r_orth = is_reasonable(orthant(9), q, qs);
    out.push_back(make_check("reasonable/QxQstar", r_min && r_max && !r_orth,
                             std::string("min=") + yes_no(r_min) + ", max=" + yes_no(r_max) +
                                 ", R^9_+=" + yes_no(r_orth)));
    return out;
  });
  return {"thmF_rays", run_tasks(tasks, "thmF_rays")};
}

// ---------------------------------------------------------------- rank1

SuiteReport suite_rank1() {
  std::vector<Task> tasks;
  tasks.push_back([] {
    const Cone& q = corpus::cone("Q");
    const Cone& qs = corpus::cone("Qstar");
    const std::vector<Vector> pairs = tensor_pairs(q.rays(), qs.rays());
    std::size_t rank_one = 0, higher = 0, stray = 0;
    Check c = make_check("max_rank_split/QxQstar", false, "");
    for (const auto& r : extremal_rays(injective_cone(q, qs))) {
      if (tensor_rank(r, 3, 3) == 1) {
        ++rank_one;
        if (!contains_vector(pairs, r)) {
          ++stray;
          c.data["witness"] = emit_vector(r);
        }
      } else {
        ++higher;
        if (!c.data.contains("higher_rank_example")) c.data["higher_rank_example"] = emit_vector(r);
      }
    }
    c.passed = stray == 0 && rank_one == pairs.size() && higher >= 1;
    c.detail = std::to_string(rank_one) + " rank-one rays (all tensor pairs), " + std::to_string(higher) +
               " rays of rank >= 2";
    c.data["rank_one"] = rank_one;
    c.data["higher_rank"] = higher;
    return std::vector<Check>{c};
  });

  for (const auto& p : all_pairs()) {
    tasks.push_back([p] {
      const std::size_t m = p.e->dim(), n = p.f->dim();
      std::vector<Vector> rank_one;
      for (const auto& r : extremal_rays(injective_cone(*p.e, *p.f)))
        if (tensor_rank(r, m, n) == 1) rank_one.push_back(r);
      const std::vector<Vector> expected = tensor_pairs(extremal_rays(*p.e), extremal_rays(*p.f));
      Check c = make_check("rank_one_extremal/" + p.name(), rank_one == expected,
                           std::to_string(rank_one.size()) + " rank-one extremal rays of max");
      for (const auto& v : rank_one)
        if (!contains_vector(expected, v)) c.data["witness"] = emit_vector(v);
      return std::vector<Check>{c};
    });
  }

  for (const auto& p : grid_pairs()) {
    if (p.e->dim() == 0 || p.f->dim() == 0) continue;
    tasks.push_back([p] {
      std::mt19937 rng(0x5eed + static_cast<unsigned>(p.e->dim() * 31 + p.f->dim()));
      auto samples = [&](const Cone& c) {
        std::vector<Vector> xs;
        for (const auto& g : c.generators()) {
          xs.push_back(g);
          xs.push_back(negate(g));
        }
        for (int i = 0; i < 4; ++i) xs.push_back(random_nonzero(rng, c.dim(), -2, 2));
        sort_vectors(xs);
        return xs;
      };
      const auto xs = samples(*p.e);
      const auto ys = samples(*p.f);
      const Cone mn = projective_cone(*p.e, *p.f);
      const Cone mx = injective_cone(*p.e, *p.f);
      std::vector<Check> out;
      for (auto kind : {TensorKind::projective, TensorKind::injective}) {
        const Cone& k = kind == TensorKind::projective ? mn : mx;
        std::size_t agree = 0, total = 0;
        Check c = make_check(std::string(kind == TensorKind::projective ? "classify_min/" : "classify_max/") + p.name(),
                             true, "");
        for (const auto& x : xs) {
          for (const auto& y : ys) {
            ++total;
            const bool verdict = rank_one_classify(x, y, *p.e, *p.f, kind).member;
            if (verdict == k.contains(vec_tensor(x, y))) {
              ++agree;
            } else if (!c.data.contains("witness")) {
              c.data["witness"] = Json{{"x", emit_vector(x)}, {"y", emit_vector(y)}};
            }
          }
        }
        c.passed = agree == total;
        c.detail = std::to_string(agree) + "/" + std::to_string(total) + " rank-one verdicts agree with membership";
        out.push_back(c);
      }
      return out;
    });
  }

  tasks.push_back([] {
    const Cone& q = corpus::cone("Q");
    const Cone& qs = corpus::cone("Qstar");
    const Cone& hp = corpus::cone("halfplane");
    const Cone& s1 = corpus::cone("std1");
    std::vector<Check> out;
    const Vector x = make_vector({1, 1, 1}), y = make_vector({1, 0, 1});
    for (auto kind : {TensorKind::projective, TensorKind::injective}) {
      const std::string k = kind == TensorKind::projective ? "min" : "max";
      auto pos = rank_one_classify(x, y, q, qs, kind);
      auto neg = rank_one_classify(negate(x), negate(y), q, qs, kind);
      out.push_back(make_check("clause_positive/" + k, pos.member && pos.clause == RankOneClause::positive_pair,
                               std::string("clause ") + clause_name(pos.clause)));
      out.push_back(make_check("clause_negated/" + k, neg.member && neg.clause == RankOneClause::negated_pair,
                               std::string("clause ") + clause_name(neg.clause)));
    }
    auto lin = rank_one_classify(make_vector({1, 0}), make_vector({3}), hp, s1, TensorKind::projective);
    const bool member = projective_cone(hp, s1).contains(vec_tensor(make_vector({1, 0}), make_vector({3})));
    out.push_back(make_check("clause_lineality/halfplane_x_std1",
                             lin.member && member && lin.clause == RankOneClause::left_lineality,
                             std::string("clause ") + clause_name(lin.clause)));
    return out;
  });
  return {"rank1", run_tasks(tasks, "rank1")};
}

// ---------------------------------------------------------------- thmD_faces

struct FacePairContext {
  std::string name;
  Cone e, f, mn, mx;
  std::shared_ptr<oracle::FmCone> fm_min, fm_max;
  std::vector<Cone> e_faces, f_faces;
};

std::shared_ptr<FacePairContext> face_context(const std::string& left, const std::string& right) {
  auto ctx = std::make_shared<FacePairContext>();
  ctx->name = left + "x" + right;
  ctx->e = corpus::cone(left);
  ctx->f = corpus::cone(right);
  ctx->mn = projective_cone(ctx->e, ctx->f);
  ctx->mx = injective_cone(ctx->e, ctx->f);
  ctx->fm_min = std::make_shared<oracle::FmCone>(ctx->mn);
  ctx->fm_max = std::make_shared<oracle::FmCone>(ctx->mx);
  ctx->e_faces = faces_as_cones(ctx->e);
  ctx->f_faces = faces_as_cones(ctx->f);
  return ctx;
}

Check face_agreement(const std::string& id, const Cone& parent, const oracle::FmCone& fm_parent, const Cone& candidate) {
  const bool main = is_face(parent, candidate);
  const oracle::FaceEvidence ev = oracle::face_definitional(fm_parent, oracle::FmCone(candidate), 8);
  Check c = make_check(id, main && ev.is_face,
                       std::string("main=") + yes_no(main) + " oracle=" + yes_no(ev.is_face) + ", " +
                           std::to_string(candidate.rays().size()) + " rays");
  c.data["main"] = main;
  c.data["oracle"] = ev.is_face;
  if (!ev.is_face) c.data["witness"] = ev.witness;
  return c;
}

SuiteReport suite_thmD() {
  std::vector<Task> tasks;
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"Q", "Qstar"}, {"std2", "std2"}, {"halfplane", "std2"}, {"std2", "halfplane"}};
  for (const auto& [l, r] : pairs) {
    auto ctx = face_context(l, r);
    for (std::size_t i = 0; i < ctx->e_faces.size(); ++i) {
      for (std::size_t j = 0; j < ctx->f_faces.size(); ++j) {
        tasks.push_back([ctx, i, j] {
          const Cone& e = ctx->e;
          const Cone& f = ctx->f;
          const Cone& m = ctx->e_faces[i];
          const Cone& n = ctx->f_faces[j];
          const std::string tag = ctx->name + "/" + std::to_string(i) + "," + std::to_string(j);
          std::vector<Check> out;
          out.push_back(face_agreement("orface/" + tag, ctx->mn, *ctx->fm_min, orface(e, f, m, n)));
          out.push_back(face_agreement("andface/" + tag, ctx->mn, *ctx->fm_min, andface(e, f, m, n)));
          const Cone scor = injective_orface_andface(e, f, m, n, InjectiveFaceKind::scor);
          const Cone scand = injective_orface_andface(e, f, m, n, InjectiveFaceKind::scand);
          out.push_back(face_agreement("scor/" + tag, ctx->mx, *ctx->fm_max, scor));
          out.push_back(face_agreement("scand/" + tag, ctx->mx, *ctx->fm_max, scand));

          const SublatticeReport s = face_sublattice_check(e, f, m, n);
          out.push_back(make_check("sublattice/" + tag, s.all(),
                                   std::string("join=") + yes_no(s.or_is_join) + " meet=" + yes_no(s.and_is_meet) +
                                       " left=" + yes_no(s.or_left_degenerate) +
                                       " right=" + yes_no(s.or_right_degenerate)));

          const Cone m_dia = diamond(e, m);
          const Cone n_dia = diamond(f, n);
          const Cone ed = e.dual(), fd = f.dual();
          out.push_back(cone_equality("scor_duality/" + tag, scor,
                                      predual_face(e, f, andface(ed, fd, m_dia, n_dia)),
                                      "scor(M,N) = predual of andface(M', N')"));
          out.push_back(cone_equality("scand_duality/" + tag, scand,
                                      predual_face(e, f, orface(ed, fd, m_dia, n_dia)),
                                      "scand(M,N) = predual of orface(M', N')"));
          return out;
        });
      }
    }
  }

  // Combined faces from pairs of distinct extremal rays.
  {
    const Cone& q = corpus::cone("Q");
    const Cone& qs = corpus::cone("Qstar");
    for (std::size_t a = 0; a < q.rays().size(); ++a) {
      for (std::size_t b = a + 1; b < q.rays().size(); ++b) {
        tasks.push_back([a, b, &q, &qs] {
          std::vector<Check> out;
          const Cone m1 = face_cone(q, {a}), m2 = face_cone(q, {b});
          for (std::size_t c = 0; c < qs.rays().size(); ++c) {
            for (std::size_t d = c + 1; d < qs.rays().size(); ++d) {
              const Cone n1 = face_cone(qs, {c}), n2 = face_cone(qs, {d});
              const CombinedFace cf = combined_face(q, qs, m1, n1, m2, n2);
              out.push_back(make_check("combined/QxQstar/" + index_list({a, b}) + index_list({c, d}),
                                       cf.is_face && cf.matches_or_intersection,
                                       std::string("face=") + yes_no(cf.is_face) +
                                           " equals orface intersection=" + yes_no(cf.matches_or_intersection)));
            }
          }
          return out;
        });
      }
    }
  }

  tasks.push_back([] {
    const Cone& s2 = corpus::cone("std2");
    const Cone& q = corpus::cone("Q");
    std::vector<Check> out;
    const Vector e1 = unit_vector(2, 0), e2 = unit_vector(2, 1);
    const Cone r1 = Cone::from_generators(2, {e1}), r2 = Cone::from_generators(2, {e2});
    const CombinedFace cf = combined_face(s2, s2, r1, r1, r2, r2);
    out.push_back(cone_equality("combined/std2xstd2/diagonal", cf.cone,
                                Cone::from_generators(4, {vec_tensor(e1, e1), vec_tensor(e2, e2)}),
                                "andface(e1,e1) + andface(e2,e2) = cone{e1⊗e1, e2⊗e2}"));
    bool raised = false;
    const Cone facet = face_cone(q, {0, 1});
    try {
      combined_face(q, q, facet, face_cone(q, {0}), facet, face_cone(q, {1}));
    } catch (const PreconditionError&) {
      raised = true;
    }
    out.push_back(make_check("combined/precondition", raised, std::string("M1 = M2 rejected=") + yes_no(raised)));

    const Cone msetn = injective_face_msetn(s2, s2, {e1}, r1);
    out.push_back(cone_equality(
        "msetn/std2xstd2", msetn,
        Cone::from_generators(4, {vec_tensor(e1, e1), vec_tensor(e2, e1), vec_tensor(e2, e2)}),
        "<{(1,0)} |> cone{e1}> = cone{e1⊗e1, e2⊗e1, e2⊗e2}"));
    const Cone zero_face = injective_face_msetn(s2, s2, s2.dual().rays(), subspace_cone(s2.lineality()));
    out.push_back(make_check("msetn/std2xstd2/minimal", zero_face.is_zero(), "all dual rays into the minimal face"));
    return out;
  });
  return {"thmD_faces", run_tasks(tasks, "thmD_faces")};
}

// ---------------------------------------------------------------- thmE_ideals

SuiteReport suite_thmE() {
  std::vector<Task> tasks;
  const Cone& q = corpus::cone("Q");
  const Cone& qs = corpus::cone("Qstar");
  auto ideals_of = [](const Cone& c) {
    std::vector<Subspace> out;
    for (const auto& f : faces_as_cones(c)) out.push_back(span_is_ideal(c, f).subspace);
    return out;
  };
  auto left = std::make_shared<std::vector<Subspace>>(ideals_of(q));
  auto right = std::make_shared<std::vector<Subspace>>(ideals_of(qs));
  auto mx = std::make_shared<Cone>(injective_cone(q, qs));
  for (std::size_t i = 0; i < left->size(); ++i) {
    tasks.push_back([i, left, right, mx, &q, &qs] {
      std::vector<Check> out;
      for (std::size_t j = 0; j < right->size(); ++j) {
        const std::string tag = "QxQstar/" + std::to_string(i) + "," + std::to_string(j);
        const Subspace& a = (*left)[i];
        const Subspace& b = (*right)[j];
        for (auto kind : {InjectiveIdealKind::tensor_plus_lineality, InjectiveIdealKind::sum_form}) {
          const IdealVerdict v = injective_ideal(q, qs, a, b, kind);
          const bool face = is_face(*mx, restrict_to_subspace(*mx, v.subspace));
          const std::string k = kind == InjectiveIdealKind::tensor_plus_lineality ? "tensor_plus_lineality/" : "sum_form/";
          Check c = make_check(k + tag, v.is_ideal && face,
                               std::string("quotient proper=") + yes_no(v.is_ideal) + " section is face=" + yes_no(face) +
                                   ", dim " + std::to_string(v.subspace.dim()));
          if (!v.is_ideal) {
            const Quotient quo = quotient_cone(*mx, v.subspace);
            if (!quo.cone.lineality().is_zero()) c.data["witness"] = emit_vector(quo.cone.lineality().basis().front());
          }
          out.push_back(c);
        }
        out.push_back(make_check("projective_inclusion/" + tag, ideal_inclusion_bipositive(q, qs, a, b),
                                 "min(E,F) ∩ (I⊗J) = min(E∩I, F∩J)"));
      }
      return out;
    });
  }

  tasks.push_back([] {
    const Cone& hp = corpus::cone("halfplane");
    const Cone& s2 = corpus::cone("std2");
    std::vector<Check> out;
    const IdealVerdict v =
        injective_ideal(hp, s2, hp.lineality(), Subspace(2), InjectiveIdealKind::tensor_plus_lineality);
    out.push_back(subspace_equality("lineality_ideal/halfplane_x_std2", v.subspace, injective_lineality(hp, s2),
                                    "lin ⊗ {0} + lineality = lineality of max"));
    const Cone& q = corpus::cone("Q");
    const IdealVerdict w = injective_ideal(q, q, Subspace::whole(3), Subspace::whole(3), InjectiveIdealKind::sum_form);
    out.push_back(make_check("whole_space/QxQ", w.subspace.is_whole() && w.is_ideal,
                             std::string("whole=") + yes_no(w.subspace.is_whole()) + " ideal=" + yes_no(w.is_ideal)));
    return out;
  });
  return {"thmE_ideals", run_tasks(tasks, "thmE_ideals")};
}

// ---------------------------------------------------------------- appendix

SuiteReport suite_appendix() {
  std::vector<Task> tasks;

  // Random candidate subcones: ray subsets are faces or not; random
  // combinations are mostly not.
  tasks.push_back([] {
    std::vector<Check> out;
    std::vector<const Cone*> parents;
    static const std::vector<Cone> tensor_parents = {
        projective_cone(corpus::cone("std2"), corpus::cone("std2")),
        projective_cone(corpus::cone("Q"), corpus::cone("std1")),
        projective_cone(corpus::cone("halfplane"), corpus::cone("std1")),
    };
    for (const char* n : {"Q", "Qstar", "pent5", "std3", "halfplane", "std2"}) parents.push_back(&corpus::cone(n));
    for (const auto& t : tensor_parents) parents.push_back(&t);
    std::vector<oracle::FmCone> fms;
    for (const auto* p : parents) fms.emplace_back(*p);

    std::mt19937 rng(9001);
    std::size_t agree = 0, faces = 0;
    const std::size_t total = 200;
    Check c = make_check("face_vs_full_subcone/random", false, "");
    for (std::size_t s = 0; s < total; ++s) {
      const std::size_t pi = s % parents.size();
      const Cone& parent = *parents[pi];
      Cone candidate;
      const auto& rays = parent.rays();
      if (s % 2 == 0 && !rays.empty()) {
        std::vector<Vector> pick;
        std::uniform_int_distribution<int> coin(0, 1);
        for (const auto& r : rays)
          if (coin(rng)) pick.push_back(r);
        candidate = Cone::from_generators(parent.dim(), pick, parent.lineality().basis());
      } else {
        std::vector<Vector> gens;
        const auto all = parent.generators();
        std::uniform_int_distribution<int> w(0, 2);
        std::uniform_int_distribution<int> count(1, 2);
        for (int k = count(rng); k > 0; --k) {
          Vector v = zero_vector(parent.dim());
          for (const auto& g : all) v = add(v, scale(g, w(rng)));
          gens.push_back(v);
        }
        candidate = Cone::from_generators(parent.dim(), gens);
      }
      const bool main = is_face(parent, candidate);
      const bool orc = oracle::face_definitional(fms[pi], oracle::FmCone(candidate), 8).is_face;
      faces += main;
      if (main == orc) {
        ++agree;
      } else if (!c.data.contains("witness")) {
        c.data["witness"] = Json{{"sample", s}, {"candidate_rays", emit_vectors(candidate.rays())}};
      }
    }
    c.passed = agree == total;
    c.detail = std::to_string(agree) + "/" + std::to_string(total) + " agree (" + std::to_string(faces) + " faces)";
    c.data["faces"] = faces;
    out.push_back(c);
    return out;
  });

  for (const auto& nc : corpus::cones()) {
    tasks.push_back([&nc] {
      std::vector<Check> out;
      std::size_t ok = 0, total = 0;
      Check c = make_check("span_face_section/" + nc.name, false, "");
      for (const auto& f : face_lattice(nc.cone)) {
        ++total;
        const Cone m = f.cone();
        const OrderIdeal ideal = span_is_ideal(nc.cone, m);
        if (restrict_to_subspace(nc.cone, ideal.subspace) == m && is_ideal(nc.cone, ideal.subspace)) {
          ++ok;
        } else {
          c.data["witness"] = index_list(f.ray_subset);
        }
      }
      c.passed = ok == total;
      c.detail = std::to_string(ok) + "/" + std::to_string(total) + " faces satisfy span(M) ∩ E+ = M";
      out.push_back(c);

      // Every subset of facet normals: dual face equals the face exposed by their sum.
      const auto& normals = nc.cone.ineqs();
      if (normals.size() <= 12) {
        std::size_t agree = 0;
        const std::size_t subsets = std::size_t{1} << normals.size();
        Check d = make_check("dual_equals_exposed/" + nc.name, false, "");
        for (std::size_t mask = 0; mask < subsets; ++mask) {
          std::vector<Vector> chosen;
          Vector sum = zero_vector(nc.cone.dim());
          for (std::size_t k = 0; k < normals.size(); ++k) {
            if (mask >> k & 1) {
              chosen.push_back(normals[k]);
              sum = add(sum, normals[k]);
            }
          }
          if (dual_face(nc.cone, chosen).ray_subset == exposed_face(nc.cone, sum).ray_subset) {
            ++agree;
          } else if (!d.data.contains("witness")) {
            d.data["witness"] = emit_vector(sum);
          }
        }
        d.passed = agree == subsets;
        d.detail = std::to_string(agree) + "/" + std::to_string(subsets) + " facet subsets";
        out.push_back(d);
      }

      const MaximalIdeals mi = maximal_ideals(nc.cone);
      std::size_t good = 0;
      for (const auto& h : mi.ideals) {
        const Quotient quo = quotient_cone(nc.cone, h);
        if (quo.cone.dim() == 1 && quo.cone.is_proper() && !quo.cone.is_zero()) ++good;
      }
      out.push_back(make_check("maximal_ideals/" + nc.name, good == mi.ideals.size(),
                               std::to_string(mi.ideals.size()) + " hyperplanes, " + std::to_string(good) +
                                   " with a 1-dimensional proper quotient" +
                                   (mi.non_generating_warning ? " (non-generating cone)" : ""),
                               Json{{"count", mi.ideals.size()}}));
      return out;
    });
  }

  tasks.push_back([] {
    std::vector<Check> out;
    const Cone& q = corpus::cone("Q");
    const MaximalIdeals mi = maximal_ideals(q);
    bool hyperplanes = mi.ideals.size() == 4;
    for (std::size_t k = 0; k < mi.ideals.size() && hyperplanes; ++k) {
      hyperplanes = mi.ideals[k].dim() == 2 && mi.ideals[k] == Subspace::kernel(Matrix::from_rows(
                                                                   std::span(&q.ineqs()[k], 1), 3));
    }
    out.push_back(make_check("maximal_ideals/Q_facets", hyperplanes && !mi.non_generating_warning,
                             std::to_string(mi.ideals.size()) + " facet hyperplanes"));
    const bool full_empty = maximal_ideals(corpus::cone("full2")).ideals.empty();
    out.push_back(make_check("maximal_ideals/full2_empty", full_empty, std::string("empty=") + yes_no(full_empty)));

    const Face ex = exposed_face(q, make_vector({1, 0, 1}));
    std::vector<Vector> rays;
    for (auto i : ex.ray_subset) rays.push_back(q.rays()[i]);
    out.push_back(make_check("exposed/Q_101", rays == std::vector<Vector>{make_vector({-1, -1, 1}), make_vector({-1, 1, 1})},
                             std::to_string(rays.size()) + " rays exposed by (1,0,1)",
                             Json{{"rays", emit_vectors(rays)}}));
    return out;
  });

  // Quotient maps: bipositive exactly when the subspace lies in the lineality space.
  tasks.push_back([] {
    std::vector<Check> out;
    std::mt19937 rng(4242);
    std::vector<const Cone*> pool;
    for (const char* n : {"std2", "halfplane", "Q", "Qstar", "pent5", "std3", "full2"}) pool.push_back(&corpus::cone(n));
    std::size_t ok = 0, in_lin = 0;
    const std::size_t total = 50;
    Check c = make_check("quotient_bipositive_iff_lineality/random", false, "");
    for (std::size_t s = 0; s < total; ++s) {
      const Cone& e = *pool[s % pool.size()];
      std::vector<Vector> basis;
      std::uniform_int_distribution<int> count(0, static_cast<int>(e.dim()));
      const int k = count(rng);
      for (int t = 0; t < k; ++t) {
        if (!e.lineality().is_zero() && s % 3 == 0) {
          Vector v = zero_vector(e.dim());
          for (const auto& l : e.lineality().basis()) v = add(v, scale(l, random_vector(rng, 1, -2, 2)[0]));
          basis.push_back(v);
        } else {
          basis.push_back(random_vector(rng, e.dim(), -2, 2));
        }
      }
      const Subspace i = Subspace::span(basis, e.dim());
      const Quotient quo = quotient_cone(e, i);
      const HomomorphismReport r = homomorphism_checks(quo.projection, e, quo.cone, i);
      in_lin += r.ideal_in_lineality;
      if (r.consistent()) {
        ++ok;
      } else if (!c.data.contains("witness")) {
        c.data["witness"] = Json{{"sample", s}, {"subspace", emit_vectors(i.basis())}};
      }
    }
    c.passed = ok == total;
    c.detail = std::to_string(ok) + "/" + std::to_string(total) + " consistent (" + std::to_string(in_lin) +
               " inside the lineality space)";
    c.data["inside_lineality"] = in_lin;
    out.push_back(c);

    const Cone& s2 = corpus::cone("std2");
    const Cone& hp = corpus::cone("halfplane");
    const Subspace x_axis = Subspace::span(std::vector<Vector>{unit_vector(2, 0)}, 2);
    const Quotient q_hp = quotient_cone(hp, x_axis);
    const Quotient q_s2 = quotient_cone(s2, x_axis);
    const bool hp_bip = homomorphism_checks(q_hp.projection, hp, q_hp.cone, x_axis).quotient_bipositive;
    const bool s2_bip = homomorphism_checks(q_s2.projection, s2, q_s2.cone, x_axis).quotient_bipositive;
    out.push_back(make_check("quotient_bipositive/examples", hp_bip && !s2_bip,
                             std::string("halfplane/x-axis=") + yes_no(hp_bip) + ", std2/x-axis=" + yes_no(s2_bip)));
    const HomomorphismReport id = homomorphism_checks(Matrix::identity(2), s2, s2, Subspace(2));
    out.push_back(make_check("homomorphism/trivial_ideal", id.factored == Matrix::identity(2) && id.consistent(),
                             "I = {0} factors T through itself"));
    return out;
  });

  // Nested ideals from nested faces: third isomorphism and ideal correspondence.
  for (const char* name : {"Q", "pent5", "std3", "halfplane"}) {
    tasks.push_back([name] {
      const Cone& e = corpus::cone(name);
      const auto lattice = face_lattice(e);
      std::size_t ok = 0, total = 0;
      Check c = make_check(std::string("third_isomorphism/") + name, false, "");
      for (const auto& small : lattice) {
        for (const auto& big : lattice) {
          if (!std::includes(big.ray_subset.begin(), big.ray_subset.end(), small.ray_subset.begin(),
                             small.ray_subset.end())) {
            continue;
          }
          const Subspace i = small.cone().span();
          const Subspace j = big.cone().span();
          const Quotient qj = quotient_cone(e, j);
          const HomomorphismReport r = homomorphism_checks(qj.projection, e, qj.cone, i, j);
          ++total;
          if (r.consistent() && r.third_isomorphism.value_or(false)) {
            ++ok;
          } else if (!c.data.contains("witness")) {
            c.data["witness"] = index_list(small.ray_subset) + " in " + index_list(big.ray_subset);
          }
        }
      }
      c.passed = ok == total;
      c.detail = std::to_string(ok) + "/" + std::to_string(total) + " nested face pairs";
      return std::vector<Check>{c};
    });
  }
  return {"appendix", run_tasks(tasks, "appendix")};
}

// ---------------------------------------------------------------- bodies

SuiteReport suite_bodies() {
  std::vector<Task> tasks;
  tasks.push_back([] {
    std::vector<Check> out;
    const Polytope& iv = corpus::polytope("interval");
    const Polytope& sq = corpus::polytope("square");
    const Polytope origin = Polytope::from_points(1, {make_vector({0})});
    out.push_back(make_check("hull_slice/interval_x_interval", hull_slice_check(iv, iv), "slice equals [-1,1]"));
    out.push_back(make_check("hull_slice/interval_x_square", hull_slice_check(iv, sq), "slice equals the square"));
    out.push_back(make_check("hull_slice/origin_x_interval", hull_slice_check(origin, iv), "slice equals {0}"));

    const Polytope h = tensor_hull(iv, corpus::polytope("seg23"));
    const bool hull_ok = h.vertices == std::vector<Vector>{make_vector({-3}), make_vector({3})};
    const Vector two = vec_tensor(make_vector({1}), make_vector({2}));
    Check ns = make_check("nonsymmetric/interval_x_seg23", hull_ok && !h.has_vertex(two),
                          "hull [-3,3]; 1⊗2 = 2 extreme=" + std::string(yes_no(h.has_vertex(two))),
                          Json{{"vertices", emit_vectors(h.vertices)}});
    out.push_back(ns);

    out.push_back(make_check("face_tensor/interval_vertex", face_tensor_check(iv, iv, {1}, {1}), "{1} ⊗ {1}"));
    // Square vertices sorted: (-1,-1),(-1,1),(1,-1),(1,1); {2,3} is the edge x = 1.
    out.push_back(make_check("face_tensor/square_edge", face_tensor_check(sq, iv, {2, 3}, {1}), "edge x=1 ⊗ {1}"));
    bool improper = false;
    try {
      face_tensor_check(sq, iv, {0, 1, 2, 3}, {1});
    } catch (const ImproperFaceError&) {
      improper = true;
    }
    out.push_back(make_check("face_tensor/improper_rejected", improper, std::string("raised=") + yes_no(improper)));
    bool not_face = false;
    try {
      face_tensor_check(sq, iv, {0, 3}, {1});
    } catch (const NotAFaceError&) {
      not_face = true;
    }
    out.push_back(make_check("face_tensor/diagonal_rejected", not_face, std::string("raised=") + yes_no(not_face)));
    return out;
  });

  std::vector<const corpus::NamedPolytope*> symmetric;
  for (const auto& p : corpus::polytopes())
    if (p.polytope.symmetric) symmetric.push_back(&p);
  for (const auto* a : symmetric) {
    for (const auto* b : symmetric) {
      tasks.push_back([a, b] {
        const bool ok = extreme_points_preserved(a->polytope, b->polytope);
        const std::size_t nv = tensor_hull(a->polytope, b->polytope).vertices.size();
        return std::vector<Check>{make_check("extreme_points/" + a->name + "_x_" + b->name, ok,
                                             std::to_string(nv) + " vertices in the tensor hull")};
      });
    }
  }

  tasks.push_back([] {
    // Nonempty faces of the polytope = faces of its homogenization minus the apex.
    const std::map<std::string, std::size_t> expected = {
        {"interval", 3}, {"square", 9}, {"cube3", 27}, {"cross2", 9}, {"cross3", 27}, {"seg23", 3}};
    std::vector<Check> out;
    for (const auto& [name, count] : expected) {
      const std::size_t got = face_lattice(homogenize(corpus::polytope(name))).size() - 1;
      out.push_back(make_check("homogenization_faces/" + name, got == count,
                               std::to_string(got) + " nonempty faces, expected " + std::to_string(count)));
    }
    return out;
  });
  return {"bodies", run_tasks(tasks, "bodies")};
}

// ---------------------------------------------------------------- oracle-crosscheck

SuiteReport suite_oracle() {
  std::vector<Task> tasks;
  tasks.push_back([] {
    static const std::vector<Cone> extra = {
        projective_cone(corpus::cone("std2"), corpus::cone("std2")),
        injective_cone(corpus::cone("halfplane"), corpus::cone("std1")),
    };
    std::vector<const Cone*> pool;
    for (const auto& nc : corpus::cones())
      if (nc.cone.dim() > 0) pool.push_back(&nc.cone);
    for (const auto& c : extra) pool.push_back(&c);

    std::mt19937 rng(777);
    const std::size_t total = 500;
    std::size_t agree = 0, members = 0;
    Check c = make_check("membership/sampled", false, "");
    for (std::size_t s = 0; s < total; ++s) {
      const Cone& cone = *pool[s % pool.size()];
      Vector x;
      if (s % 2 == 0) {
        x = zero_vector(cone.dim());
        std::uniform_int_distribution<int> w(0, 3);
        for (const auto& g : cone.generators()) x = add(x, scale(g, w(rng)));
        if (s % 4 == 0) x = add(x, random_vector(rng, cone.dim(), -1, 1));
      } else {
        x = random_vector(rng, cone.dim(), -3, 3);
      }
      const bool main = cone.contains(x);
      const bool orc = oracle::membership_fm(cone.dim(), cone.generators(), x);
      members += main;
      if (main == orc) {
        ++agree;
      } else if (!c.data.contains("witness")) {
        c.data["witness"] = emit_vector(x);
      }
    }
    c.passed = agree == total;
    c.detail = std::to_string(agree) + "/" + std::to_string(total) + " agree (" + std::to_string(members) + " members)";
    c.data["members"] = members;
    return std::vector<Check>{c};
  });

  for (auto kind : {TensorKind::projective, TensorKind::injective}) {
    tasks.push_back([kind] {
      const Cone& q = corpus::cone("Q");
      const Cone& qs = corpus::cone("Qstar");
      const std::string k = kind == TensorKind::projective ? "min" : "max";
      const Cone c = kind == TensorKind::projective ? projective_cone(q, qs) : injective_cone(q, qs);
      const oracle::FmCone fm(c);
      const auto& rays = c.rays();
      std::size_t agree = 0, total = 0;
      Check check = make_check("extremality/" + k + "_QxQstar", false, "");
      auto probe = [&](const Vector& v) {
        ++total;
        const bool main = contains_vector(extremal_rays(c), primitive(v));
        const bool orc = oracle::extremality_definitional(fm, v);
        if (main == orc) {
          ++agree;
        } else if (!check.data.contains("witness")) {
          check.data["witness"] = emit_vector(v);
        }
      };
      for (const auto& r : rays) probe(r);
      for (std::size_t i = 0; i + 1 < rays.size(); ++i) probe(add(rays[i], rays[i + 1]));
      check.passed = agree == total;
      check.detail = std::to_string(agree) + "/" + std::to_string(total) + " verdicts agree (" +
                     std::to_string(rays.size()) + " rays, " + std::to_string(total - rays.size()) + " ray sums)";
      return std::vector<Check>{check};
    });
  }
  return {"oracle-crosscheck", run_tasks(tasks, "oracle-crosscheck")};
}

using SuiteFn = SuiteReport (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"thmA", suite_thmA},         {"thmB", suite_thmB},     {"thmC", suite_thmC},
      {"thmD_faces", suite_thmD},   {"thmE_ideals", suite_thmE}, {"thmF_rays", suite_thmF},
      {"rank1", suite_rank1},       {"bodies", suite_bodies}, {"appendix", suite_appendix},
      {"oracle-crosscheck", suite_oracle},
  };
  return r;
}

}  // namespace

bool SuiteReport::all_passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, fn] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

std::vector<Check> run_tasks(const std::vector<Task>& tasks, const std::string& error_prefix) {
  std::vector<std::vector<Check>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        results[i] = {make_check(error_prefix + "/task" + std::to_string(i), false, std::string("error: ") + e.what())};
      }
    }
  };
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n = std::min(hw, tasks.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<Check> flat;
  for (auto& r : results)
    for (auto& c : r) flat.push_back(std::move(c));
  return flat;
}

std::vector<SuiteReport> run(const std::string& name) {
  // Touch the corpus before any worker thread does.
  corpus::cones();
  corpus::grid();
  corpus::polytopes();
  std::vector<SuiteReport> out;
  const std::string canonical = name == "thmF" ? "thmF_rays" : name;
  for (const auto& [n, fn] : registry()) {
    if (canonical == "all" || canonical == n) out.push_back(fn());
  }
  if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

Json report_json(const std::vector<SuiteReport>& reports) {
  Json root;
  root["format_version"] = "1";
  Json suites = Json::array();
  std::size_t total = 0, failed = 0;
  for (const auto& r : reports) {
    Json s;
    s["suite"] = r.suite;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json j;
      j["id"] = c.id;
      j["passed"] = c.passed;
      j["detail"] = c.detail;
      if (!c.data.empty()) j["data"] = c.data;
      checks.push_back(std::move(j));
    }
    s["checks"] = std::move(checks);
    s["total"] = r.checks.size();
    s["failed"] = r.failures();
    s["all_passed"] = r.all_passed();
    total += r.checks.size();
    failed += r.failures();
    suites.push_back(std::move(s));
  }
  root["suites"] = std::move(suites);
  root["total"] = total;
  root["failed"] = failed;
  root["all_passed"] = failed == 0;
  return root;
}

std::string report_text(const std::vector<SuiteReport>& reports) {
  std::ostringstream os;
  std::size_t total = 0, failed = 0;
  for (const auto& r : reports) {
    os << "== " << r.suite << " (" << r.checks.size() - r.failures() << "/" << r.checks.size() << " passed)\n";
    for (const auto& c : r.checks) {
      os << (c.passed ? "PASS " : "FAIL ") << c.id << ": " << c.detail << "\n";
      if (!c.passed && c.data.contains("witness")) os << "     witness " << c.data["witness"].dump() << "\n";
    }
    total += r.checks.size();
    failed += r.failures();
  }
  os << (failed == 0 ? "ALL PASSED" : "FAILURES") << " " << total - failed << "/" << total << "\n";
  return os.str();
}

}  // namespace conetensor::suites

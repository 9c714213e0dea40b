#include "conetensor/conetensor.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "bodies/bodies.hpp"
#include "cone/double_description.hpp"
#include "conecli/corpus.hpp"
#include "conecli/document.hpp"
#include "conecli/suites.hpp"
#include "facelab/facelab.hpp"
#include "tensorcone/tensorcone.hpp"

struct ct_cone {
  conetensor::Cone cone;
};

struct ct_polytope {
  conetensor::Polytope polytope;
};

namespace {

using namespace conetensor;

thread_local std::string g_last_error;

ct_status fail(ct_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <typename F>
ct_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return CT_OK;
  } catch (const ParseError& e) {
    return fail(CT_ERR_PARSE, e.what());
  } catch (const Json::exception& e) {
    return fail(CT_ERR_PARSE, e.what());
  } catch (const DdLimitExceeded& e) {
    return fail(CT_ERR_DD_LIMIT, e.what());
  } catch (const DimensionError& e) {
    return fail(CT_ERR_DIMENSION, e.what());
  } catch (const PreconditionError& e) {
    return fail(CT_ERR_PRECONDITION, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(CT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(CT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CT_ERR_INTERNAL, "unknown error");
  }
}

struct NullArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <typename T>
void require(const T* p, const char* what) {
  if (!p) throw NullArgument(std::string("null argument: ") + what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string dump(const Json& j, int indent) { return indent >= 0 ? pretty(j, indent) : j.dump(); }

Vector parse_vector_text(const char* text, std::size_t dim) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed vector: ") + e.what());
  }
  return parse_vector(j, dim);
}

Cone checked_face(const Cone& c, const size_t* idx, size_t len, const char* which) {
  if (len > 0) require(idx, which);
  std::vector<std::size_t> subset(idx, idx + len);
  for (auto i : subset) {
    if (i >= c.rays().size()) {
      throw PreconditionError(std::string(which) + ": ray index " + std::to_string(i) + " out of range (" +
                              std::to_string(c.rays().size()) + " rays)");
    }
  }
  Cone face = face_cone(c, subset);
  if (!is_face(c, face)) throw PreconditionError(std::string(which) + ": rays do not span a face");
  return face;
}

}  // namespace

extern "C" {

const char* ct_version(void) { return "0.1.0"; }

const char* ct_status_name(ct_status status) {
  switch (status) {
    case CT_OK: return "ok";
    case CT_ERR_DIMENSION: return "dimension";
    case CT_ERR_PARSE: return "parse";
    case CT_ERR_PRECONDITION: return "precondition";
    case CT_ERR_DD_LIMIT: return "dd_limit";
    case CT_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case CT_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* ct_last_error(void) { return g_last_error.c_str(); }

void ct_string_free(char* s) { std::free(s); }

ct_status ct_json_pretty(const char* json, char** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = dup_string(pretty(Json::parse(json)));
  });
}

ct_status ct_cone_from_json(const char* json, int strict, ct_cone** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new ct_cone{parse_cone(json, strict != 0)};
  });
}

ct_status ct_cone_builtin(const char* name, ct_cone** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = new ct_cone{corpus::cone(name)};
  });
}

ct_status ct_cone_clone(const ct_cone* c, ct_cone** out) {
  return guarded([&] {
    require(c, "cone");
    require(out, "out");
    *out = new ct_cone{c->cone};
  });
}

void ct_cone_free(ct_cone* c) { delete c; }

ct_status ct_cone_to_json(const ct_cone* c, int indent, char** out) {
  return guarded([&] {
    require(c, "cone");
    require(out, "out");
    *out = dup_string(dump(emit_cone(c->cone), indent));
  });
}

ct_status ct_cone_to_text(const ct_cone* c, char** out) {
  return guarded([&] {
    require(c, "cone");
    require(out, "out");
    *out = dup_string(cone_text(c->cone));
  });
}

ct_status ct_cone_dim(const ct_cone* c, size_t* out) {
  return guarded([&] {
    require(c, "cone");
    require(out, "out");
    *out = c->cone.dim();
  });
}

ct_status ct_cone_ray_count(const ct_cone* c, size_t* out) {
  return guarded([&] {
    require(c, "cone");
    require(out, "out");
    *out = c->cone.rays().size();
  });
}

ct_status ct_cone_flags(const ct_cone* c, int* proper, int* generating) {
  return guarded([&] {
    require(c, "cone");
    if (proper) *proper = c->cone.is_proper();
    if (generating) *generating = c->cone.is_generating();
  });
}

ct_status ct_cone_dual(const ct_cone* c, ct_cone** out) {
  return guarded([&] {
    require(c, "cone");
    require(out, "out");
    *out = new ct_cone{c->cone.dual()};
  });
}

ct_status ct_cone_tensor(const ct_cone* e, const ct_cone* f, ct_tensor_kind kind, ct_cone** out) {
  return guarded([&] {
    require(e, "e");
    require(f, "f");
    require(out, "out");
    if (kind == CT_TENSOR_MIN) {
      *out = new ct_cone{projective_cone(e->cone, f->cone)};
    } else if (kind == CT_TENSOR_MAX) {
      *out = new ct_cone{injective_cone(e->cone, f->cone)};
    } else {
      throw std::invalid_argument("unknown tensor kind");
    }
  });
}

ct_status ct_cone_extremal_rays_json(const ct_cone* c, char** out) {
  return guarded([&] {
    require(c, "cone");
    require(out, "out");
    const auto rays = extremal_rays(c->cone);
    Json j;
    j["dim"] = c->cone.dim();
    j["count"] = rays.size();
    j["rays"] = emit_vectors(rays);
    *out = dup_string(pretty(j));
  });
}

ct_status ct_cone_lineality_json(const ct_cone* c, char** out) {
  return guarded([&] {
    require(c, "cone");
    require(out, "out");
    Json j;
    j["dim"] = c->cone.dim();
    j["lineality_dim"] = c->cone.lineality().dim();
    j["basis"] = emit_vectors(c->cone.lineality().basis());
    *out = dup_string(pretty(j));
  });
}

ct_status ct_cone_contains(const ct_cone* c, const char* vector_json, int* out) {
  return guarded([&] {
    require(c, "cone");
    require(vector_json, "vector");
    require(out, "out");
    *out = c->cone.contains(parse_vector_text(vector_json, c->cone.dim()));
  });
}

ct_status ct_cone_equal(const ct_cone* a, const ct_cone* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    if (a->cone.dim() != b->cone.dim()) throw DimensionError("cones live in different dimensions");
    *out = a->cone == b->cone;
  });
}

ct_status ct_cone_subset(const ct_cone* a, const ct_cone* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = subset(a->cone, b->cone);
  });
}

ct_status ct_face_op_apply(const ct_cone* e, const ct_cone* f, ct_face_op op, const size_t* m, size_t m_len,
                           const size_t* n, size_t n_len, ct_cone** out, int* face) {
  return guarded([&] {
    require(e, "e");
    require(f, "f");
    require(out, "out");
    const Cone mc = checked_face(e->cone, m, m_len, "m");
    const Cone nc = checked_face(f->cone, n, n_len, "n");
    Cone result;
    bool projective = true;
    switch (op) {
      case CT_FACE_ORFACE: result = orface(e->cone, f->cone, mc, nc); break;
      case CT_FACE_ANDFACE: result = andface(e->cone, f->cone, mc, nc); break;
      case CT_FACE_SCOR:
        result = injective_orface_andface(e->cone, f->cone, mc, nc, InjectiveFaceKind::scor);
        projective = false;
        break;
      case CT_FACE_SCAND:
        result = injective_orface_andface(e->cone, f->cone, mc, nc, InjectiveFaceKind::scand);
        projective = false;
        break;
      default: throw std::invalid_argument("unknown face operation");
    }
    if (face) {
      const Cone parent = projective ? projective_cone(e->cone, f->cone) : injective_cone(e->cone, f->cone);
      *face = is_face(parent, result);
    }
    *out = new ct_cone{std::move(result)};
  });
}

ct_status ct_rank1(const ct_cone* e, const ct_cone* f, const char* x_json, const char* y_json, ct_tensor_kind kind,
                   char** out, int* member) {
  return guarded([&] {
    require(e, "e");
    require(f, "f");
    require(x_json, "x");
    require(y_json, "y");
    if (kind != CT_TENSOR_MIN && kind != CT_TENSOR_MAX) throw std::invalid_argument("unknown tensor kind");
    const Vector x = parse_vector_text(x_json, e->cone.dim());
    const Vector y = parse_vector_text(y_json, f->cone.dim());
    const RankOneVerdict v = rank_one_classify(
        x, y, e->cone, f->cone, kind == CT_TENSOR_MIN ? TensorKind::projective : TensorKind::injective);
    if (member) *member = v.member;
    if (out) {
      Json j;
      j["kind"] = kind == CT_TENSOR_MIN ? "min" : "max";
      j["member"] = v.member;
      j["clause"] = clause_name(v.clause);
      j["tensor"] = emit_vector(vec_tensor(x, y));
      *out = dup_string(pretty(j));
    }
  });
}

ct_status ct_polytope_from_json(const char* json, int strict, ct_polytope** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new ct_polytope{parse_polytope(std::string(json), strict != 0)};
  });
}

ct_status ct_polytope_builtin(const char* name, ct_polytope** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = new ct_polytope{corpus::polytope(name)};
  });
}

void ct_polytope_free(ct_polytope* p) { delete p; }

ct_status ct_polytope_to_json(const ct_polytope* p, int indent, char** out) {
  return guarded([&] {
    require(p, "polytope");
    require(out, "out");
    *out = dup_string(dump(emit_polytope(p->polytope), indent));
  });
}

ct_status ct_polytope_tensor_hull(const ct_polytope* c, const ct_polytope* d, ct_polytope** out) {
  return guarded([&] {
    require(c, "c");
    require(d, "d");
    require(out, "out");
    *out = new ct_polytope{tensor_hull(c->polytope, d->polytope)};
  });
}

ct_status ct_polytope_hull_report(const ct_polytope* c, const ct_polytope* d, int indent, char** out,
                                  int* all_passed) {
  return guarded([&] {
    require(c, "c");
    require(d, "d");
    require(out, "out");
    const Polytope& p = c->polytope;
    const Polytope& q = d->polytope;
    const Polytope hull = tensor_hull(p, q);
    Json j;
    j["hull"] = emit_polytope(hull);
    bool ok = true;
    if (p.symmetric && q.symmetric) {
      const bool slice = hull_slice_check(p, q);
      const bool ext = extreme_points_preserved(p, q);
      j["hull_slice"] = slice;
      j["extreme_points_preserved"] = ext;
      ok = slice && ext;
    } else {
      // Without symmetry, tensors of vertices need not stay extreme; list those that do not.
      Json lost = Json::array();
      for (const auto& a : p.vertices)
        for (const auto& b : q.vertices)
          if (!hull.has_vertex(vec_tensor(a, b))) lost.push_back(emit_vector(vec_tensor(a, b)));
      j["non_extreme_vertex_tensors"] = std::move(lost);
    }
    j["all_passed"] = ok;
    if (all_passed) *all_passed = ok;
    *out = dup_string(dump(j, indent));
  });
}

ct_status ct_corpus_json(char** out) {
  return guarded([&] {
    require(out, "out");
    Json j;
    Json cones = Json::array();
    for (const auto& c : corpus::cones()) {
      cones.push_back({{"name", c.name},
                       {"dim", c.cone.dim()},
                       {"rays", c.cone.rays().size()},
                       {"proper", c.cone.is_proper()},
                       {"generating", c.cone.is_generating()}});
    }
    Json polys = Json::array();
    for (const auto& p : corpus::polytopes()) {
      polys.push_back({{"name", p.name},
                       {"dim", p.polytope.dim},
                       {"vertices", p.polytope.vertices.size()},
                       {"symmetric", p.polytope.symmetric}});
    }
    j["cones"] = std::move(cones);
    j["polytopes"] = std::move(polys);
    j["suites"] = suites::suite_names();
    *out = dup_string(pretty(j));
  });
}

ct_status ct_verify(const char* suite, ct_format format, char** report, int* all_passed) {
  return guarded([&] {
    require(suite, "suite");
    require(report, "report");
    const auto reports = suites::run(suite);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.all_passed();
    if (all_passed) *all_passed = ok;
    if (format == CT_FORMAT_JSON) {
      *report = dup_string(pretty(suites::report_json(reports)) + "\n");
    } else {
      *report = dup_string(suites::report_text(reports));
    }
  });
}

}  // extern "C"

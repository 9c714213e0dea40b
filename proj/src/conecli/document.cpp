#include "conecli/document.hpp"

#include <cstdint>
#include <regex>
#include <set>
#include <sstream>

namespace conetensor {

namespace {

const std::regex kRationalPattern(R"(^\s*([+-]?\d+)(\s*/\s*(\d+))?\s*$)");

std::vector<Vector> parse_rows(const Json& j, std::size_t dim, const char* field) {
  if (!j.is_array()) throw ParseError(std::string("field '") + field + "' must be an array of vectors");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    try {
      rows.push_back(parse_vector(j[i], dim));
    } catch (const ParseError& e) {
      throw ParseError(std::string(field) + "[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return rows;
}

std::size_t parse_dim(const Json& j) {
  if (!j.contains("dim")) throw ParseError("missing field 'dim'");
  const Json& d = j["dim"];
  if (!d.is_number_integer() || d.get<long long>() < 0) throw ParseError("'dim' must be a nonnegative integer");
  return d.get<std::size_t>();
}

void reject_unknown(const Json& j, const std::set<std::string>& allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) throw ParseError("unknown field '" + it.key() + "'");
  }
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<std::uint64_t>())));
    return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::smatch m;
    if (!std::regex_match(s, m, kRationalPattern)) throw ParseError("malformed rational '" + s + "'");
    std::string num = m[1].str();
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    Integer p(num);
    Integer q(m[3].matched ? m[3].str() : std::string("1"));
    if (q == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  throw ParseError("numbers must be integers or \"p/q\" strings, got " + j.dump());
}

Vector parse_vector(const Json& j, std::size_t dim) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  if (j.size() != dim) {
    throw ParseError("vector has " + std::to_string(j.size()) + " entries, expected " + std::to_string(dim));
  }
  Vector v;
  v.reserve(dim);
  for (const auto& e : j) v.push_back(parse_rational(e));
  return v;
}

Json emit_rational(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(q.get_str());
}

Json emit_vector(const Vector& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(emit_rational(q));
  return a;
}

Json emit_vectors(const std::vector<Vector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(emit_vector(v));
  return a;
}

ConeDocument parse_cone_document(const Json& j, bool strict) {
  if (!j.is_object()) throw ParseError("cone document must be a JSON object");
  if (strict) reject_unknown(j, {"format_version", "dim", "rays", "lineality", "inequalities", "equations", "name"});
  if (j.contains("format_version")) {
    const Json& v = j["format_version"];
    if (!v.is_string() || v.get<std::string>() != "1") throw ParseError("unsupported format_version " + v.dump());
  }
  ConeDocument doc;
  doc.input.dim = parse_dim(j);
  const std::size_t dim = doc.input.dim;
  if (j.contains("rays")) doc.input.rays = parse_rows(j["rays"], dim, "rays");
  if (j.contains("lineality")) doc.input.lineality = parse_rows(j["lineality"], dim, "lineality");
  if (j.contains("inequalities")) doc.input.ineqs = parse_rows(j["inequalities"], dim, "inequalities");
  if (j.contains("equations")) doc.input.eqs = parse_rows(j["equations"], dim, "equations");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("'name' must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!doc.input.has_generators() && !doc.input.has_constraints()) {
    throw ParseError("cone document needs rays/lineality or inequalities/equations");
  }
  return doc;
}

ConeDocument parse_cone_document(const std::string& text, bool strict) {
  return parse_cone_document(parse_text(text), strict);
}

Cone parse_cone(const std::string& text, bool strict) { return cone_from(parse_cone_document(text, strict).input); }

Json emit_cone(const Cone& c, const std::optional<std::string>& name) {
  Json j;
  j["format_version"] = "1";
  j["dim"] = c.dim();
  j["rays"] = emit_vectors(c.rays());
  j["lineality"] = emit_vectors(c.lineality().basis());
  j["inequalities"] = emit_vectors(c.ineqs());
  j["equations"] = emit_vectors(c.eqs().basis());
  if (name) j["name"] = *name;
  return j;
}

std::string cone_text(const Cone& c) {
  std::ostringstream os;
  os << "dim " << c.dim() << "\n";
  auto block = [&](const char* title, const std::vector<Vector>& vs) {
    os << title << " (" << vs.size() << ")\n";
    for (const auto& v : vs) os << "  " << to_string(v) << "\n";
  };
  block("rays", c.rays());
  block("lineality", c.lineality().basis());
  block("inequalities", c.ineqs());
  block("equations", c.eqs().basis());
  os << "proper " << (c.is_proper() ? "yes" : "no") << ", generating " << (c.is_generating() ? "yes" : "no") << "\n";
  return os.str();
}

Polytope parse_polytope(const Json& j, bool strict) {
  if (!j.is_object()) throw ParseError("polytope document must be a JSON object");
  if (strict) reject_unknown(j, {"dim", "vertices", "symmetric", "name"});
  const std::size_t dim = parse_dim(j);
  if (!j.contains("vertices")) throw ParseError("missing field 'vertices'");
  std::vector<Vector> pts = parse_rows(j["vertices"], dim, "vertices");
  if (pts.empty()) throw ParseError("polytope needs at least one vertex");
  Polytope p = Polytope::from_points(dim, pts);
  if (j.contains("symmetric")) {
    if (!j["symmetric"].is_boolean()) throw ParseError("'symmetric' must be a boolean");
    if (j["symmetric"].get<bool>() != p.symmetric) throw ParseError("'symmetric' contradicts the vertex set");
  }
  return p;
}

Polytope parse_polytope(const std::string& text, bool strict) { return parse_polytope(parse_text(text), strict); }

Json emit_polytope(const Polytope& p) {
  Json j;
  j["dim"] = p.dim;
  j["vertices"] = emit_vectors(p.vertices);
  j["symmetric"] = p.symmetric;
  return j;
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void pretty_into(std::string& out, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  if (!j.is_structured() || j.empty()) {
    out += j.dump();
    return;
  }
  if (is_flat(j)) {
    out += '[';
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += ']';
    return;
  }
  out += j.is_array() ? "[\n" : "{\n";
  std::size_t k = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++k) {
    out += pad;
    if (j.is_object()) out += Json(it.key()).dump() + ": ";
    pretty_into(out, *it, indent, depth + 1);
    out += k + 1 < j.size() ? ",\n" : "\n";
  }
  out += close + (j.is_array() ? "]" : "}");
}

}  // namespace

std::string pretty(const Json& j, int indent) {
  std::string out;
  pretty_into(out, j, indent, 0);
  return out;
}

}  // namespace conetensor

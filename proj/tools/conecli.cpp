// conecli: command-line front end over the conetensor C API.

#include <conetensor/conetensor.h>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDdLimit = 3;

struct ApiError : std::runtime_error {
  ct_status status;
  ApiError(ct_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

void check(ct_status s) {
  if (s != CT_OK) throw ApiError(s, std::string(ct_status_name(s)) + " error: " + ct_last_error());
}

struct ConeDeleter {
  void operator()(ct_cone* c) const { ct_cone_free(c); }
};
struct PolytopeDeleter {
  void operator()(ct_polytope* p) const { ct_polytope_free(p); }
};
using ConePtr = std::unique_ptr<ct_cone, ConeDeleter>;
using PolytopePtr = std::unique_ptr<ct_polytope, PolytopeDeleter>;

std::string take(char* s) {
  std::string out(s ? s : "");
  ct_string_free(s);
  return out;
}

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw ApiError(CT_ERR_INVALID_ARGUMENT, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kBuiltin = "builtin:";

bool is_builtin(const std::string& ref) { return ref.rfind(kBuiltin, 0) == 0; }

ConePtr load_cone(const std::string& ref, bool strict) {
  ct_cone* c = nullptr;
  if (is_builtin(ref)) {
    check(ct_cone_builtin(ref.substr(kBuiltin.size()).c_str(), &c));
  } else {
    check(ct_cone_from_json(read_source(ref).c_str(), strict, &c));
  }
  return ConePtr(c);
}

PolytopePtr load_polytope(const std::string& ref, bool strict) {
  ct_polytope* p = nullptr;
  if (is_builtin(ref)) {
    check(ct_polytope_builtin(ref.substr(kBuiltin.size()).c_str(), &p));
  } else {
    check(ct_polytope_from_json(read_source(ref).c_str(), strict, &p));
  }
  return PolytopePtr(p);
}

std::string cone_output(const ct_cone* c, const std::string& format) {
  char* s = nullptr;
  if (format == "text") {
    check(ct_cone_to_text(c, &s));
    return take(s);
  }
  check(ct_cone_to_json(c, 2, &s));
  return take(s) + "\n";
}

/// Accepts "[1,-1/2]" JSON or a bare comma list "1,-1/2".
std::string vector_json(const std::string& arg) {
  if (!arg.empty() && arg.front() == '[') return arg;
  std::string out = "[";
  std::stringstream ss(arg);
  std::string item;
  bool first = true;
  while (std::getline(ss, item, ',')) {
    out += first ? "" : ",";
    first = false;
    const bool integral = !item.empty() && item.find('/') == std::string::npos;
    out += integral ? item : "\"" + item + "\"";
  }
  return out + "]";
}

std::string pretty(const nlohmann::ordered_json& j) {
  char* s = nullptr;
  check(ct_json_pretty(j.dump().c_str(), &s));
  return take(s);
}

std::string yes_no(int b) { return b ? "yes" : "no"; }

struct Options {
  std::string format;  // defaults per subcommand after parsing
  bool lenient = false;
  std::string a, b;
  std::string kind = "min";
  std::string op = "all";
  std::vector<std::size_t> m, n;
  std::string x, y;
  std::string suite = "all";
};

ct_tensor_kind tensor_kind(const std::string& k) { return k == "max" ? CT_TENSOR_MAX : CT_TENSOR_MIN; }

int cmd_dual(const Options& o) {
  auto a = load_cone(o.a, !o.lenient);
  ct_cone* d = nullptr;
  check(ct_cone_dual(a.get(), &d));
  ConePtr dual(d);
  std::cout << cone_output(dual.get(), o.format);
  return kExitPass;
}

int cmd_tensor(const Options& o) {
  auto a = load_cone(o.a, !o.lenient);
  auto b = load_cone(o.b, !o.lenient);
  ct_cone* t = nullptr;
  check(ct_cone_tensor(a.get(), b.get(), tensor_kind(o.kind), &t));
  ConePtr out(t);
  std::cout << cone_output(out.get(), o.format);
  return kExitPass;
}

int cmd_rays(const Options& o) {
  auto a = load_cone(o.a, !o.lenient);
  char* s = nullptr;
  check(ct_cone_extremal_rays_json(a.get(), &s));
  const auto j = nlohmann::ordered_json::parse(take(s));
  if (o.format == "text") {
    std::cout << j["count"].get<std::size_t>() << " extremal rays\n";
    for (const auto& r : j["rays"]) std::cout << "  " << r.dump() << "\n";
  } else {
    std::cout << pretty(j) << "\n";
  }
  return kExitPass;
}

int cmd_lineality(const Options& o) {
  auto a = load_cone(o.a, !o.lenient);
  char* s = nullptr;
  check(ct_cone_lineality_json(a.get(), &s));
  const auto j = nlohmann::ordered_json::parse(take(s));
  if (o.format == "text") {
    std::cout << "lineality dim " << j["lineality_dim"].get<std::size_t>() << "\n";
    for (const auto& r : j["basis"]) std::cout << "  " << r.dump() << "\n";
  } else {
    std::cout << pretty(j) << "\n";
  }
  return kExitPass;
}

int cmd_check(const Options& o) {
  auto a = load_cone(o.a, !o.lenient);
  int proper = 0, generating = 0;
  std::size_t dim = 0, rays = 0;
  check(ct_cone_flags(a.get(), &proper, &generating));
  check(ct_cone_dim(a.get(), &dim));
  check(ct_cone_ray_count(a.get(), &rays));
  if (o.format == "text") {
    std::cout << "dim " << dim << ", " << rays << " rays, proper " << yes_no(proper) << ", generating "
              << yes_no(generating) << "\n";
  } else {
    nlohmann::ordered_json j{{"dim", dim}, {"rays", rays}, {"proper", proper != 0}, {"generating", generating != 0}};
    std::cout << pretty(j) << "\n";
  }
  return kExitPass;
}

int cmd_face_ops(const Options& o) {
  auto e = load_cone(o.a, !o.lenient);
  auto f = load_cone(o.b, !o.lenient);
  const std::vector<std::pair<std::string, ct_face_op>> all = {
      {"orface", CT_FACE_ORFACE}, {"andface", CT_FACE_ANDFACE}, {"scor", CT_FACE_SCOR}, {"scand", CT_FACE_SCAND}};
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::string text;
  bool ok = true;
  for (const auto& [name, op] : all) {
    if (o.op != "all" && o.op != name) continue;
    ct_cone* r = nullptr;
    int face = 0;
    check(ct_face_op_apply(e.get(), f.get(), op, o.m.data(), o.m.size(), o.n.data(), o.n.size(), &r, &face));
    ConePtr result(r);
    ok = ok && face;
    char* s = nullptr;
    check(ct_cone_to_json(result.get(), -1, &s));
    results[name] = {{"is_face", face != 0}, {"cone", nlohmann::ordered_json::parse(take(s))}};
    text += "== " + name + " (face of " + (op == CT_FACE_ORFACE || op == CT_FACE_ANDFACE ? "min" : "max") +
            ": " + yes_no(face) + ")\n" + cone_output(result.get(), "text");
  }
  if (o.format == "text") {
    std::cout << text;
  } else {
    std::cout << pretty(nlohmann::ordered_json{{"results", results}, {"all_faces", ok}}) << "\n";
  }
  return ok ? kExitPass : kExitCheckFailed;
}

int cmd_hull(const Options& o) {
  auto c = load_polytope(o.a, !o.lenient);
  auto d = load_polytope(o.b, !o.lenient);
  char* s = nullptr;
  int passed = 0;
  check(ct_polytope_hull_report(c.get(), d.get(), 2, &s, &passed));
  const auto j = nlohmann::ordered_json::parse(take(s));
  if (o.format == "text") {
    std::cout << "tensor hull: " << j["hull"]["vertices"].size() << " vertices\n";
    for (const auto& v : j["hull"]["vertices"]) std::cout << "  " << v.dump() << "\n";
    for (const char* key : {"hull_slice", "extreme_points_preserved"})
      if (j.contains(key)) std::cout << key << " " << (j[key].get<bool>() ? "pass" : "FAIL") << "\n";
    if (j.contains("non_extreme_vertex_tensors")) {
      std::cout << "vertex tensors that are not extreme: " << j["non_extreme_vertex_tensors"].dump() << "\n";
    }
  } else {
    std::cout << pretty(j) << "\n";
  }
  return passed ? kExitPass : kExitCheckFailed;
}

int cmd_rank1(const Options& o) {
  auto e = load_cone(o.a, !o.lenient);
  auto f = load_cone(o.b, !o.lenient);
  char* s = nullptr;
  int member = 0;
  check(ct_rank1(e.get(), f.get(), vector_json(o.x).c_str(), vector_json(o.y).c_str(), tensor_kind(o.kind), &s,
                 &member));
  const auto j = nlohmann::ordered_json::parse(take(s));
  if (o.format == "text") {
    std::cout << "x⊗y " << (member ? "in " : "not in ") << o.kind << "(A,B)"
              << (member ? " by clause " + j["clause"].get<std::string>() : std::string()) << "\n";
  } else {
    std::cout << pretty(j) << "\n";
  }
  return kExitPass;
}

int cmd_verify(const Options& o) {
  char* s = nullptr;
  int passed = 0;
  check(ct_verify(o.suite.c_str(), o.format == "json" ? CT_FORMAT_JSON : CT_FORMAT_TEXT, &s, &passed));
  std::cout << take(s);
  return passed ? kExitPass : kExitCheckFailed;
}

int cmd_corpus(const Options& o) {
  char* s = nullptr;
  check(ct_corpus_json(&s));
  const auto j = nlohmann::ordered_json::parse(take(s));
  if (o.format == "text") {
    std::cout << "cones (builtin:NAME)\n";
    for (const auto& c : j["cones"]) {
      std::cout << "  " << c["name"].get<std::string>() << "  dim " << c["dim"] << ", " << c["rays"] << " rays"
                << (c["proper"].get<bool>() ? ", proper" : "") << (c["generating"].get<bool>() ? ", generating" : "")
                << "\n";
    }
    std::cout << "polytopes (builtin:NAME)\n";
    for (const auto& p : j["polytopes"]) {
      std::cout << "  " << p["name"].get<std::string>() << "  dim " << p["dim"] << ", " << p["vertices"]
                << " vertices" << (p["symmetric"].get<bool>() ? ", symmetric" : "") << "\n";
    }
    std::cout << "suites\n";
    for (const auto& n : j["suites"]) std::cout << "  " << n.get<std::string>() << "\n";
  } else {
    std::cout << pretty(j) << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tensor products of polyhedral cones"};
  app.require_subcommand(1);
  Options o;

  const std::string input_help = "JSON file, '-' for stdin, or builtin:NAME";
  auto common = [&](CLI::App* sub, const std::string& default_format) {
    sub->add_option("--format", o.format, "Output format: json or text (default " + default_format + ")")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--lenient", o.lenient, "Ignore unknown fields in input documents");
  };

  std::function<int(const Options&)> handler;
  auto bind = [&](CLI::App* sub, int (*fn)(const Options&)) { sub->callback([&handler, fn] { handler = fn; }); };

  auto* dual = app.add_subcommand("dual", "Dual cone");
  dual->add_option("A", o.a, input_help)->required();
  bind(dual, cmd_dual);

  auto* tensor = app.add_subcommand("tensor", "Projective (min) or injective (max) tensor cone");
  tensor->add_option("--kind", o.kind, "min or max")->check(CLI::IsMember({"min", "max"}))->required();
  tensor->add_option("A", o.a, input_help)->required();
  tensor->add_option("B", o.b, input_help)->required();
  bind(tensor, cmd_tensor);

  auto* rays = app.add_subcommand("rays", "Extremal rays");
  rays->add_option("A", o.a, input_help)->required();
  bind(rays, cmd_rays);

  auto* lin = app.add_subcommand("lineality", "Lineality space");
  lin->add_option("A", o.a, input_help)->required();
  bind(lin, cmd_lineality);

  auto* chk = app.add_subcommand("check", "Proper and generating flags");
  chk->add_option("A", o.a, input_help)->required();
  bind(chk, cmd_check);

  auto* faces = app.add_subcommand("face-ops", "orface/andface/scor/scand of faces given by ray indices");
  faces->add_option("--op", o.op, "Operation")
      ->check(CLI::IsMember({"all", "orface", "andface", "scor", "scand"}))
      ->capture_default_str();
  faces->add_option("--m", o.m, "Ray indices of the face of E (comma separated)")->delimiter(',');
  faces->add_option("--n", o.n, "Ray indices of the face of F (comma separated)")->delimiter(',');
  faces->add_option("E", o.a, input_help)->required();
  faces->add_option("F", o.b, input_help)->required();
  bind(faces, cmd_face_ops);

  auto* hull = app.add_subcommand("hull", "Tensor hull of two polytopes with the applicable checks");
  hull->add_option("C", o.a, input_help)->required();
  hull->add_option("D", o.b, input_help)->required();
  bind(hull, cmd_hull);

  auto* r1 = app.add_subcommand("rank1", "Rank-one membership of x⊗y");
  r1->add_option("--kind", o.kind, "min or max")->check(CLI::IsMember({"min", "max"}))->capture_default_str();
  r1->add_option("A", o.a, input_help)->required();
  r1->add_option("B", o.b, input_help)->required();
  r1->add_option("x", o.x, "Vector in A's space, e.g. 1,0,1 or [1,\"1/2\",0]")->required();
  r1->add_option("y", o.y, "Vector in B's space")->required();
  bind(r1, cmd_rank1);

  auto* verify = app.add_subcommand("verify", "Run verification suites on the bundled corpus");
  verify->add_option("--suite", o.suite, "Suite name or 'all'")->capture_default_str();
  bind(verify, cmd_verify);

  auto* corpus = app.add_subcommand("corpus", "List bundled cones, polytopes and suites");
  bind(corpus, cmd_corpus);

  for (auto* sub : {dual, tensor, rays, lin, chk, faces, hull, r1, corpus}) common(sub, "json");
  common(verify, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (o.format.empty()) o.format = verify->parsed() ? "text" : "json";
  try {
    return handler(o);
  } catch (const ApiError& e) {
    std::cerr << "conecli: " << e.what() << "\n";
    return e.status == CT_ERR_DD_LIMIT ? kExitDdLimit : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "conecli: " << e.what() << "\n";
    return kExitUsage;
  }
}

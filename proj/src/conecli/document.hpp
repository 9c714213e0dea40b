#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bodies/bodies.hpp"
#include "cone/cone.hpp"

namespace conetensor {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

using Json = nlohmann::ordered_json;

/// An integer, or a string "p/q" / "p".
Rational parse_rational(const Json& j);
Vector parse_vector(const Json& j, std::size_t dim);
/// Integers when they fit in 64 bits, strings otherwise.
Json emit_rational(const Rational& q);
Json emit_vector(const Vector& v);
Json emit_vectors(const std::vector<Vector>& vs);

struct ConeDocument {
  std::optional<std::string> name;
  ConeRepInput input;
};

/// Strict mode rejects fields outside the cone document format.
ConeDocument parse_cone_document(const Json& j, bool strict = true);
ConeDocument parse_cone_document(const std::string& text, bool strict = true);
Cone parse_cone(const std::string& text, bool strict = true);

/// Canonical document: format_version, dim, rays, lineality, inequalities, equations, then name if given.
Json emit_cone(const Cone& c, const std::optional<std::string>& name = std::nullopt);
std::string cone_text(const Cone& c);

Polytope parse_polytope(const Json& j, bool strict = true);
Polytope parse_polytope(const std::string& text, bool strict = true);
Json emit_polytope(const Polytope& p);

/// Indented JSON that keeps arrays of scalars (vectors) on one line.
std::string pretty(const Json& j, int indent = 2);

}  // namespace conetensor

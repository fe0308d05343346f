#pragma once

// JSON documents: {"kind", "version", "payload"}. Scalars are "p/q"
// strings, matrices nested row arrays whose shape comes from context.
// Output has sorted keys and two-space indentation, so writing a parsed
// document reproduces it byte for byte. Malformed input throws ParseError.

#include <string>

#include "gl2/nerve.hpp"
#include "gl2/ruth.hpp"
#include "gl2/twocat.hpp"
#include "json.hpp"

namespace gl2 {

using Json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

struct Document {
  std::string kind;
  Json payload;
};

Document parse_document(const std::string& text);
std::string render_document(const std::string& kind, const Json& payload);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

Json groupoid_to_json(const FinGroupoid& g);
FinGroupoid groupoid_from_json(const Json& j);
Json bundle_to_json(const GradedBundle& v);
GradedBundle bundle_from_json(const Json& j);
Json ruth_to_json(const Ruth2& r);
Ruth2 ruth_from_json(const Json& j);
Json functor_to_json(const PseudoFunctorGL& p);
PseudoFunctorGL functor_from_json(const Json& j);
Json pseudo_rep_to_json(const PseudoRep& p);
PseudoRep pseudo_rep_from_json(const Json& j);
Json morphism_to_json(const RuthMorphism& m);
RuthMorphism morphism_from_json(const Json& j);
Json transformation_to_json(const LaxEquivalenceGL& e);
LaxEquivalenceGL transformation_from_json(const Json& j);

/// A 2-category; `groupoid` asks verification to include the 2-groupoid laws.
struct TwoCategoryDoc {
  Fin2Cat cat;
  bool groupoid = false;

  friend bool operator==(const TwoCategoryDoc&, const TwoCategoryDoc&) = default;
};
Json twocat_to_json(const TwoCategoryDoc& c);
TwoCategoryDoc twocat_from_json(const Json& j);

/// Simplex and horn payloads share a layout selected by "handle": "gl" or
/// "table"; table payloads carry their 2-category under "category". Horns
/// add "k". GL 2-cells store only R; their endpoints are read off the edges.
Json gl_simplex_to_json(const Simplex<GLHandle>& s);
Simplex<GLHandle> gl_simplex_from_json(const Json& j);
Json table_simplex_to_json(const Fin2Cat& c, const Simplex<TableHandle>& s);
Simplex<TableHandle> table_simplex_from_json(const Json& j, const Fin2Cat& c);

}  // namespace gl2

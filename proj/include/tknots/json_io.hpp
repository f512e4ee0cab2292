#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "tknots/cocycles.hpp"
#include "tknots/diagrams.hpp"

namespace tknots {

using Json = nlohmann::json;

/// Parses text; syntax errors become InputError(kMalformedInput).
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
/// Sorted keys, two-space indent, trailing newline.
std::string canonical(const Json& j);

/// Raw tables as they appear in a file, before any axiom checking.
struct RawStructure {
  std::string kind;                // biquandle, shadow or tribracket after constructor expansion
  IntTable under, over, action;    // action empty for a bare biquandle
  CubeTable cube;                  // tribrackets only
  std::vector<std::string> labels;
};

/// Expands the constructor kinds (dihedral, alexander, dihedral_tribracket,
/// alexander_tribracket) into tables; shapes are checked, axioms are not.
RawStructure raw_structure(const Json& j);

/// Validated shadow biquandle with strong connectivity built. Accepts kinds
/// shadow, dihedral and alexander.
ShadowBiquandle shadow_from_json(const Json& j);
/// Accepts tribracket kinds directly; shadow kinds go through the corresponding tribracket.
HorizontalTribracket tribracket_from_json(const Json& j);

Json to_json(const AxiomReport& r);
Json to_json(const ShadowBiquandle& sb);
Json to_json(const HorizontalTribracket& t);
Json to_json(const HomologyGroup& h);
Json to_json(const IntMatrix& m);
Json to_json(const SBColoring& c);
Json to_json(const LBColoring& c);
Json to_json(const InvariantResult& r);

Diagram diagram_from_json(const Json& j);
Json to_json(const PDCode& pd);
Json to_json(const SurfaceCode& sc);

/// {"theory", "mod", "degree", "values": [[tuple, value], ...]} listing the
/// nonzero entries in tuple order.
Json to_json(const CochainTable& c);
/// Sparse [[tuple, value], ...] or dense flat "values"; the theory and sizes
/// come from the target chain theory. Values are reduced mod m.
CochainTable cochain_from_json(const Json& j, const ChainTheory& theory);

}  // namespace tknots

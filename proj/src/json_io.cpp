#include "tknots/json_io.hpp"

#include <fstream>
#include <sstream>

#include "tknots/checked.hpp"

namespace tknots {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

std::string kind_of(const Json& j) { return get<std::string>(j, "kind"); }

void check_size(const Json& j, int actual, const std::string& what) {
  if (!j.contains("size")) return;
  const int declared = get<int>(j, "size");
  if (declared != actual)
    throw InputError(what + ": declared size " + std::to_string(declared) + " but tables have " +
                         std::to_string(actual) + " rows",
                     ErrorCode::kSizeMismatch);
}

std::vector<int64_t> poly(const Json& j) { return get<std::vector<int64_t>>(j, "p"); }

RawStructure raw_from_shadow(const ShadowBiquandle& sb) {
  RawStructure r;
  r.kind = "shadow";
  r.under = sb.biquandle().under_table().to_rows();
  r.over = sb.biquandle().over_table().to_rows();
  r.action = sb.bset().action_table().to_rows();
  r.labels = sb.labels();
  return r;
}

RawStructure raw_from_tribracket(const HorizontalTribracket& t) {
  RawStructure r;
  r.kind = "tribracket";
  r.cube = t.to_cube();
  r.labels = t.labels();
  return r;
}

template <class F>
auto wrap(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

RawStructure raw_structure(const Json& j) {
  return wrap([&] {
    const std::string kind = kind_of(j);
    if (kind == "dihedral") return raw_from_shadow(dihedral(get<int>(j, "n")));
    if (kind == "alexander") return raw_from_shadow(alexander(get<int>(j, "n"), poly(j)));
    if (kind == "dihedral_tribracket") return raw_from_tribracket(dihedral_tribracket(get<int>(j, "n")));
    if (kind == "alexander_tribracket")
      return raw_from_tribracket(alexander_tribracket(get<int>(j, "n"), poly(j)));
    RawStructure r;
    r.kind = kind;
    if (j.contains("labels")) r.labels = get<std::vector<std::string>>(j, "labels");
    if (kind == "biquandle") {
      r.under = get<IntTable>(j, "under");
      r.over = get<IntTable>(j, "over");
      check_size(j, static_cast<int>(r.under.size()), "biquandle");
      check_size(j, static_cast<int>(r.over.size()), "biquandle");
      return r;
    }
    if (kind == "shadow") {
      RawStructure b = raw_structure(field(j, "biquandle"));
      if (b.kind == "tribracket") throw InputError("shadow: 'biquandle' must describe a biquandle");
      r.under = std::move(b.under);
      r.over = std::move(b.over);
      r.action = get<IntTable>(j, "action");
      return r;
    }
    if (kind == "tribracket") {
      r.cube = get<CubeTable>(j, "table");
      check_size(j, static_cast<int>(r.cube.size()), "tribracket");
      return r;
    }
    throw InputError("unknown structure kind '" + kind + "'");
  });
}

ShadowBiquandle shadow_from_json(const Json& j) {
  return wrap([&] {
    const std::string kind = kind_of(j);
    if (kind == "dihedral") return dihedral(get<int>(j, "n"));
    if (kind == "alexander") return alexander(get<int>(j, "n"), poly(j));
    const RawStructure r = raw_structure(j);
    if (r.kind != "shadow")
      throw InputError("expected a shadow biquandle (kind shadow, dihedral or alexander), got '" + kind + "'");
    auto sb = build_strong_connectivity(
        ShadowBiquandle::create(FiniteBiquandle::from_tables(r.under, r.over), r.action));
    if (!r.labels.empty()) sb.set_labels(r.labels);
    return sb;
  });
}

HorizontalTribracket tribracket_from_json(const Json& j) {
  return wrap([&] {
    const std::string kind = kind_of(j);
    if (kind == "dihedral_tribracket") return dihedral_tribracket(get<int>(j, "n"));
    if (kind == "alexander_tribracket") return alexander_tribracket(get<int>(j, "n"), poly(j));
    if (kind == "tribracket") {
      const RawStructure r = raw_structure(j);
      auto t = HorizontalTribracket::from_table(r.cube);
      if (!r.labels.empty()) t.set_labels(r.labels);
      return t;
    }
    return corresponding_tribracket(shadow_from_json(j));
  });
}

Json to_json(const AxiomReport& r) {
  Json out{{"passed", r.passed()}};
  if (!r.passed()) {
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
    out["violations"] = v;
  }
  return out;
}

Json to_json(const ShadowBiquandle& sb) {
  Json out{{"kind", "shadow"},
           {"biquandle",
            {{"kind", "biquandle"},
             {"size", sb.biquandle_size()},
             {"under", sb.biquandle().under_table().to_rows()},
             {"over", sb.biquandle().over_table().to_rows()}}},
           {"action", sb.bset().action_table().to_rows()}};
  if (!sb.labels().empty()) out["labels"] = sb.labels();
  return out;
}

Json to_json(const HorizontalTribracket& t) {
  Json out{{"kind", "tribracket"}, {"size", t.size()}, {"table", t.to_cube()}};
  if (!t.labels().empty()) out["labels"] = t.labels();
  return out;
}

Json to_json(const HomologyGroup& h) {
  return {{"degree", h.degree},
          {"mod", h.modulus},
          {"free_rank", h.free_rank},
          {"torsion", h.torsion},
          {"group", to_string(h)}};
}

Json to_json(const IntMatrix& m) { return m.to_rows(); }

Json to_json(const SBColoring& c) { return {{"arcs", c.arcs}, {"regions", c.regions}}; }

Json to_json(const LBColoring& c) {
  Json arcs = Json::array();
  for (const auto& p : c.arcs) arcs.push_back({p.base, p.fiber});
  return {{"arcs", arcs}, {"regions", c.regions}};
}

Json to_json(const InvariantResult& r) {
  Json out{{"coloring_count", r.coloring_count}};
  if (r.modulus) {
    out["mod"] = r.modulus;
    Json phi = Json::array();
    for (auto [v, m] : r.phi) phi.push_back({v, m});
    out["phi"] = phi;
  }
  if (r.presentation) {
    Json classes = Json::array();
    for (const auto& [coords, m] : r.classes) classes.push_back({coords, m});
    out["homology"] = {{"presentation", to_json(*r.presentation)}, {"classes", classes}};
  }
  return out;
}

Diagram diagram_from_json(const Json& j) {
  return wrap([&]() -> Diagram {
    const std::string kind = kind_of(j);
    if (kind == "pd") return PDCode{get<std::vector<std::array<int, 4>>>(j, "crossings")};
    if (kind == "surface") {
      SurfaceCode sc;
      sc.sheets = get<int>(j, "sheets");
      sc.regions = get<int>(j, "regions");
      sc.double_curves = get<std::vector<std::array<int, 4>>>(j, "double_curves");
      sc.adjacency = get<std::vector<std::array<int, 3>>>(j, "adjacency");
      sc.triple_points = get<std::vector<std::array<int, 5>>>(j, "triple_points");
      sc.validate();
      return sc;
    }
    throw InputError("unknown diagram kind '" + kind + "' (expected pd or surface)");
  });
}

Json to_json(const PDCode& pd) { return {{"kind", "pd"}, {"crossings", pd.crossings}}; }

Json to_json(const SurfaceCode& sc) {
  return {{"kind", "surface"},          {"sheets", sc.sheets},         {"regions", sc.regions},
          {"double_curves", sc.double_curves}, {"adjacency", sc.adjacency}, {"triple_points", sc.triple_points}};
}

Json to_json(const CochainTable& c) {
  Json values = Json::array();
  for (int64_t i = 0; i < static_cast<int64_t>(c.values.size()); ++i)
    if (c.values[i]) values.push_back({c.tuple_of(i), c.values[i]});
  return {{"theory", theory_name(c.theory)}, {"mod", c.modulus}, {"degree", c.degree}, {"values", values}};
}

CochainTable cochain_from_json(const Json& j, const ChainTheory& theory) {
  return wrap([&] {
    if (j.contains("theory") && parse_theory(get<std::string>(j, "theory")) != theory.theory())
      throw InputError("cochain theory does not match the structure", ErrorCode::kSizeMismatch);
    const auto m = get<int64_t>(j, "mod");
    const int degree = get<int>(j, "degree");
    if (degree < 1 || degree >= theory.cap()) throw InputError("cochain degree out of range");
    auto c = CochainTable::zero(theory.theory(), degree, m, theory.base_size(), theory.letter_size());
    const Json& values = field(j, "values");
    if (!values.is_array()) throw InputError("cochain values must be an array");
    const bool dense = !values.empty() && values[0].is_number();
    if (dense) {
      if (values.size() != c.values.size())
        throw InputError("dense cochain has " + std::to_string(values.size()) + " values, expected " +
                             std::to_string(c.values.size()),
                         ErrorCode::kSizeMismatch);
      for (size_t i = 0; i < values.size(); ++i) c.values[i] = checked::mod(values[i].get<int64_t>(), m);
      return c;
    }
    for (const auto& entry : values) {
      if (!entry.is_array() || entry.size() != 2) throw InputError("cochain entries must be [tuple, value]");
      const auto tuple = entry[0].get<std::vector<int>>();
      if (static_cast<int>(tuple.size()) != c.arity())
        throw InputError("cochain tuple has arity " + std::to_string(tuple.size()) + ", expected " +
                             std::to_string(c.arity()),
                         ErrorCode::kSizeMismatch);
      for (size_t k = 0; k < tuple.size(); ++k) {
        const int radix = k == 0 ? c.base_size : c.letter_size;
        if (tuple[k] < 0 || tuple[k] >= radix)
          throw InputError("cochain tuple entry out of range", ErrorCode::kSizeMismatch);
      }
      c.at(tuple) = checked::mod(entry[1].get<int64_t>(), m);
    }
    return c;
  });
}

}  // namespace tknots

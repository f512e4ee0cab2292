#include "tknots/commands.hpp"

#include "tknots/pipeline.hpp"
#include "tknots/verify.hpp"

namespace tknots {

namespace {

// Input-shaped errors exit with 2, broken internal guarantees with 1.
int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::kOverflow:
    case ErrorCode::kInternal: return 1;
    default: return 2;
  }
}

Json structure_of(const RunConfig& o) { return o.structure ? *o.structure : read_json_file(o.structure_path); }

Theory chain_theory_arg(const std::string& s) {
  const Theory t = parse_theory(s);
  if (t == Theory::N) throw InputError("this command takes --theory sb or lb");
  return t;
}

ChainTheory make_theory(const Json& structure, Theory t, int cap, int jobs) {
  if (t == Theory::SB) return ChainTheory::shadow(shadow_from_json(structure), cap, jobs);
  return ChainTheory::local(tribracket_from_json(structure), cap, jobs);
}

// mochizuki:<n> or a cochain file; the LB side gets theta o eta.
std::optional<CochainTable> load_cocycle(const std::string& spec, const ChainTheory& theory, int degree,
                                         const ShadowBiquandle* sb) {
  if (spec.empty()) return std::nullopt;
  if (spec.rfind("mochizuki:", 0) == 0) {
    const int n = parse_mochizuki_spec(spec);
    CochainTable th = degree == 2 ? mochizuki_2cocycle(n) : mochizuki_3cocycle(n);
    if (th.base_size != theory.base_size() || th.letter_size != theory.letter_size())
      throw InputError(spec + " does not fit a structure of this size", ErrorCode::kSizeMismatch);
    if (theory.theory() == Theory::LB) {
      if (!sb) throw InputError("mochizuki cocycles on the lb side need a shadow biquandle structure");
      th = transport_mu(th, *sb);
    }
    return th;
  }
  return cochain_from_json(read_json_file(spec), theory);
}

Json cmd_check(const RunConfig& o) {
  const RawStructure r = raw_structure(structure_of(o));
  AxiomReport report;
  if (r.kind == "tribracket") return to_json(check_tribracket(r.cube));
  report = check_biquandle(r.under, r.over);
  if (!report.passed() || r.kind == "biquandle") return to_json(report);
  const auto bq = FiniteBiquandle::from_tables(r.under, r.over);
  report.append(check_bset(bq, r.action));
  if (!report.passed()) return to_json(report);
  const auto sb = build_strong_connectivity(ShadowBiquandle::create(bq, r.action));
  report.append(check_inverse_identities(sb));
  if (sb.strongly_connected()) report.append(check_searrow_identities(sb));
  return to_json(report);
}

Json cmd_derive(const RunConfig& o) {
  const auto sb = shadow_from_json(structure_of(o));
  if (!sb.strongly_connected()) throw ContractError("the B-set is not strongly connected");
  const auto t = corresponding_tribracket(sb);
  Json out = to_json(t);
  out["passed"] = check_tribracket(t.to_cube()).passed();
  return out;
}

Json cmd_homology(const RunConfig& o) {
  const Theory t = chain_theory_arg(o.theory);
  const auto theory = make_theory(structure_of(o), t, o.degree + 1, o.jobs);
  Json out = to_json(homology(theory, o.degree, o.modulus));
  out["theory"] = theory_name(t);
  return out;
}

Json cmd_cocycles(const RunConfig& o) {
  const Theory t = chain_theory_arg(o.theory);
  if (o.modulus < 2) throw InputError("cocycles needs --mod m with m >= 2");
  const auto theory = make_theory(structure_of(o), t, o.degree + 1, o.jobs);
  Json basis = Json::array();
  for (const auto& c : cocycle_basis(theory, o.degree, o.modulus)) basis.push_back(to_json(c));
  return {{"theory", theory_name(t)}, {"degree", o.degree}, {"mod", o.modulus}, {"count", basis.size()},
          {"basis", basis}};
}

Json cmd_mochizuki(const RunConfig& o) {
  const Theory t = parse_theory(o.form);
  if (t == Theory::SB) {
    if (o.degree == 2) return to_json(mochizuki_2cocycle(o.n));
    if (o.degree == 3) return to_json(mochizuki_3cocycle(o.n));
    throw InputError("sb Mochizuki cocycles have degree 2 or 3");
  }
  if (t == Theory::LB) {
    if (!o.transported) return to_json(closed_form_LB(o.n, o.degree));
    if (o.degree != 2 && o.degree != 3) throw InputError("lb forms have degree 2 or 3");
    const auto th = o.degree == 2 ? mochizuki_2cocycle(o.n) : mochizuki_3cocycle(o.n);
    return to_json(transport_mu(th, dihedral(o.n)));
  }
  return to_json(closed_form_N(o.n, o.degree));
}

struct Loaded {
  Diagram diagram;
  Json structure;
  int degree;
};

Loaded load_pair(const RunConfig& o) {
  Loaded l{diagram_from_json(o.diagram ? *o.diagram : read_json_file(o.diagram_path)), structure_of(o), 0};
  l.degree = diagram_degree(l.diagram);
  return l;
}

Json cmd_colorings(const RunConfig& o, bool with_invariants) {
  const Theory t = chain_theory_arg(o.theory);
  const Loaded l = load_pair(o);
  const auto sb = shadow_from_json(l.structure);
  const auto theory = t == Theory::SB ? ChainTheory::shadow(sb, l.degree + 1, o.jobs)
                                      : ChainTheory::local(corresponding_tribracket(sb), l.degree + 1, o.jobs);
  const ColoringRun run = run_colorings(l.diagram, sb, theory, o.jobs);
  if (!with_invariants) {
    Json cols = Json::array();
    for (const auto& c : run.sb) cols.push_back(to_json(c));
    for (const auto& c : run.lb) cols.push_back(to_json(c));
    return {{"theory", theory_name(t)}, {"coloring_count", run.size()}, {"colorings", cols}};
  }
  const auto theta = o.cocycle_json ? std::optional(cochain_from_json(*o.cocycle_json, theory))
                                     : load_cocycle(o.cocycle, theory, l.degree, &sb);
  bool cycles = true;
  for (const auto& w : run.chains) cycles = cycles && theory.boundary(w).is_zero();
  const bool classes = o.classes && cycles;
  Json out = to_json(invariants(run.chains, l.degree, theory, theta ? &*theta : nullptr, classes));
  out["theory"] = theory_name(t);
  out["w_cycles"] = cycles;
  return out;
}

Json cmd_compare(const RunConfig& o, bool& passed) {
  const Loaded l = load_pair(o);
  const auto sb = shadow_from_json(l.structure);
  std::optional<CochainTable> theta;
  if (!o.cocycle.empty() || o.cocycle_json) {
    const auto sbt = ChainTheory::shadow(sb, l.degree + 1, o.jobs);
    theta = o.cocycle_json ? cochain_from_json(*o.cocycle_json, sbt) : *load_cocycle(o.cocycle, sbt, l.degree, &sb);
  }
  const Comparison c = compare_pipelines(l.diagram, sb, theta, o.jobs);
  passed = c.passed();
  Json out{{"sb", to_json(c.sb)},
           {"lb", to_json(c.lb)},
           {"count_equal", c.count_equal},
           {"t_bijective", c.t_bijective},
           {"w_mu_equal", c.w_mu_equal},
           {"passed", passed}};
  if (c.w_closed) out["w_closed"] = *c.w_closed;
  if (c.phi_equal) out["phi_equal"] = *c.phi_equal;
  return out;
}

Json cmd_verify(const RunConfig& o, bool& passed) {
  Json checks = Json::array();
  passed = true;
  for (const auto& r : run_battery(o.jobs)) {
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    passed = passed && r.passed;
  }
  return {{"checks", checks}, {"passed", passed}};
}

}  // namespace

Report execute(const RunConfig& o) {
  auto fail = [](const std::string& code, const std::string& message, int status) {
    return Report{{{"error", {{"code", code}, {"message", message}}}}, status};
  };
  try {
    bool passed = true;
    Json out;
    const std::string& s = o.subcommand;
    if (s == "check") {
      out = cmd_check(o);
      passed = out["passed"];
    } else if (s == "derive-tribracket") {
      out = cmd_derive(o);
      passed = out["passed"];
    } else if (s == "homology") {
      out = cmd_homology(o);
    } else if (s == "cocycles") {
      out = cmd_cocycles(o);
    } else if (s == "mochizuki") {
      out = cmd_mochizuki(o);
    } else if (s == "colorings") {
      out = cmd_colorings(o, false);
    } else if (s == "invariant") {
      out = cmd_colorings(o, true);
    } else if (s == "compare") {
      out = cmd_compare(o, passed);
    } else if (s == "verify") {
      out = cmd_verify(o, passed);
    } else {
      return fail("bad_arguments", "unknown subcommand '" + s + "'", 2);
    }
    return {out, passed ? 0 : 1};
  } catch (const Error& e) {
    return fail(error_code_name(e.code()), e.what(), exit_code_for(e.code()));
  } catch (const std::exception& e) {
    return fail("internal_error", e.what(), 1);
  }
}

}  // namespace tknots

#include "tknots/verify.hpp"

#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "tknots/pipeline.hpp"

namespace tknots {

namespace {

// Collects failures; the first few messages end up in the detail line.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    if (failures_.size() < 4) failures_.push_back(what);
    ++failed_;
  }
  void note(const std::string& s) { notes_.push_back(s); }

  CheckResult result(std::string name) const {
    std::ostringstream os;
    if (failed_) {
      os << failed_ << " of " << total_ << " checks failed:";
      for (const auto& f : failures_) os << " [" << f << "]";
    } else {
      os << total_ << " checks";
      for (const auto& n : notes_) os << "; " << n;
    }
    return {std::move(name), failed_ == 0, os.str()};
  }

 private:
  int total_ = 0, failed_ = 0;
  std::vector<std::string> failures_, notes_;
};

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    return {name, false, std::string(error_code_name(e.code())) + ": " + e.what()};
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

struct Builtin {
  std::string name;
  std::function<ShadowBiquandle()> make;
};

std::vector<Builtin> builtins() {
  return {
      {"dihedral(3)", [] { return dihedral(3); }},
      {"dihedral(4)", [] { return dihedral(4); }},
      {"dihedral(5)", [] { return dihedral(5); }},
      {"dihedral(7)", [] { return dihedral(7); }},
      {"alexander(5,t-2)", [] { return alexander(5, {-2, 1}); }},
      {"alexander(5,t-3)", [] { return alexander(5, {-3, 1}); }},
      {"alexander(2,t^2+t+1)", [] { return alexander(2, {1, 1, 1}); }},
  };
}

std::string show(const std::map<int64_t, int64_t>& phi) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto [v, m] : phi) {
    os << (first ? "" : ", ") << v << ":" << m;
    first = false;
  }
  os << "}";
  return os.str();
}

const PDCode kTrefoil{{{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}};
const PDCode kTrefoilKink{{{1, 4, 2, 5}, {3, 8, 4, 1}, {5, 2, 6, 3}, {6, 7, 7, 8}}};
const PDCode kTrefoilR2{{{3, 8, 4, 9}, {7, 10, 8, 1}, {9, 4, 10, 5}, {6, 2, 7, 1}, {5, 2, 6, 3}}};
const PDCode kFigureEight{{{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}};

// Frozen from tests/oracles/brute_force_colorings.py (exhaustive, no pruning).
const std::map<int64_t, int64_t> kTrefoilPhi{{0, 9}, {1, 18}};
const std::map<int64_t, int64_t> kFigureEightPhi5{{0, 25}, {2, 50}, {3, 50}};

}  // namespace

CheckResult check_axiom_battery() {
  const std::string name = "axioms";
  return guarded(name, [&] {
    Tally t;
    for (const auto& b : builtins()) {
      const auto sb = b.make();
      const auto& bq = sb.biquandle();
      t.expect(check_biquandle(bq.under_table().to_rows(), bq.over_table().to_rows()).passed(), b.name + " biquandle");
      t.expect(check_bset(bq, sb.bset().action_table().to_rows()).passed(), b.name + " B-set");
    }
    // every single-entry mutation of the dihedral(3) under table breaks a bijectivity axiom
    const auto d3 = dihedral(3).biquandle();
    const auto under = d3.under_table().to_rows(), over = d3.over_table().to_rows();
    int mutations = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int v = 0; v < 3; ++v) {
          if (v == under[a][b]) continue;
          auto bad = under;
          bad[a][b] = v;
          const auto r = check_biquandle(bad, over);
          t.expect(r.has("under-bijective") || r.has("S-bijective"), "mutation not caught as bijectivity");
          bool threw = false;
          try {
            FiniteBiquandle::from_tables(bad, over);
          } catch (const AxiomError&) {
            threw = true;
          }
          t.expect(threw, "mutated table accepted");
          ++mutations;
        }
    t.note(std::to_string(mutations) + " mutations rejected");
    return t.result(name);
  });
}

CheckResult check_lemma_identities() {
  const std::string name = "lemma-identities";
  return guarded(name, [&] {
    Tally t;
    int instances = 0;
    for (const auto& b : builtins()) {
      const auto sb = b.make();
      // latin quandles are strongly connected over themselves
      const auto& bq = sb.biquandle();
      bool latin = bq.is_quandle();
      for (int a = 0; a < bq.size() && latin; ++a) {
        std::set<int> row;
        for (int c = 0; c < bq.size(); ++c) row.insert(bq.under(a, c));
        latin = static_cast<int>(row.size()) == bq.size();
      }
      if (latin) t.expect(sb.strongly_connected(), b.name + " latin but not strongly connected");
      if (!sb.strongly_connected() || sb.bset_size() > 7) continue;
      ++instances;
      t.expect(check_inverse_identities(sb).passed(), b.name + " inverse identities");
      t.expect(check_searrow_identities(sb).passed(), b.name + " searrow identities");
    }
    t.note(std::to_string(instances) + " strongly connected instances");
    return t.result(name);
  });
}

CheckResult check_corresponding_tribrackets() {
  const std::string name = "corresponding-tribracket";
  return guarded(name, [&] {
    Tally t;
    for (const auto& b : builtins()) {
      const auto sb = b.make();
      if (!sb.strongly_connected()) continue;
      // both defining expressions are compared inside; disagreement throws
      const auto tri = corresponding_tribracket(sb);
      t.expect(check_tribracket(tri.to_cube()).passed(), b.name + " H1/H2");
    }
    for (int n : {3, 5}) {
      const auto tri = corresponding_tribracket(dihedral(n));
      bool ok = true;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) ok = ok && tri(x, y, z) == ((x - y + z) % n + n) % n;
      t.expect(ok, "dihedral(" + std::to_string(n) + ") is not x-y+z");
    }
    const auto tri = corresponding_tribracket(alexander(5, {-2, 1}));
    bool ok = true;
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        for (int z = 0; z < 5; ++z) ok = ok && tri(x, y, z) == ((-2 * x + 2 * y + z) % 5 + 5) % 5;
    t.expect(ok, "alexander(5,t-2) is not -2x+2y+z");
    return t.result(name);
  });
}

CheckResult check_chain_maps() {
  const std::string name = "chain-maps";
  return guarded(name, [&] {
    Tally t;
    int64_t gens = 0;
    for (const auto& sb : {dihedral(3), alexander(5, {-2, 1})}) {
      const auto sbt = ChainTheory::shadow(sb, 4);
      const auto lbt = ChainTheory::local(corresponding_tribracket(sb), 4);
      for (int n = 1; n <= 4; ++n) {
        for (int64_t i = 0; i < sbt.basis_size(n); ++i) {
          const Generator g = sbt.generator(n, i);
          const Generator m = mu(sb, g);
          t.expect(eta(sb, m) == g, "eta(mu(g)) != g");
          if (n >= 2) {  // the boundary of degree 1 is zero
            t.expect(mu(sbt, lbt, sbt.boundary(g)) == lbt.boundary(m), "mu does not commute with the boundary");
            t.expect(sbt.boundary(sbt.boundary(g)).is_zero(), "SB boundary squares to nonzero");
          }
          ++gens;
        }
        for (int64_t i = 0; i < lbt.basis_size(n); ++i) {
          const Generator h = lbt.generator(n, i);
          t.expect(mu(sb, eta(sb, h)) == h, "mu(eta(h)) != h");
          if (n >= 2) t.expect(lbt.boundary(lbt.boundary(h)).is_zero(), "LB boundary squares to nonzero");
        }
      }
    }
    t.note(std::to_string(gens) + " SB generators up to degree 4");
    return t.result(name);
  });
}

CheckResult check_homology_agreement(int jobs) {
  const std::string name = "homology-agreement";
  return guarded(name, [&] {
    Tally t;
    for (int n : {3, 5}) {
      const auto sb = dihedral(n);
      const auto sbt = ChainTheory::shadow(sb, 4, jobs);
      const auto lbt = ChainTheory::local(corresponding_tribracket(sb), 4, jobs);
      for (int64_t m : {int64_t{0}, int64_t{n}}) {
        std::ostringstream row;
        row << "d" << n << (m ? " Z_" + std::to_string(m) : " Z") << ":";
        for (int k = 1; k <= 3; ++k) {
          const auto a = homology(sbt, k, m), b = homology(lbt, k, m);
          t.expect(a.free_rank == b.free_rank && a.torsion == b.torsion,
                   "H" + std::to_string(k) + " differs for dihedral(" + std::to_string(n) + ")");
          row << " " << to_string(a);
        }
        t.note(row.str());
      }
    }
    return t.result(name);
  });
}

CheckResult check_mochizuki_family() {
  const std::string name = "mochizuki-cocycles";
  return guarded(name, [&] {
    Tally t;
    for (int n : {3, 5, 7}) {
      const auto sb = dihedral(n);
      const auto tri = corresponding_tribracket(sb);
      const auto sbt = ChainTheory::shadow(sb, 4);
      const auto lbt = ChainTheory::local(tri, 4);
      const std::string tag = "n=" + std::to_string(n);
      for (const auto& th : {mochizuki_2cocycle(n), mochizuki_3cocycle(n)}) {
        const std::string d = tag + " degree " + std::to_string(th.degree);
        t.expect(is_cocycle(sbt, th), d + " not a cocycle");
        bool degenerate_zero = true;
        for (int64_t f = 0; f < static_cast<int64_t>(th.values.size()); ++f) {
          const auto tuple = th.tuple_of(f);
          const Generator g{tuple[0], {tuple.begin() + 1, tuple.end()}};
          if (g.degenerate()) degenerate_zero = degenerate_zero && th.values[f] == 0;
        }
        t.expect(degenerate_zero, d + " nonzero on a degenerate tuple");
        const auto moved = transport_mu(th, sb);
        bool round_trip = true;
        for (int64_t i = 0; i < sbt.basis_size(th.degree); ++i) {
          const Generator g = sbt.generator(th.degree, i);
          round_trip = round_trip && moved.at(mu(sb, g)) == th.at(g);
        }
        t.expect(round_trip, d + " transport round trip");
        t.expect(is_cocycle(lbt, moved), d + " transported form not a cocycle");
        t.expect(closed_form_LB(n, th.degree) == scaled(moved, 4), d + " rescaled form != 4 * transport");
      }
      t.expect(closed_form_N(n, 1) == compose_through_bracket(closed_form_LB(n, 2), tri), tag + " N form degree 1");
      t.expect(closed_form_N(n, 2) == compose_through_bracket(closed_form_LB(n, 3), tri), tag + " N form degree 2");
    }
    return t.result(name);
  });
}

CheckResult check_link_invariants(int jobs) {
  const std::string name = "link-invariants";
  return guarded(name, [&] {
    Tally t;
    struct Case {
      const char* label;
      const PDCode* pd;
      int n;
      int64_t count;
      std::optional<std::map<int64_t, int64_t>> phi;
    };
    const std::vector<Case> cases = {
        {"trefoil/d3", &kTrefoil, 3, 27, kTrefoilPhi},
        {"figure-eight/d5", &kFigureEight, 5, 125, kFigureEightPhi5},
        {"figure-eight/d3", &kFigureEight, 3, 9, std::map<int64_t, int64_t>{{0, 9}}},
    };
    for (const auto& c : cases) {
      const auto sb = dihedral(c.n);
      const auto th = mochizuki_2cocycle(c.n);
      const auto cmp = compare_pipelines(*c.pd, sb, th, jobs);
      const std::string l = c.label;
      t.expect(cmp.sb.coloring_count == c.count, l + " SB count " + std::to_string(cmp.sb.coloring_count));
      t.expect(cmp.lb.coloring_count == c.count, l + " LB count " + std::to_string(cmp.lb.coloring_count));
      t.expect(cmp.t_bijective, l + " T not bijective");
      t.expect(cmp.w_closed.value_or(false), l + " W not a cycle");
      t.expect(cmp.w_mu_equal, l + " W^LB != mu(W^SB)");
      t.expect(cmp.phi_equal.value_or(false), l + " Phi^SB != Phi^LB");
      if (c.phi) t.expect(cmp.sb.phi == *c.phi, l + " Phi " + show(cmp.sb.phi) + " differs from the oracle");
      // the exported rescaled form gives 4 * Phi
      const auto lbt = ChainTheory::local(corresponding_tribracket(sb), 3, jobs);
      const auto run = run_colorings(*c.pd, sb, lbt, jobs);
      const auto lb2 = closed_form_LB(c.n, 2);
      t.expect(invariants(run.chains, 2, lbt, &lb2, false).phi == scale_phi(cmp.sb.phi, 4, c.n),
               l + " rescaled Phi != 4 * Phi");
      t.note(l + " Phi " + show(cmp.sb.phi));
    }
    const auto tref = compare_pipelines(kTrefoil, dihedral(3), mochizuki_2cocycle(3), jobs);
    t.expect(tref.sb.phi.size() > 1, "trefoil Phi is identically zero");
    return t.result(name);
  });
}

CheckResult check_reidemeister_invariance(int jobs) {
  const std::string name = "reidemeister-invariance";
  return guarded(name, [&] {
    Tally t;
    const auto sb = dihedral(3);
    const auto th = mochizuki_2cocycle(3);
    for (const auto& [label, pd] : std::vector<std::pair<std::string, const PDCode*>>{
             {"standard", &kTrefoil}, {"R1 kink", &kTrefoilKink}, {"R2 pair", &kTrefoilR2}}) {
      const auto cmp = compare_pipelines(*pd, sb, th, jobs);
      t.expect(cmp.sb.coloring_count == 27 && cmp.lb.coloring_count == 27, label + " coloring count");
      t.expect(cmp.sb.phi == kTrefoilPhi && cmp.lb.phi == kTrefoilPhi, label + " Phi " + show(cmp.sb.phi));
      t.expect(cmp.passed(), label + " pipelines disagree");
    }
    t.note("trefoil, +kink, +R2: 27 colorings, Phi " + show(kTrefoilPhi));
    return t.result(name);
  });
}

CheckResult check_surface_chains(int jobs) {
  const std::string name = "surface-chains";
  return guarded(name, [&] {
    Tally t;
    const auto sb = dihedral(3);
    const auto th = mochizuki_3cocycle(3);
    for (const auto& [label, sc, count] : std::vector<std::tuple<std::string, SurfaceCode, int64_t>>{
             {"two triple points", synthetic_two_triple_points(), 2187}, {"sphere", sphere_code(), 9}}) {
      const auto cmp = compare_pipelines(sc, sb, th, jobs);
      t.expect(cmp.sb.coloring_count == count && cmp.lb.coloring_count == count,
               label + " count " + std::to_string(cmp.sb.coloring_count));
      t.expect(cmp.t_bijective, label + " T not bijective");
      t.expect(cmp.w_mu_equal, label + " W^LB(T(C)) != mu(W^SB(C))");
      t.expect(cmp.phi_equal.value_or(false), label + " Phi^SB != Phi^LB");
      t.note(label + " Phi " + show(cmp.sb.phi));
    }
    return t.result(name);
  });
}

CheckResult check_smith_forms(uint64_t seed, int count) {
  const std::string name = "smith-normal-form";
  return guarded(name, [&] {
    Tally t;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> rows(1, 8), cols(1, 10), entry(-9, 9);
    int wide = 0;  // transforms that only fit in arbitrary precision
    for (int k = 0; k < count; ++k) {
      IntMatrix m(rows(rng), cols(rng));
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
      const auto s = smith_normal_form_exact(m);
      const std::string tag = "matrix " + std::to_string(k);
      const BigMatrix bm(m);
      t.expect(s.U * bm * s.V == s.D, tag + " U M V != D");
      t.expect(s.U * s.U_inv == BigMatrix::identity(m.rows()) && s.V * s.V_inv == BigMatrix::identity(m.cols()),
               tag + " inverse transforms");
      const BigInt du = determinant(s.U), dv = determinant(s.V);
      t.expect((du == 1 || du == -1) && (dv == 1 || dv == -1), tag + " transform not unimodular");
      bool chain = static_cast<int>(s.diagonal.size()) == s.rank;
      for (int i = 0; i < std::min(m.rows(), m.cols()) && chain; ++i) {
        const BigInt& d = s.D(i, i);
        if (i < s.rank) {
          chain = d > 0 && d == s.diagonal[i];
          if (i > 0) chain = chain && d % s.D(i - 1, i - 1) == 0;
        } else {
          chain = d == 0;
        }
      }
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
          if (i != j) chain = chain && s.D(i, j) == 0;
      // the divisors must agree with the transform-free elimination
      const auto ed = elementary_divisors(m);
      std::vector<BigInt> nontrivial;
      for (const auto& d : s.diagonal)
        if (d > 1) nontrivial.push_back(d);
      chain = chain && ed.rank == s.rank && nontrivial.size() == ed.divisors.size();
      for (size_t i = 0; i < nontrivial.size() && chain; ++i) chain = nontrivial[i] == ed.divisors[i];
      BigInt biggest = std::max({s.U.max_abs(), s.V.max_abs(), s.U_inv.max_abs(), s.V_inv.max_abs()});
      if (biggest > std::numeric_limits<int64_t>::max()) ++wide;
      t.expect(chain, tag + " divisibility chain");
    }
    t.note(std::to_string(count) + " matrices, seed " + std::to_string(seed) + ", " + std::to_string(wide) +
           " with transform entries beyond int64");
    return t.result(name);
  });
}

std::vector<CheckResult> run_battery(int jobs) {
  return {check_axiom_battery(),       check_lemma_identities(),       check_corresponding_tribrackets(),
          check_chain_maps(),          check_homology_agreement(jobs), check_mochizuki_family(),
          check_link_invariants(jobs), check_reidemeister_invariance(jobs), check_surface_chains(jobs),
          check_smith_forms()};
}

}  // namespace tknots

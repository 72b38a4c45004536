#include "tdc/theorems.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tdc/canonical.hpp"
#include "tdc/coloring.hpp"
#include "tdc/errors.hpp"
#include "tdc/explorer.hpp"

namespace tdc {

// Closed forms -------------------------------------------------------------

int chi_dt_path_formula(int n) {
  if (n < 2) throw std::invalid_argument("path formula requires n >= 2");
  const int ceil_third = (n + 2) / 3;
  return n % 3 == 1 ? 2 * ceil_third - 1 : 2 * ceil_third;
}

int chi_dt_cycle_formula(int n) {
  if (n < 4) throw std::invalid_argument("cycle formula requires n >= 4");
  if (n == 4) return 2;
  const int r = n % 6;
  const int base = 4 * (n / 6) + r;
  return (r == 3 || r == 5) ? base - 1 : base;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::path:
      return "path";
    case Family::cycle:
      return "cycle";
    case Family::friendship:
      return "friendship";
    case Family::book:
      return "book";
    case Family::balanced_complete_bipartite:
      return "balanced_complete_bipartite";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::path, Family::cycle, Family::friendship, Family::book, Family::balanced_complete_bipartite}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

namespace {

void require_range(bool ok, std::string_view what, Family f, int n) {
  if (!ok) {
    throw std::invalid_argument(std::string(what) + " formula for " + std::string(to_string(f)) +
                                " undefined at n = " + std::to_string(n));
  }
}

}  // namespace

int stability_formula(Family family, int n) {
  switch (family) {
    case Family::path:
      require_range(n >= 4, "stability", family, n);
      return 1;
    case Family::cycle: {
      require_range(n >= 3, "stability", family, n);
      if (n == 3) return 1;
      const int r = n % 6;
      return (r == 0 || r == 3) ? 2 : 1;
    }
    case Family::friendship:
      require_range(n >= 2, "stability", family, n);
      return 1;
    case Family::book:
      require_range(n >= 3, "stability", family, n);
      return 1;
    case Family::balanced_complete_bipartite:
      require_range(n >= 1, "stability", family, n);
      return n;
  }
  throw std::invalid_argument("stability formula: unknown family");
}

int bondage_formula(Family family, int n) {
  switch (family) {
    case Family::path:
      require_range(n >= 3, "bondage", family, n);
      return 1;
    case Family::cycle:
      require_range(n >= 5, "bondage", family, n);
      return n % 6 == 4 ? 1 : 2;
    case Family::friendship:
      require_range(n >= 2, "bondage", family, n);
      return 1;
    case Family::book:
    case Family::balanced_complete_bipartite:
      break;
  }
  throw std::invalid_argument("no bondage formula for " + std::string(to_string(family)));
}

NamedGraph family_graph(Family family, int n) {
  std::string spec;
  switch (family) {
    case Family::path:
      spec = "path:" + std::to_string(n);
      break;
    case Family::cycle:
      spec = "cycle:" + std::to_string(n);
      break;
    case Family::friendship:
      spec = "friendship:" + std::to_string(n);
      break;
    case Family::book:
      spec = "book:" + std::to_string(n);
      break;
    case Family::balanced_complete_bipartite:
      spec = "complete_bipartite:" + std::to_string(n) + ":" + std::to_string(n);
      break;
  }
  return {spec, parse_graph_spec(spec)};
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::violated:
      return "violated";
    case Verdict::undefined_instance:
      return "undefined-instance";
    case Verdict::skipped_cap:
      return "skipped-cap";
  }
  return "?";
}

namespace {

std::string quote(const std::string& s) { return "'" + s + "'"; }

std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

struct Solved {
  enum Kind { value, undefined, capped } kind = undefined;
  int v = 0;
};

Solved solve(const Graph& g, const CheckContext& ctx) {
  if (g.empty() || has_isolated_vertex(g)) return {Solved::undefined, 0};
  if (g.order() > ctx.solver.max_order) return {Solved::capped, 0};
  const TdcResult r = tdc_number(g, ctx.solver);
  if (!r.exact()) return {Solved::capped, 0};
  return {Solved::value, *r.value};
}

ClaimVerdict row(std::string claim, std::string instance, std::string reproduce) {
  ClaimVerdict out;
  out.claim_id = std::move(claim);
  out.instance = std::move(instance);
  out.reproduce = std::move(reproduce);
  return out;
}

void judge(ClaimVerdict& out, bool ok) { out.verdict = ok ? Verdict::holds : Verdict::violated; }

std::string invariants_cmd(const std::string& spec) { return "tdc invariants --graph " + quote(spec); }

std::string perturb_cmd(const std::string& spec, PerturbationKind kind, DegenerateConvention c) {
  return "tdc perturb --graph " + quote(spec) + " --kind " + std::string(to_string(kind)) + " --convention " +
         std::string(to_string(c));
}

}  // namespace

ClaimVerdict check_path_formula(int n, const CheckContext& ctx) {
  const std::string spec = "path:" + std::to_string(n);
  ClaimVerdict out = row("path.tdc_formula", spec, invariants_cmd(spec));
  const int expected = chi_dt_path_formula(n);
  out.expected = std::to_string(expected);
  const Solved s = solve(path(n), ctx);
  if (s.kind == Solved::capped) {
    out.verdict = Verdict::skipped_cap;
    return out;
  }
  out.computed = std::to_string(s.v);
  judge(out, s.v == expected);
  return out;
}

ClaimVerdict check_cycle_formula(int n, const CheckContext& ctx) {
  const std::string spec = "cycle:" + std::to_string(n);
  ClaimVerdict out = row("cycle.tdc_formula", spec, invariants_cmd(spec));
  const int expected = n == 3 ? 3 : chi_dt_cycle_formula(n);
  if (n == 3) out.note = "C_3 = K_3";
  out.expected = std::to_string(expected);
  const Solved s = solve(cycle(n), ctx);
  if (s.kind == Solved::capped) {
    out.verdict = Verdict::skipped_cap;
    return out;
  }
  out.computed = std::to_string(s.v);
  judge(out, s.v == expected);
  return out;
}

ClaimVerdict check_oracle(const NamedGraph& g, const CheckContext& ctx) {
  ClaimVerdict out = row("solver.brute_force_agreement", g.spec, invariants_cmd(g.spec) + " --brute-force");
  if (g.graph.empty() || has_isolated_vertex(g.graph)) {
    out.verdict = Verdict::undefined_instance;
    return out;
  }
  if (g.graph.order() > kBruteForceMaxOrder) {
    out.verdict = Verdict::skipped_cap;
    return out;
  }
  const int oracle = tdc_brute_force(g.graph);
  out.expected = std::to_string(oracle);
  const Solved s = solve(g.graph, ctx);
  if (s.kind == Solved::capped) {
    out.verdict = Verdict::skipped_cap;
    return out;
  }
  out.computed = std::to_string(s.v);
  judge(out, s.v == oracle);
  return out;
}

ClaimVerdict check_henning(const NamedGraph& g, const CheckContext& ctx) {
  ClaimVerdict out = row("henning.sandwich", g.spec, invariants_cmd(g.spec));
  if (g.graph.empty() || has_isolated_vertex(g.graph)) {
    out.verdict = Verdict::undefined_instance;
    out.note = "isolated vertex";
    return out;
  }
  const Solved s = solve(g.graph, ctx);
  if (s.kind == Solved::capped) {
    out.verdict = Verdict::skipped_cap;
    return out;
  }
  const int gamma = total_domination_number(g.graph).value;
  const int chi = chromatic_number(g.graph).value;
  out.expected = "[" + std::to_string(gamma) + ", " + std::to_string(gamma + chi) + "]";
  out.computed = std::to_string(s.v);
  out.note = "gamma_t=" + std::to_string(gamma) + " chi=" + std::to_string(chi);
  judge(out, gamma <= s.v && s.v <= gamma + chi);
  return out;
}

std::vector<ClaimVerdict> check_ncorona(const NamedGraph& g1, const NamedGraph& g2, const CheckContext& ctx) {
  const std::string instance = "ncorona(" + g1.spec + ", " + g2.spec + ")";
  const std::string reproduce =
      "tdc build ncorona " + quote(g1.spec) + " " + quote(g2.spec) + " | tdc invariants --graph -";
  const std::vector<std::string> ids = {"ncorona.order_bound", "ncorona.tdc_plus_order_bound", "ncorona.tdc_sum_bound",
                                        "ncorona.tdc_plus_chi_upper", "ncorona.tdc_plus_chi_equality"};
  std::vector<ClaimVerdict> rows;
  for (const auto& id : ids) rows.push_back(row(id, instance, reproduce));

  auto all = [&](Verdict v, const std::string& note) {
    for (auto& r : rows) {
      r.verdict = v;
      r.note = note;
    }
    return rows;
  };
  if (!is_connected(g1.graph) || !is_connected(g2.graph)) return all(Verdict::undefined_instance, "operand not connected");
  const long order = static_cast<long>(g1.graph.order()) * (1 + g2.graph.order());
  if (order > ctx.solver.max_order) return all(Verdict::skipped_cap, "product order " + std::to_string(order));

  const Graph product = neighbourhood_corona(g1.graph, g2.graph);
  const Solved p = solve(product, ctx);
  if (p.kind == Solved::undefined) return all(Verdict::undefined_instance, "product has an isolated vertex");
  if (p.kind == Solved::capped) return all(Verdict::skipped_cap, "time budget");
  const Solved t1 = solve(g1.graph, ctx);
  const Solved t2 = solve(g2.graph, ctx);
  const int chi2 = chromatic_number(g2.graph).value;
  const int n1 = g1.graph.order();
  const int n2 = g2.graph.order();
  for (auto& r : rows) r.computed = std::to_string(p.v);

  auto bound = [&](ClaimVerdict& r, bool defined, int value, bool equality) {
    if (!defined) {
      r.verdict = Verdict::undefined_instance;
      r.note = "operand TDC-number undefined";
      return;
    }
    r.expected = (equality ? "== " : "<= ") + std::to_string(value);
    judge(r, equality ? p.v == value : p.v <= value);
  };
  const bool d1 = t1.kind == Solved::value;
  const bool d2 = t2.kind == Solved::value;
  bound(rows[0], true, n1 + n2, false);
  bound(rows[1], d1, t1.v + n2, false);
  bound(rows[2], d1 && d2, t1.v + t2.v, false);
  bound(rows[3], d1, t1.v + chi2, false);
  bound(rows[4], d1, t1.v + chi2, true);
  return rows;
}

std::vector<ClaimVerdict> check_ncorona_sharpness(const NamedGraph& g1, const NamedGraph& g2, const CheckContext& ctx) {
  std::vector<ClaimVerdict> bounds = check_ncorona(g1, g2, ctx);
  std::vector<ClaimVerdict> out;
  const std::vector<std::pair<std::string, std::size_t>> which = {
      {"ncorona.sharpness.order_bound", 0}, {"ncorona.sharpness.tdc_plus_order_bound", 1}, {"ncorona.sharpness.tdc_sum_bound", 2}};
  for (const auto& [id, idx] : which) {
    ClaimVerdict r = bounds[idx];
    r.claim_id = id;
    if (r.verdict == Verdict::holds || r.verdict == Verdict::violated) {
      const std::string bound = r.expected.substr(3);
      r.expected = "== " + bound;
      judge(r, r.computed == bound);
      r.note = r.verdict == Verdict::holds ? "tight" : "not tight";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ClaimVerdict> check_corollary_ncorona(int n, const CheckContext& ctx) {
  std::vector<ClaimVerdict> out;
  struct Case {
    std::string id;
    NamedGraph second;
    int expected;
  };
  std::vector<Case> cases;
  cases.push_back({"corollary.friendship_complete", {"complete:" + std::to_string(n), complete(n)}, n + 3});
  if (n >= 2) cases.push_back({"corollary.friendship_cycle", {"cycle:" + std::to_string(2 * n), cycle(2 * n)}, 5});
  const NamedGraph f{"friendship:" + std::to_string(n), friendship(n)};

  for (const Case& c : cases) {
    const std::string instance = "ncorona(" + f.spec + ", " + c.second.spec + ")";
    const std::string reproduce =
        "tdc build ncorona " + quote(f.spec) + " " + quote(c.second.spec) + " | tdc invariants --graph -";
    ClaimVerdict exact = row(c.id, instance, reproduce);
    ClaimVerdict bounds = row(c.id + ".bounds", instance, reproduce);
    exact.expected = "== " + std::to_string(c.expected);
    bounds.expected = "in [lower, upper]: " + std::to_string(c.expected);

    const long order = static_cast<long>(f.graph.order()) * (1 + c.second.graph.order());
    if (order > Graph::kMaxVertices) {
      exact.verdict = bounds.verdict = Verdict::skipped_cap;
      exact.note = bounds.note = "product order " + std::to_string(order);
    } else {
      const Graph product = neighbourhood_corona(f.graph, c.second.graph);
      const int lower = tdc_lower_bound(product);
      const int upper = tdc_upper_bound(product).value;
      bounds.computed = "[" + std::to_string(lower) + ", " + std::to_string(upper) + "]";
      judge(bounds, lower <= c.expected && c.expected <= upper);
      const Solved s = solve(product, ctx);
      if (s.kind == Solved::capped) {
        exact.verdict = Verdict::skipped_cap;
        exact.note = "product order " + std::to_string(order) + " beyond cap or time budget";
      } else {
        exact.computed = std::to_string(s.v);
        judge(exact, s.v == c.expected);
      }
    }
    out.push_back(std::move(exact));
    out.push_back(std::move(bounds));
  }
  return out;
}

ClaimVerdict check_gluing(const NamedGraph& g1, const NamedGraph& g2, const GluingChoice& choice, const CheckContext& ctx) {
  const int r = static_cast<int>(choice.clique1.size());
  std::string instance = "glue(" + g1.spec + ", " + g2.spec + ", r=" + std::to_string(r);
  std::string args;
  if (r > 0) {
    instance += ", c1=[" + join(choice.clique1) + "], c2=[" + join(choice.clique2) + "], id=[" +
                join(choice.identification) + "]";
    args = " --clique1 " + join(choice.clique1) + " --clique2 " + join(choice.clique2) + " --identification " +
           join(choice.identification);
  }
  instance += ")";
  ClaimVerdict out = row("gluing.sandwich", instance,
                         "tdc build glue " + quote(g1.spec) + " " + quote(g2.spec) + " --r " + std::to_string(r) + args +
                             " | tdc invariants --graph -");
  if (!is_connected(g1.graph) || !is_connected(g2.graph)) {
    out.verdict = Verdict::undefined_instance;
    out.note = "operand not connected";
    return out;
  }
  const Graph glued = r_gluing(g1.graph, g2.graph, choice.clique1, choice.clique2, choice.identification);
  const Solved t1 = solve(g1.graph, ctx);
  const Solved t2 = solve(g2.graph, ctx);
  const Solved t = solve(glued, ctx);
  if (t1.kind == Solved::undefined || t2.kind == Solved::undefined || t.kind == Solved::undefined) {
    out.verdict = Verdict::undefined_instance;
    out.note = "TDC-number undefined for an operand or the glued graph";
    if (t.kind == Solved::value) out.computed = std::to_string(t.v);
    return out;
  }
  if (t1.kind == Solved::capped || t2.kind == Solved::capped || t.kind == Solved::capped) {
    out.verdict = Verdict::skipped_cap;
    return out;
  }
  const int lower = std::max(t1.v, t2.v);
  const int upper = t1.v + t2.v - r;
  out.expected = "[" + std::to_string(lower) + ", " + std::to_string(upper) + "]";
  out.computed = std::to_string(t.v);
  judge(out, lower <= t.v && t.v <= upper);
  return out;
}

std::vector<ClaimVerdict> check_gluing_sharpness(const CheckContext& ctx) {
  std::vector<ClaimVerdict> out;
  auto tight = [&](std::string id, NamedGraph a, NamedGraph b, int r, bool lower) {
    GluingChoice choice{find_cliques_of_size(a.graph, r).front(), find_cliques_of_size(b.graph, r).front(), {}};
    for (int i = 0; i < r; ++i) choice.identification.push_back(i);
    ClaimVerdict v = check_gluing(a, b, choice, ctx);
    v.claim_id = std::move(id);
    if (v.verdict == Verdict::holds || v.verdict == Verdict::violated) {
      const std::string range = v.expected.substr(1, v.expected.size() - 2);
      const std::size_t comma = range.find(", ");
      const std::string bound = lower ? range.substr(0, comma) : range.substr(comma + 2);
      v.expected = "== " + bound;
      judge(v, v.computed == bound);
    }
    out.push_back(std::move(v));
  };
  tight("gluing.sharpness.lower", {"complete:4", complete(4)}, {"complete:5", complete(5)}, 4, true);
  tight("gluing.sharpness.upper", {"cycle:4", cycle(4)}, {"complete:3", complete(3)}, 1, false);
  return out;
}

namespace {

ClaimVerdict perturbation_value(Family family, int n, PerturbationKind kind, int expected, const CheckContext& ctx) {
  const NamedGraph g = family_graph(family, n);
  ClaimVerdict out = row(std::string(to_string(kind)) + "." + std::string(to_string(family)), g.spec,
                         perturb_cmd(g.spec, kind, ctx.convention));
  out.expected = std::to_string(expected);
  try {
    const PerturbationResult res = kind == PerturbationKind::stability ? stability(g.graph, ctx.convention, ctx.caps, ctx.solver)
                                                                       : bondage(g.graph, ctx.convention, ctx.caps, ctx.solver);
    out.computed = res.value ? std::to_string(*res.value) : "none";
    judge(out, res.value && *res.value == expected);
  } catch (const CapExceeded& e) {
    out.verdict = Verdict::skipped_cap;
    out.note = e.what();
  }
  return out;
}

}  // namespace

ClaimVerdict check_stability_value(Family family, int n, const CheckContext& ctx) {
  ClaimVerdict out = perturbation_value(family, n, PerturbationKind::stability, stability_formula(family, n), ctx);
  if (family == Family::cycle && n == 4) {
    out.flagged = true;
    out.note = "known discrepancy: every single-vertex deletion of C_4 leaves P_3 with the same value 2";
  }
  return out;
}

ClaimVerdict check_bondage_value(Family family, int n, const CheckContext& ctx) {
  return perturbation_value(family, n, PerturbationKind::bondage, bondage_formula(family, n), ctx);
}

namespace {

struct SideValue {
  Solved::Kind kind = Solved::undefined;
  int value = 0;
};

SideValue perturbation_side(const Graph& g, PerturbationKind kind, const CheckContext& ctx) {
  try {
    const PerturbationResult res = kind == PerturbationKind::stability ? stability(g, ctx.convention, ctx.caps, ctx.solver)
                                                                       : bondage(g, ctx.convention, ctx.caps, ctx.solver);
    if (!res.value) return {Solved::undefined, 0};
    return {Solved::value, *res.value};
  } catch (const UndefinedInstance&) {
    return {Solved::undefined, 0};
  } catch (const CapExceeded&) {
    return {Solved::capped, 0};
  }
}

ClaimVerdict nordhaus_gaddum_row(const NamedGraph& g, PerturbationKind kind, const CheckContext& ctx, std::string id,
                                 bool equality) {
  const std::string comp = "tdc build complement " + quote(g.spec) + " | tdc perturb --graph - --kind " +
                           std::string(to_string(kind)) + " --convention " + std::string(to_string(ctx.convention));
  ClaimVerdict out = row(std::move(id), g.spec, perturb_cmd(g.spec, kind, ctx.convention) + " ; " + comp);
  out.expected = equality ? "== 2" : ">= 2";
  const SideValue a = perturbation_side(g.graph, kind, ctx);
  const SideValue b = perturbation_side(complement(g.graph), kind, ctx);
  if (a.kind == Solved::capped || b.kind == Solved::capped) {
    out.verdict = Verdict::skipped_cap;
    return out;
  }
  if (a.kind == Solved::undefined || b.kind == Solved::undefined) {
    out.verdict = Verdict::undefined_instance;
    out.note = a.kind == Solved::undefined ? "value undefined for the graph" : "value undefined for the complement";
    if (a.kind == Solved::value) out.computed = std::to_string(a.value) + " + undefined";
    if (b.kind == Solved::value) out.computed = "undefined + " + std::to_string(b.value);
    return out;
  }
  out.computed = std::to_string(a.value) + " + " + std::to_string(b.value) + " = " + std::to_string(a.value + b.value);
  judge(out, equality ? a.value + b.value == 2 : a.value + b.value >= 2);
  return out;
}

}  // namespace

ClaimVerdict check_nordhaus_gaddum(const NamedGraph& g, PerturbationKind kind, const CheckContext& ctx) {
  return nordhaus_gaddum_row(g, kind, ctx, "nordhaus_gaddum." + std::string(to_string(kind)), false);
}

std::vector<ClaimVerdict> check_nordhaus_gaddum_equality(const CheckContext& ctx) {
  std::vector<ClaimVerdict> out;
  auto add = [&](const std::string& spec, PerturbationKind kind, bool flag) {
    ClaimVerdict v = nordhaus_gaddum_row({spec, parse_graph_spec(spec)}, kind, ctx,
                                         "nordhaus_gaddum." + std::string(to_string(kind)) + ".equality", true);
    if (flag) {
      v.flagged = true;
      v.note += "; listed as an equality case although the complement has an isolated vertex";
    }
    out.push_back(std::move(v));
  };
  add("cycle:5", PerturbationKind::stability, false);
  add("path:3", PerturbationKind::stability, true);
  add("complete_minus_edge:4", PerturbationKind::stability, false);
  add("complete_minus_edge:5", PerturbationKind::stability, false);
  add("path:3", PerturbationKind::bondage, true);
  add("complete_minus_edge:5", PerturbationKind::bondage, false);
  return out;
}

// Suite --------------------------------------------------------------------

std::vector<std::string> claim_families() {
  return {"paths", "cycles", "oracle", "henning", "ncorona", "corollary", "gluing", "stability", "bondage", "nordhaus_gaddum"};
}

std::vector<std::string> parse_claims(std::string_view text) {
  if (text == "all") return claim_families();
  if (text == "none" || text.empty()) return {};
  const std::vector<std::string> known = claim_families();
  std::vector<std::string> out;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string token(text.substr(0, comma));
    if (std::find(known.begin(), known.end(), token) == known.end()) {
      throw std::invalid_argument("unknown claim family '" + token + "'");
    }
    if (std::find(out.begin(), out.end(), token) == out.end()) out.push_back(token);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::map<std::string, int> TheoremReport::counts() const {
  std::map<std::string, int> out;
  for (Verdict v : {Verdict::holds, Verdict::violated, Verdict::undefined_instance, Verdict::skipped_cap}) {
    out[std::string(to_string(v))] = 0;
  }
  out["flagged"] = 0;
  for (const auto& r : rows) {
    ++out[std::string(to_string(r.verdict))];
    if (r.flagged) ++out["flagged"];
  }
  return out;
}

int TheoremReport::unflagged_violations() const {
  return static_cast<int>(
      std::count_if(rows.begin(), rows.end(), [](const ClaimVerdict& r) { return r.verdict == Verdict::violated && !r.flagged; }));
}

std::vector<std::pair<NamedGraph, NamedGraph>> ncorona_pairs(const SuiteConfig& config) {
  std::vector<std::pair<NamedGraph, NamedGraph>> out;
  const auto pool = connected_family_pool(config.ncorona_pool_max_n);
  for (const auto& a : pool)
    for (const auto& b : pool) out.emplace_back(a, b);

  std::mt19937_64 rng(config.seed);
  for (int i = 0; i < config.random_pairs; ++i) {
    int n1 = 0;
    int n2 = 0;
    do {
      n1 = 2 + static_cast<int>(rng() % 3);
      n2 = 2 + static_cast<int>(rng() % 4);
    } while (n1 * (1 + n2) > config.random_pair_max_order);
    Graph a = random_connected_graph(n1, 0.5, rng);
    Graph b = random_connected_graph(n2, 0.5, rng);
    std::string sa = write_graph6(a);
    std::string sb = write_graph6(b);
    out.push_back({{std::move(sa), std::move(a)}, {std::move(sb), std::move(b)}});
  }
  return out;
}

namespace {

std::vector<NamedGraph> connected_sweep(int from, int to) {
  std::vector<NamedGraph> out;
  for (int n = from; n <= to; ++n) {
    GraphStream stream(n, GraphFilter::connected, true);
    while (auto g = stream.next()) out.push_back({write_graph6(*g), std::move(*g)});
  }
  return out;
}

void append(std::vector<ClaimVerdict>& rows, std::vector<ClaimVerdict> more) {
  for (auto& r : more) rows.push_back(std::move(r));
}

void run_gluing(const SuiteConfig& config, std::vector<ClaimVerdict>& rows) {
  const auto pool = connected_family_pool(config.gluing_pool_max_n);
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      for (int r = 0; r <= 2; ++r) {
        const auto c1 = find_cliques_of_size(a.graph, r);
        const auto c2 = find_cliques_of_size(b.graph, r);
        std::vector<std::vector<int>> idents;
        std::vector<int> ident(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) ident[static_cast<std::size_t>(i)] = i;
        do idents.push_back(ident);
        while (std::next_permutation(ident.begin(), ident.end()));

        // one row per isomorphism class of glued graph; bounds depend only on (a, b, r)
        std::map<std::uint64_t, std::size_t> seen;
        for (const auto& k1 : c1) {
          for (const auto& k2 : c2) {
            for (const auto& id : idents) {
              const GluingChoice choice{k1, k2, id};
              const Graph glued = r_gluing(a.graph, b.graph, k1, k2, id);
              const std::uint64_t code = canonical_form(glued).code ^ (static_cast<std::uint64_t>(glued.order()) << 58);
              auto it = seen.find(code);
              if (it != seen.end()) continue;
              seen.emplace(code, rows.size());
              rows.push_back(check_gluing(a, b, choice, config.context));
            }
          }
        }
      }
    }
  }
}

}  // namespace

TheoremReport run_suite(const SuiteConfig& config) {
  TheoremReport report;
  report.config = config;
  const CheckContext& ctx = config.context;
  auto wants = [&](std::string_view family) {
    return std::find(config.claims.begin(), config.claims.end(), family) != config.claims.end();
  };
  auto& rows = report.rows;

  if (wants("paths")) {
    for (int n = 2; n <= config.path_max; ++n) rows.push_back(check_path_formula(n, ctx));
  }
  if (wants("cycles")) {
    for (int n = 3; n <= config.cycle_max; ++n) rows.push_back(check_cycle_formula(n, ctx));
  }
  if (wants("oracle") || wants("henning")) {
    const auto sweep = connected_sweep(2, config.sweep_max_n);
    for (const auto& g : sweep) {
      if (wants("oracle")) rows.push_back(check_oracle(g, ctx));
      if (wants("henning")) rows.push_back(check_henning(g, ctx));
    }
  }
  if (wants("ncorona")) {
    for (const auto& [a, b] : ncorona_pairs(config)) append(rows, check_ncorona(a, b, ctx));
    append(rows, check_ncorona_sharpness({"complete:4", complete(4)}, {"complete:3", complete(3)}, ctx));
  }
  if (wants("corollary")) {
    CheckContext bounded = ctx;
    if (!bounded.solver.time_budget) bounded.solver.time_budget = config.corollary_budget;
    for (int n = 2; n <= config.corollary_max_n; ++n) append(rows, check_corollary_ncorona(n, bounded));
  }
  if (wants("gluing")) {
    run_gluing(config, rows);
    append(rows, check_gluing_sharpness(ctx));
  }
  if (wants("stability")) {
    for (int n = 4; n <= 9; ++n) rows.push_back(check_stability_value(Family::path, n, ctx));
    for (int n = 3; n <= 12; ++n) rows.push_back(check_stability_value(Family::cycle, n, ctx));
    for (int n = 2; n <= 3; ++n) rows.push_back(check_stability_value(Family::friendship, n, ctx));
    for (int n = 3; n <= 4; ++n) rows.push_back(check_stability_value(Family::book, n, ctx));
    for (int n = 2; n <= 3; ++n) rows.push_back(check_stability_value(Family::balanced_complete_bipartite, n, ctx));
  }
  if (wants("bondage")) {
    for (int n = 3; n <= 9; ++n) rows.push_back(check_bondage_value(Family::path, n, ctx));
    for (int n = 5; n <= 12; ++n) rows.push_back(check_bondage_value(Family::cycle, n, ctx));
    for (int n = 2; n <= 3; ++n) rows.push_back(check_bondage_value(Family::friendship, n, ctx));
  }
  if (wants("nordhaus_gaddum")) {
    for (const auto& g : connected_sweep(2, config.nordhaus_gaddum_max_n)) {
      rows.push_back(check_nordhaus_gaddum(g, PerturbationKind::stability, ctx));
      rows.push_back(check_nordhaus_gaddum(g, PerturbationKind::bondage, ctx));
    }
    append(rows, check_nordhaus_gaddum_equality(ctx));
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const ClaimVerdict& a, const ClaimVerdict& b) { return a.claim_id < b.claim_id; });
  return report;
}

}  // namespace tdc

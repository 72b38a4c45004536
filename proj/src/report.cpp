#include "tdc/report.hpp"

#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace tdc {

namespace {

Json edges_json(const EdgeSet& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(Json::array({e.u, e.v}));
  return out;
}

Json optional_value(const std::optional<int>& v) { return v ? Json(*v) : Json("undefined"); }

}  // namespace

Json to_json(const ClaimVerdict& v) {
  Json j;
  j["type"] = "claim";
  j["claim"] = v.claim_id;
  j["instance"] = v.instance;
  j["expected"] = v.expected;
  j["computed"] = v.computed;
  j["verdict"] = std::string(to_string(v.verdict));
  j["flagged"] = v.flagged;
  j["note"] = v.note;
  j["reproduce"] = v.reproduce;
  return j;
}

Json to_json(const SuiteConfig& c) {
  Json j;
  j["claims"] = c.claims;
  j["path_max"] = c.path_max;
  j["cycle_max"] = c.cycle_max;
  j["sweep_max_n"] = c.sweep_max_n;
  j["ncorona_pool_max_n"] = c.ncorona_pool_max_n;
  j["random_pairs"] = c.random_pairs;
  j["random_pair_max_order"] = c.random_pair_max_order;
  j["gluing_pool_max_n"] = c.gluing_pool_max_n;
  j["corollary_max_n"] = c.corollary_max_n;
  j["corollary_budget_ms"] = c.corollary_budget.count();
  j["nordhaus_gaddum_max_n"] = c.nordhaus_gaddum_max_n;
  j["seed"] = c.seed;
  j["convention"] = std::string(to_string(c.context.convention));
  j["max_n"] = c.context.solver.max_order;
  j["time_budget_ms"] = c.context.solver.time_budget ? Json(c.context.solver.time_budget->count()) : Json(nullptr);
  j["perturbation_max_order"] = c.context.caps.max_order;
  j["perturbation_max_edges"] = c.context.caps.max_edges;
  return j;
}

Json to_json(const Coloring& f) { return Json(std::vector<int>(f.colors().begin(), f.colors().end())); }

Json to_json(const TraceRow& r) {
  Json j;
  if (!r.edges.empty()) {
    j["edges"] = edges_json(r.edges);
  } else {
    j["vertices"] = r.vertices;
  }
  j["after_value"] = optional_value(r.after_value);
  return j;
}

Json to_json(const PerturbationResult& r) {
  Json j;
  j["kind"] = std::string(to_string(r.kind));
  j["convention"] = std::string(to_string(r.convention));
  j["base_value"] = r.base_value;
  j["value"] = r.value ? Json(*r.value) : Json(nullptr);
  if (r.kind == PerturbationKind::stability) {
    j["witness"] = r.witness_vertices;
  } else {
    j["witness"] = edges_json(r.witness_edges);
  }
  j["after_value"] = r.value ? optional_value(r.after_value) : Json(nullptr);
  j["subsets_checked"] = r.sweep.size();
  return j;
}

Json to_json(const ConjectureFinding& f) {
  Json j;
  j["graph6"] = f.graph6;
  j["n"] = f.order;
  j["min_degree"] = f.min_degree;
  j["tdc"] = f.tdc;
  j["stability"] = f.stability ? Json(*f.stability) : Json(nullptr);
  j["convention"] = std::string(to_string(f.convention));
  j["population"] = f.population == ScanPopulation::connected ? "connected" : "no_isolated_vertex";
  j["verdict"] = f.verdict;
  return j;
}

void write_report_jsonl(std::ostream& out, const TheoremReport& report) {
  for (const auto& row : report.rows) out << to_json(row).dump() << '\n';
  Json summary;
  summary["type"] = "summary";
  summary["schema"] = kReportSchema;
  summary["rows"] = report.rows.size();
  Json counts;
  for (const auto& [k, v] : report.counts()) counts[k] = v;
  summary["counts"] = counts;
  summary["unflagged_violations"] = report.unflagged_violations();
  summary["config"] = to_json(report.config);
  out << summary.dump() << '\n';
}

std::string report_jsonl(const TheoremReport& report) {
  std::ostringstream s;
  write_report_jsonl(s, report);
  return s.str();
}

void write_report_table(std::ostream& out, const TheoremReport& report) {
  struct Tally {
    int holds = 0, violated = 0, undefined = 0, skipped = 0, flagged = 0;
  };
  std::map<std::string, Tally> by_claim;
  for (const auto& r : report.rows) {
    Tally& t = by_claim[r.claim_id];
    switch (r.verdict) {
      case Verdict::holds:
        ++t.holds;
        break;
      case Verdict::violated:
        ++t.violated;
        break;
      case Verdict::undefined_instance:
        ++t.undefined;
        break;
      case Verdict::skipped_cap:
        ++t.skipped;
        break;
    }
    if (r.flagged) ++t.flagged;
  }
  out << std::left << std::setw(44) << "claim" << std::right << std::setw(8) << "holds" << std::setw(10) << "violated"
      << std::setw(11) << "undefined" << std::setw(9) << "skipped" << std::setw(9) << "flagged" << '\n';
  for (const auto& [id, t] : by_claim) {
    out << std::left << std::setw(44) << id << std::right << std::setw(8) << t.holds << std::setw(10) << t.violated
        << std::setw(11) << t.undefined << std::setw(9) << t.skipped << std::setw(9) << t.flagged << '\n';
  }
  out << "rows: " << report.rows.size() << ", unflagged violations: " << report.unflagged_violations() << '\n';
  for (const auto& r : report.rows) {
    if (r.verdict != Verdict::violated) continue;
    out << (r.flagged ? "  flagged   " : "  VIOLATED  ") << r.claim_id << "  " << r.instance << "  expected "
        << r.expected << ", computed " << r.computed << '\n';
  }
}

void write_findings_jsonl(std::ostream& out, const std::vector<ConjectureFinding>& findings) {
  for (const auto& f : findings) out << to_json(f).dump() << '\n';
}

}  // namespace tdc

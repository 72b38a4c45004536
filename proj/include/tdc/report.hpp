#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "tdc/coloring.hpp"
#include "tdc/explorer.hpp"
#include "tdc/perturbation.hpp"
#include "tdc/solver.hpp"
#include "tdc/theorems.hpp"

namespace tdc {

using Json = nlohmann::ordered_json;

/// Schema tag written into every summary line; bump when row fields change.
inline constexpr const char* kReportSchema = "tdc-report/1";

Json to_json(const ClaimVerdict& v);
Json to_json(const SuiteConfig& c);
Json to_json(const PerturbationResult& r);
Json to_json(const ConjectureFinding& f);
Json to_json(const Coloring& f);
Json to_json(const TraceRow& r);

/// JSON-lines: one {"type":"claim",...} object per row, then one
/// {"type":"summary",...} object with counts and the config echo.
void write_report_jsonl(std::ostream& out, const TheoremReport& report);
std::string report_jsonl(const TheoremReport& report);

/// Per-claim-id verdict counts as an aligned text table.
void write_report_table(std::ostream& out, const TheoremReport& report);

void write_findings_jsonl(std::ostream& out, const std::vector<ConjectureFinding>& findings);

}  // namespace tdc

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dnt/mcdm.hpp"

namespace dnt {

struct ReportOptions {
  int precision = 4;                 // decimals for numeric cells
  std::optional<std::string> stage;  // emit a single stage only
};

/// Stage names accepted by ReportOptions::stage, in report order:
/// aggregation, d-numbers, fusion, lvt, decision.
const std::vector<std::string>& report_stage_names();

/// Tab-delimited per-stage tables plus epsilon, msd values, ranking and
/// tie-break metadata. Deterministic: equal inputs render byte-identically.
std::string render_report(const DecisionProblem& p, const PipelineTrace& t,
                          const ReportOptions& options = {});

/// The same content as a JSON document (full precision values).
std::string render_report_json(const DecisionProblem& p, const PipelineTrace& t,
                               const ReportOptions& options = {});

}  // namespace dnt

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dnt/mcdm.hpp"

namespace dnt::case_study {

/// Bundled reference case study: an engineer-hiring decision with three
/// candidates, five benefit criteria and three experts on the built-in
/// scales. The reference_* tables below hold the expected value of every
/// pipeline stage for it (rounded to 4-6 decimals) and drive the
/// verification checks.

const DecisionProblem& problem();

/// The problem in canonical problem-file form; problem() is parsed from it.
std::string_view problem_text();

/// Focal-element -> mass map with member labels joined by ","; "theta" keys
/// the whole-domain mass. Kept as plain data rather than DNumber values: a
/// few reference entries are internally inconsistent (one block sums to
/// 1.03), and the checks report that instead of hiding it.
using ReferenceMasses = std::map<std::string, double>;

/// Builds a DNumber from reference masses over the scale's labels. Throws
/// std::invalid_argument when the entry violates the D number definition.
DNumber to_dnumber(const ReferenceMasses& masses, const LinguisticScale& scale);

/// Expected stage outputs, indexed like the corresponding trace fields.
const std::vector<std::vector<TriangularFuzzyNumber>>& reference_weighted_tfns();
const std::vector<std::vector<ReferenceMasses>>& reference_stage_dnumbers();
const std::vector<ReferenceMasses>& reference_fused();
const std::vector<SingletonDistribution>& reference_distributions();
const std::vector<double>& reference_msd();
const std::vector<std::string>& reference_ranking();
double reference_epsilon();

}  // namespace dnt::case_study

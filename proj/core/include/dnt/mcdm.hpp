#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnt/errors.hpp"
#include "dnt/lvt.hpp"

namespace dnt {

/// A group decision problem: candidates rated by experts against criteria,
/// with linguistic criterion weights. Assessments are stored as term indices
/// into the corresponding scale; construction validates totality.
class DecisionProblem {
 public:
  DecisionProblem(std::vector<std::string> candidates,
                  std::vector<std::string> criteria,
                  std::vector<std::string> experts,
                  LinguisticScale weight_scale, LinguisticScale rating_scale,
                  std::vector<std::vector<std::size_t>> weights,
                  std::vector<std::vector<std::vector<std::size_t>>> ratings);

  std::span<const std::string> candidates() const { return candidates_; }
  std::span<const std::string> criteria() const { return criteria_; }
  std::span<const std::string> experts() const { return experts_; }
  const LinguisticScale& weight_scale() const { return weight_scale_; }
  const LinguisticScale& rating_scale() const { return rating_scale_; }

  /// Term index of the weight given by expert e to criterion c.
  std::size_t weight_index(std::size_t c, std::size_t e) const {
    return weights_[c][e];
  }
  /// Term index of the rating given by expert e to candidate a under c.
  std::size_t rating_index(std::size_t c, std::size_t a, std::size_t e) const {
    return ratings_[c][a][e];
  }
  const std::string& weight_label(std::size_t c, std::size_t e) const;
  const std::string& rating_label(std::size_t c, std::size_t a,
                                  std::size_t e) const;

  bool operator==(const DecisionProblem&) const = default;

 private:
  std::vector<std::string> candidates_;
  std::vector<std::string> criteria_;
  std::vector<std::string> experts_;
  LinguisticScale weight_scale_;
  LinguisticScale rating_scale_;
  std::vector<std::vector<std::size_t>> weights_;
  std::vector<std::vector<std::vector<std::size_t>>> ratings_;
};

struct RankedCandidate {
  std::string candidate;
  double msd;
};

struct Ranking {
  std::vector<RankedCandidate> order;  // descending by msd
  std::vector<std::string> tie_notes;  // how ties were resolved, if any
};

struct PipelineOptions {
  std::optional<double> epsilon_override;
  std::optional<std::string> msd_threshold;
};

/// Every intermediate stage of a pipeline run.
struct PipelineTrace {
  std::vector<std::vector<TriangularFuzzyNumber>> aggregated;  // [criterion][candidate]
  std::vector<std::vector<DNumber>> per_criterion;             // [criterion][candidate]
  double epsilon = 0.0;
  std::string msd_threshold;
  std::vector<DNumber> fused;                        // [candidate]
  std::vector<SingletonDistribution> distributions;  // [candidate]
  std::vector<double> msd_values;                    // [candidate]
  Ranking ranking;
};

/// Aggregates the experts' assessments for one (criterion, candidate) cell:
/// each expert's rating term is scaled by the centroid of that expert's
/// weight term, then the scaled numbers are averaged.
TriangularFuzzyNumber weighted_rating(const DecisionProblem& p,
                                      std::size_t criterion,
                                      std::size_t candidate);

/// Converts a triangular number into a D number over the scale: adjacent
/// pair masses from three-way intersection areas, singleton masses from the
/// remaining own-term intersection, theta from the envelope residual; all
/// normalized by area(x). Output is complete. Requires area(x) > 0 and the
/// support of x inside the scale universe.
DNumber tfn_to_dnumber(const TriangularFuzzyNumber& x,
                       const LinguisticScale& scale);

/// For each candidate: discount each criterion's D number once by epsilon,
/// then fold with the combination rule.
std::vector<DNumber> fuse_criteria(
    const std::vector<std::vector<DNumber>>& per_criterion, double epsilon);

/// Maximum supported degree: total weight of the threshold term and every
/// term above it in scale order.
double msd(const SingletonDistribution& dist, const LinguisticScale& scale,
           std::string_view threshold_label);

/// Descending by msd; exact ties broken by the integration value of
/// (term mode, weight) pairs, then by input order. Resolutions are recorded
/// in tie_notes.
Ranking rank(std::span<const std::string> candidates,
             std::span<const double> msd_values,
             std::span<const SingletonDistribution> distributions,
             const LinguisticScale& scale);

/// Runs all stages in order and materializes every intermediate result.
/// The msd threshold defaults to the scale's fifth term (or the last term of
/// a shorter scale). Stage failures are rethrown as PipelineError.
PipelineTrace run(const DecisionProblem& p, const PipelineOptions& options = {});

}  // namespace dnt

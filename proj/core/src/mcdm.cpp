#include "dnt/mcdm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dnt {

DecisionProblem::DecisionProblem(
    std::vector<std::string> candidates, std::vector<std::string> criteria,
    std::vector<std::string> experts, LinguisticScale weight_scale,
    LinguisticScale rating_scale, std::vector<std::vector<std::size_t>> weights,
    std::vector<std::vector<std::vector<std::size_t>>> ratings)
    : candidates_(std::move(candidates)), criteria_(std::move(criteria)),
      experts_(std::move(experts)), weight_scale_(std::move(weight_scale)),
      rating_scale_(std::move(rating_scale)), weights_(std::move(weights)),
      ratings_(std::move(ratings)) {
  auto check_unique = [](const std::vector<std::string>& labels, const char* what) {
    if (labels.empty()) {
      throw std::invalid_argument(std::string(what) + " must be nonempty");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i].empty()) {
        throw std::invalid_argument(std::string(what) + " labels must be nonempty");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (labels[i] == labels[j]) {
          throw std::invalid_argument("duplicate " + std::string(what) +
                                      " label \"" + labels[i] + "\"");
        }
      }
    }
  };
  check_unique(candidates_, "candidate");
  check_unique(criteria_, "criterion");
  check_unique(experts_, "expert");

  if (weights_.size() != criteria_.size()) {
    throw std::invalid_argument("weights must cover every criterion");
  }
  for (const auto& row : weights_) {
    if (row.size() != experts_.size()) {
      throw std::invalid_argument("weights must cover every expert");
    }
    for (std::size_t idx : row) {
      if (idx >= weight_scale_.size()) {
        throw std::invalid_argument("weight term index out of range");
      }
    }
  }
  if (ratings_.size() != criteria_.size()) {
    throw std::invalid_argument("ratings must cover every criterion");
  }
  for (const auto& per_candidate : ratings_) {
    if (per_candidate.size() != candidates_.size()) {
      throw std::invalid_argument("ratings must cover every candidate");
    }
    for (const auto& row : per_candidate) {
      if (row.size() != experts_.size()) {
        throw std::invalid_argument("ratings must cover every expert");
      }
      for (std::size_t idx : row) {
        if (idx >= rating_scale_.size()) {
          throw std::invalid_argument("rating term index out of range");
        }
      }
    }
  }
}

const std::string& DecisionProblem::weight_label(std::size_t c, std::size_t e) const {
  return weight_scale_.term(weights_[c][e]).label;
}

const std::string& DecisionProblem::rating_label(std::size_t c, std::size_t a,
                                                 std::size_t e) const {
  return rating_scale_.term(ratings_[c][a][e]).label;
}

TriangularFuzzyNumber weighted_rating(const DecisionProblem& p,
                                      std::size_t criterion,
                                      std::size_t candidate) {
  if (criterion >= p.criteria().size() || candidate >= p.candidates().size()) {
    throw std::invalid_argument("weighted_rating indices out of range");
  }
  std::vector<TriangularFuzzyNumber> scaled;
  scaled.reserve(p.experts().size());
  for (std::size_t e = 0; e < p.experts().size(); ++e) {
    const auto& rating =
        p.rating_scale().term(p.rating_index(criterion, candidate, e)).shape;
    const auto& weight =
        p.weight_scale().term(p.weight_index(criterion, e)).shape;
    scaled.push_back(scale_tfn(rating, centroid(weight)));
  }
  return mean_tfn(scaled);
}

DNumber tfn_to_dnumber(const TriangularFuzzyNumber& x,
                       const LinguisticScale& scale) {
  const double ax = x.area();
  if (!(ax > 0.0)) {
    throw std::invalid_argument("tfn_to_dnumber requires a positive-area number");
  }
  if (x.a() < scale.universe().lo || x.c() > scale.universe().hi) {
    throw std::invalid_argument(
        "tfn_to_dnumber requires the support inside the scale universe");
  }

  const std::size_t n = scale.size();
  std::vector<double> single(n, 0.0);   // area of x ^ term_i
  std::vector<double> paired(n, 0.0);   // area of x ^ term_i ^ term_{i+1}
  for (std::size_t i = 0; i < n; ++i) {
    single[i] = min_area(x, scale.term(i).shape);
    if (i + 1 < n) {
      const TriangularFuzzyNumber triple[] = {x, scale.term(i).shape,
                                              scale.term(i + 1).shape};
      paired[i] = min_area(std::span<const TriangularFuzzyNumber>(triple));
    }
  }

  LabelSet domain{scale.labels()};
  std::map<std::uint64_t, double> masses;
  for (std::size_t i = 0; i < n; ++i) {
    double m = single[i];
    if (i > 0) {
      m -= paired[i - 1];
    }
    if (i + 1 < n) {
      m -= paired[i];
    }
    m /= ax;
    if (m > kMassPruneThreshold) {
      masses[std::uint64_t{1} << i] = m;
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double m = paired[i] / ax;
    if (m > kMassPruneThreshold) {
      masses[(std::uint64_t{1} << i) | (std::uint64_t{1} << (i + 1))] = m;
    }
  }
  const double theta = envelope_residual_area(x, scale) / ax;

  DNumber d{std::move(domain), std::move(masses),
            theta > kMassPruneThreshold ? theta : 0.0};
  if (!completeness(d).complete) {
    throw std::invalid_argument(
        "tfn_to_dnumber needs a scale whose terms overlap adjacent neighbours only");
  }
  return d;
}

std::vector<DNumber> fuse_criteria(
    const std::vector<std::vector<DNumber>>& per_criterion, double epsilon) {
  if (per_criterion.empty() || per_criterion.front().empty()) {
    throw std::invalid_argument("fuse_criteria requires at least one D number");
  }
  const std::size_t candidates = per_criterion.front().size();
  std::vector<DNumber> out;
  out.reserve(candidates);
  for (std::size_t a = 0; a < candidates; ++a) {
    std::vector<DNumber> discounted;
    discounted.reserve(per_criterion.size());
    for (const auto& row : per_criterion) {
      if (row.size() != candidates) {
        throw std::invalid_argument("ragged per-criterion D number matrix");
      }
      discounted.push_back(discount_by_exclusivity(row[a], epsilon));
    }
    out.push_back(combine_all(discounted, epsilon));
  }
  return out;
}

double msd(const SingletonDistribution& dist, const LinguisticScale& scale,
           std::string_view threshold_label) {
  const auto idx = scale.index_of(threshold_label);
  if (!idx) {
    throw std::invalid_argument("msd threshold \"" + std::string(threshold_label) +
                                "\" is not a term of the scale");
  }
  if (dist.labels().size() != scale.size()) {
    throw std::invalid_argument("distribution does not match the scale");
  }
  double total = 0.0;
  for (std::size_t i = *idx; i < scale.size(); ++i) {
    total += dist.weights()[i];
  }
  return total;
}

Ranking rank(std::span<const std::string> candidates,
             std::span<const double> msd_values,
             std::span<const SingletonDistribution> distributions,
             const LinguisticScale& scale) {
  if (candidates.empty() || candidates.size() != msd_values.size() ||
      candidates.size() != distributions.size()) {
    throw std::invalid_argument("rank requires aligned nonempty inputs");
  }

  // Integration value of (term mode, weight) pairs, used only on exact ties.
  auto integration_value = [&](std::size_t i) {
    double total = 0.0;
    for (std::size_t t = 0; t < scale.size(); ++t) {
      total += scale.term(t).shape.b() * distributions[i].weights()[t];
    }
    return total;
  };

  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (msd_values[i] != msd_values[j]) {
      return msd_values[i] > msd_values[j];
    }
    return integration_value(i) > integration_value(j);
  });

  Ranking ranking;
  for (std::size_t i : order) {
    ranking.order.push_back({candidates[i], msd_values[i]});
  }
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const std::size_t i = order[k];
    const std::size_t j = order[k + 1];
    if (msd_values[i] == msd_values[j]) {
      const bool by_integration = integration_value(i) != integration_value(j);
      ranking.tie_notes.push_back(
          candidates[i] + " and " + candidates[j] + " tied on msd; ordered by " +
          (by_integration ? "integration value" : "input order"));
    }
  }
  return ranking;
}

namespace {

template <typename F>
auto stage(const char* name, F&& f) {
  try {
    return f();
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError(name, e.what());
  }
}

}  // namespace

PipelineTrace run(const DecisionProblem& p, const PipelineOptions& options) {
  PipelineTrace trace;
  const std::size_t n_crit = p.criteria().size();
  const std::size_t n_cand = p.candidates().size();

  stage("aggregation", [&] {
    trace.aggregated.resize(n_crit);
    for (std::size_t c = 0; c < n_crit; ++c) {
      for (std::size_t a = 0; a < n_cand; ++a) {
        trace.aggregated[c].push_back(weighted_rating(p, c, a));
      }
    }
    return 0;
  });

  stage("d-numbers", [&] {
    trace.per_criterion.resize(n_crit);
    for (std::size_t c = 0; c < n_crit; ++c) {
      for (std::size_t a = 0; a < n_cand; ++a) {
        trace.per_criterion[c].push_back(
            tfn_to_dnumber(trace.aggregated[c][a], p.rating_scale()));
      }
    }
    return 0;
  });

  stage("fusion", [&] {
    if (options.epsilon_override) {
      trace.epsilon = *options.epsilon_override;
      if (!(trace.epsilon >= 0.0 && trace.epsilon <= 1.0)) {
        throw std::invalid_argument("epsilon override must lie in [0, 1]");
      }
    } else {
      trace.epsilon = exclusive_coefficient(relative_matrix(p.rating_scale()));
    }
    trace.fused = fuse_criteria(trace.per_criterion, trace.epsilon);
    return 0;
  });

  stage("lvt", [&] {
    for (std::size_t a = 0; a < n_cand; ++a) {
      trace.distributions.push_back(transform(trace.fused[a], p.rating_scale()));
    }
    return 0;
  });

  stage("decision", [&] {
    trace.msd_threshold = options.msd_threshold.value_or(
        p.rating_scale().term(std::min<std::size_t>(4, p.rating_scale().size() - 1))
            .label);
    for (std::size_t a = 0; a < n_cand; ++a) {
      trace.msd_values.push_back(
          msd(trace.distributions[a], p.rating_scale(), trace.msd_threshold));
    }
    trace.ranking = rank(p.candidates(), trace.msd_values, trace.distributions,
                         p.rating_scale());
    return 0;
  });

  return trace;
}

}  // namespace dnt

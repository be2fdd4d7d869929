#include "dnt/lvt.hpp"

#include <cmath>
#include <stdexcept>

namespace dnt {

SingletonDistribution::SingletonDistribution(std::vector<std::string> labels,
                                             std::vector<double> weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
  if (labels_.size() != weights_.size()) {
    throw std::invalid_argument("labels and weights must have equal length");
  }
  for (double w : weights_) {
    if (!(w >= 0.0) || w > 1.0 + kMassTolerance) {
      throw std::invalid_argument("weights must lie in [0, 1]");
    }
  }
}

double SingletonDistribution::weight(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) {
      return weights_[i];
    }
  }
  throw std::invalid_argument("label \"" + std::string(label) +
                              "\" is not in the distribution");
}

double SingletonDistribution::total() const {
  double total = 0.0;
  for (double w : weights_) {
    total += w;
  }
  return total;
}

PairShare pair_split(std::string_view label_a, std::string_view label_b,
                     double mass, const LinguisticScale& scale) {
  const auto ia = scale.index_of(label_a);
  const auto ib = scale.index_of(label_b);
  if (!ia || !ib) {
    throw std::invalid_argument("pair_split labels must belong to the scale");
  }
  if (*ia == *ib) {
    throw std::invalid_argument("pair_split requires two distinct terms");
  }
  if (!(mass >= 0.0)) {
    throw std::invalid_argument("pair mass must be nonnegative");
  }
  const auto& shape_a = scale.term(*ia).shape;
  const auto& shape_b = scale.term(*ib).shape;
  const double s_ab = min_area(shape_a, shape_b);
  if (!(s_ab > 0.0)) {
    throw std::domain_error("pair_split requires intersecting terms (\"" +
                            std::string(label_a) + "\", \"" +
                            std::string(label_b) + "\")");
  }
  const double ratio_a = s_ab / shape_a.area();
  const double ratio_b = s_ab / shape_b.area();
  const double share_a = mass * ratio_a / (ratio_a + ratio_b);
  return {share_a, mass - share_a};
}

SingletonDistribution transform(const DNumber& d, const LinguisticScale& scale) {
  const std::size_t n = scale.size();
  if (d.domain().labels().size() != n) {
    throw std::invalid_argument("D number domain must match the scale");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d.domain().label(i) != scale.term(i).label) {
      throw std::invalid_argument("D number domain must match the scale");
    }
  }
  if (!completeness(d).complete) {
    throw std::invalid_argument("transform requires a complete D number");
  }

  std::vector<double> weights(n, 0.0);
  for (const auto& [subset, value] : d.masses()) {
    const int size = subset_size(subset);
    if (size == 1) {
      weights[static_cast<std::size_t>(__builtin_ctzll(subset))] += value;
      continue;
    }
    if (size != 2) {
      throw std::invalid_argument(
          "focal elements of three or more terms are not transformable");
    }
    const auto lo = static_cast<std::size_t>(__builtin_ctzll(subset));
    const auto hi = static_cast<std::size_t>(63 - __builtin_clzll(subset));
    if (hi != lo + 1) {
      throw std::invalid_argument("pair focal elements must be adjacent terms");
    }
    const auto share =
        pair_split(scale.term(lo).label, scale.term(hi).label, value, scale);
    weights[lo] += share.first;
    weights[hi] += share.second;
  }

  if (d.theta_mass() > 0.0) {
    // Theta may belong to any term; spread it inversely to term area so that
    // narrow terms absorb proportionally more, mirroring the pair rule.
    double inv_total = 0.0;
    for (const auto& t : scale.terms()) {
      if (!(t.shape.area() > 0.0)) {
        throw std::domain_error("theta redistribution requires terms with positive area");
      }
      inv_total += 1.0 / t.shape.area();
    }
    for (std::size_t i = 0; i < n; ++i) {
      weights[i] += d.theta_mass() * (1.0 / scale.term(i).shape.area()) / inv_total;
    }
  }

  return {scale.labels(), std::move(weights)};
}

}  // namespace dnt

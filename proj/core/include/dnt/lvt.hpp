#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnt/dnumbers.hpp"
#include "dnt/linguistic_scale.hpp"

namespace dnt {

/// Probability-like distribution over the single terms of a scale, in scale
/// order. Sums to 1 when built from a complete D number.
class SingletonDistribution {
 public:
  SingletonDistribution(std::vector<std::string> labels,
                        std::vector<double> weights);

  std::span<const std::string> labels() const { return labels_; }
  std::span<const double> weights() const { return weights_; }
  double weight(std::string_view label) const;
  double total() const;

  bool operator==(const SingletonDistribution&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<double> weights_;
};

struct PairShare {
  double first;
  double second;
};

/// Splits a pair mass between two overlapping terms by the ratio of
/// intersection-to-own-area: share_A = mass * (S_AB/S_A) / (S_AB/S_A + S_AB/S_B),
/// share_B the complement. Equal areas give a 1:1 split. Throws
/// std::domain_error when the terms do not intersect.
PairShare pair_split(std::string_view label_a, std::string_view label_b,
                     double mass, const LinguisticScale& scale);

/// Linguistic variable transformation: singleton masses pass through,
/// adjacent-pair masses are split with pair_split, and theta mass is spread
/// over all terms proportionally to 1/area(term). The D number must be
/// complete and its domain must equal the scale's labels; focal elements of
/// three or more terms (other than theta) are rejected.
SingletonDistribution transform(const DNumber& d, const LinguisticScale& scale);

}  // namespace dnt

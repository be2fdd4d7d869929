#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnt/fuzzy.hpp"

namespace dnt {

struct Interval {
  double lo;
  double hi;
};

/// Ordered list of labeled triangular terms over a universe interval.
///
/// Invariants enforced at construction:
///  - labels unique and nonempty, terms ordered by mode (b) non-decreasing
///  - every term's support lies inside the universe
///  - no term's support is strictly contained in another term's support
///    (strict at both ends); nested terms would make the pairwise linguistic
///    transformation inapplicable.
class LinguisticScale {
 public:
  struct Term {
    std::string label;
    TriangularFuzzyNumber shape;
  };

  LinguisticScale(std::vector<Term> terms, Interval universe);

  std::size_t size() const { return terms_.size(); }
  const Term& term(std::size_t i) const { return terms_[i]; }
  std::span<const Term> terms() const { return terms_; }
  const Interval& universe() const { return universe_; }

  std::optional<std::size_t> index_of(std::string_view label) const;
  std::vector<std::string> labels() const;

  bool operator==(const LinguisticScale&) const = default;

 private:
  std::vector<Term> terms_;
  Interval universe_;
};

/// Area of x not covered by the scale: area(x) minus the area under
/// min(x, max of all term memberships). Always in [0, area(x)].
/// Requires the support of x to lie inside the scale universe.
double envelope_residual_area(const TriangularFuzzyNumber& x,
                              const LinguisticScale& scale);

namespace scales {

/// Built-in 7-term scale for criterion importance weights over [0, 1]:
/// VL, L, ML, M, MH, H, VH.
const LinguisticScale& importance_weights();

/// Built-in 7-term scale for qualitative performance ratings over [0, 10]:
/// VP, P, MP, F, MG, G, VG.
const LinguisticScale& performance_ratings();

}  // namespace scales

}  // namespace dnt

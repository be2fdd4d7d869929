#include "dnt/linguistic_scale.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "geometry_detail.hpp"

namespace dnt {

LinguisticScale::LinguisticScale(std::vector<Term> terms, Interval universe)
    : terms_(std::move(terms)), universe_(universe) {
  if (terms_.empty()) {
    throw std::invalid_argument("scale must have at least one term");
  }
  if (!std::isfinite(universe_.lo) || !std::isfinite(universe_.hi) ||
      !(universe_.lo < universe_.hi)) {
    throw std::invalid_argument("scale universe must be a nonempty interval");
  }
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (t.label.empty()) {
      throw std::invalid_argument("scale term labels must be nonempty");
    }
    if (!seen.insert(t.label).second) {
      throw std::invalid_argument("duplicate scale term \"" + t.label + "\"");
    }
    if (t.shape.a() < universe_.lo || t.shape.c() > universe_.hi) {
      throw std::invalid_argument("support of term \"" + t.label +
                                  "\" lies outside the scale universe");
    }
    if (i > 0 && terms_[i - 1].shape.b() > t.shape.b()) {
      throw std::invalid_argument("scale terms must be ordered by mode; \"" +
                                  t.label + "\" is out of order");
    }
  }
  // Strictly nested supports defeat the pairwise transformation.
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    for (std::size_t j = 0; j < terms_.size(); ++j) {
      if (i == j) {
        continue;
      }
      const auto& inner = terms_[i].shape;
      const auto& outer = terms_[j].shape;
      if (outer.a() < inner.a() && inner.c() < outer.c()) {
        throw std::invalid_argument("support of term \"" + terms_[i].label +
                                    "\" is strictly contained in \"" +
                                    terms_[j].label + "\"");
      }
    }
  }
}

std::optional<std::size_t> LinguisticScale::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].label == label) {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<std::string> LinguisticScale::labels() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.push_back(t.label);
  }
  return out;
}

double envelope_residual_area(const TriangularFuzzyNumber& x,
                              const LinguisticScale& scale) {
  if (x.a() < scale.universe().lo || x.c() > scale.universe().hi) {
    throw std::invalid_argument(
        "envelope_residual_area requires the support inside the universe");
  }
  std::vector<PiecewiseLinearCurve> terms;
  terms.reserve(scale.size());
  for (const auto& t : scale.terms()) {
    terms.push_back(PiecewiseLinearCurve::of(t.shape));
  }
  const double covered = detail::covered_area(PiecewiseLinearCurve::of(x), terms);
  return std::clamp(x.area() - covered, 0.0, x.area());
}

}  // namespace dnt

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dnt/evidence.hpp"
#include "dnt/labels.hpp"
#include "dnt/linguistic_scale.hpp"

namespace dnt {

/// A D number: subset -> mass map over a possibly non-exclusive domain, with
/// the unit-sum constraint relaxed (total <= 1). Mass on the whole domain is
/// kept separately as theta_mass for discounting bookkeeping; a full-domain
/// key passed to the constructor is folded into it. Closed world: the empty
/// set never carries mass.
class DNumber {
 public:
  DNumber(LabelSet domain, std::map<std::uint64_t, double> masses,
          double theta_mass = 0.0);

  static DNumber vacuous(LabelSet domain);

  const LabelSet& domain() const { return domain_; }
  /// Proper nonempty subsets only; theta lives in theta_mass().
  const std::map<std::uint64_t, double>& masses() const { return masses_; }
  double theta_mass() const { return theta_mass_; }
  double total_mass() const;
  /// Mass of a subset; the full mask reads theta_mass().
  double mass(std::uint64_t subset) const;

  bool operator==(const DNumber&) const = default;

 private:
  LabelSet domain_;
  std::map<std::uint64_t, double> masses_;
  double theta_mass_;
};

struct Completeness {
  bool complete;
  double deficit;  // 1 - total mass; 0 when complete
};

/// Complete iff total mass is 1 within kMassTolerance.
Completeness completeness(const DNumber& d);

/// Assigns the deficit 1 - total to theta. Identity for complete inputs.
DNumber fold_deficit_to_theta(const DNumber& d);

/// Special form of a D number: distinct real values with positive masses
/// summing to at most 1. Equality is permutation-invariant.
class PairedDNumber {
 public:
  struct Pair {
    double value;
    double mass;
  };

  explicit PairedDNumber(std::vector<Pair> pairs);

  std::span<const Pair> pairs() const { return pairs_; }

  bool operator==(const PairedDNumber& other) const;

 private:
  std::vector<Pair> pairs_;
};

/// Integration representation: I(D) = sum of value * mass.
double integrate(const PairedDNumber& d);

/// Symmetric matrix of pairwise non-exclusive degrees with a unit diagonal.
class RelativeMatrix {
 public:
  /// entries is row-major n*n; validated symmetric within 1e-12, diagonal 1,
  /// entries in [0, 1].
  RelativeMatrix(std::vector<std::string> labels, std::vector<double> entries);

  std::size_t size() const { return labels_.size(); }
  double at(std::size_t i, std::size_t j) const;
  std::span<const std::string> labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> entries_;
};

/// Non-exclusive degree of every term pair: intersection area over union
/// area of the memberships. Requires every term to have positive area.
RelativeMatrix relative_matrix(const LinguisticScale& scale);

/// Exclusive coefficient: mean of the strict upper triangle. 0 means fully
/// exclusive hypotheses. Requires at least two labels.
double exclusive_coefficient(const RelativeMatrix& r);

/// Discounts by the exclusive coefficient: proper-subset masses shrink by
/// (1 - epsilon), theta becomes theta * (1 - epsilon) + epsilon. Any deficit
/// is folded to theta first, so the output is always complete.
DNumber discount_by_exclusivity(const DNumber& d, double epsilon);

/// Combination rule for D numbers: the normalized product-intersection rule
/// applied to inputs that have already been discounted by epsilon once
/// (combination itself applies no discount). Deficits are folded to theta.
/// With epsilon = 0 and complete inputs this coincides with dempster_combine.
/// Throws TotalConflictError at k = 1 and std::invalid_argument on
/// mismatched domains.
DNumber combine(const DNumber& d1, const DNumber& d2, double epsilon);

/// Sequential fold of combine over already-discounted inputs. The rule is
/// associative, so the order does not affect the result.
DNumber combine_all(std::span<const DNumber> ds, double epsilon);

/// Conversions for the exclusive (epsilon = 0) degeneration: a complete
/// D number is exactly a mass function over its domain.
MassFunction to_mass_function(const DNumber& d);
DNumber from_mass_function(const MassFunction& m);

}  // namespace dnt

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dnt/errors.hpp"
#include "dnt/labels.hpp"

namespace dnt {

/// Unit-sum slack for mass functions and distributions.
inline constexpr double kMassTolerance = 1e-9;
/// Masses below this are pruned after combination to keep maps sparse.
inline constexpr double kMassPruneThreshold = 1e-12;

/// Basic probability assignment over a frame: masses on nonempty subsets
/// (bitmasks over the frame), summing to 1 within kMassTolerance. The empty
/// set never carries mass.
class MassFunction {
 public:
  MassFunction(Frame frame, std::map<std::uint64_t, double> masses);

  static MassFunction vacuous(Frame frame);

  const Frame& frame() const { return frame_; }
  const std::map<std::uint64_t, double>& masses() const { return masses_; }
  double mass(std::uint64_t subset) const;
  double total_mass() const;

  bool operator==(const MassFunction&) const = default;

 private:
  Frame frame_;
  std::map<std::uint64_t, double> masses_;
};

/// Bel(A): sum of masses of subsets of A. A must lie within the frame.
double belief(const MassFunction& m, std::uint64_t subset);

/// Pl(A): sum of masses of subsets intersecting A; always >= Bel(A).
double plausibility(const MassFunction& m, std::uint64_t subset);

/// Reliability discounting: m'(A) = alpha * m(A) for proper subsets,
/// m'(Theta) = 1 - alpha + alpha * m(Theta). alpha must be in [0, 1].
MassFunction discount(const MassFunction& m, double alpha);

/// Dempster's rule: normalized product-intersection combination.
/// Throws TotalConflictError when the conflict coefficient k reaches 1.
MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2);

/// Pignistic transformation: BetP per frame element, in frame order.
/// Output sums to 1.
std::vector<double> pignistic(const MassFunction& m);

}  // namespace dnt

#include "dnt/evidence.hpp"

#include <cmath>
#include <stdexcept>

namespace dnt {

namespace {

void require_subset(const Frame& frame, std::uint64_t subset, const char* op) {
  if ((subset & ~frame.full_mask()) != 0) {
    throw std::invalid_argument(std::string(op) +
                                ": subset is not within the frame");
  }
}

}  // namespace

MassFunction::MassFunction(Frame frame, std::map<std::uint64_t, double> masses)
    : frame_(std::move(frame)), masses_(std::move(masses)) {
  double total = 0.0;
  for (const auto& [subset, value] : masses_) {
    if (subset == 0) {
      throw std::invalid_argument("mass on the empty set is not allowed");
    }
    require_subset(frame_, subset, "mass function");
    if (!(value > 0.0) || value > 1.0 + kMassTolerance) {
      throw std::invalid_argument("masses must lie in (0, 1]");
    }
    total += value;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw std::invalid_argument("masses must sum to 1");
  }
}

MassFunction MassFunction::vacuous(Frame frame) {
  std::map<std::uint64_t, double> masses{{frame.full_mask(), 1.0}};
  return {std::move(frame), std::move(masses)};
}

double MassFunction::mass(std::uint64_t subset) const {
  auto it = masses_.find(subset);
  return it == masses_.end() ? 0.0 : it->second;
}

double MassFunction::total_mass() const {
  double total = 0.0;
  for (const auto& [subset, value] : masses_) {
    total += value;
  }
  return total;
}

double belief(const MassFunction& m, std::uint64_t subset) {
  require_subset(m.frame(), subset, "belief");
  double total = 0.0;
  for (const auto& [focal, value] : m.masses()) {
    if ((focal & ~subset) == 0) {
      total += value;
    }
  }
  return total;
}

double plausibility(const MassFunction& m, std::uint64_t subset) {
  require_subset(m.frame(), subset, "plausibility");
  double total = 0.0;
  for (const auto& [focal, value] : m.masses()) {
    if ((focal & subset) != 0) {
      total += value;
    }
  }
  return total;
}

MassFunction discount(const MassFunction& m, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("discount coefficient must lie in [0, 1]");
  }
  const std::uint64_t full = m.frame().full_mask();
  std::map<std::uint64_t, double> out;
  double theta = 1.0 - alpha + alpha * m.mass(full);
  for (const auto& [focal, value] : m.masses()) {
    if (focal == full) {
      continue;
    }
    const double v = alpha * value;
    if (v > 0.0) {
      out[focal] = v;
    }
  }
  if (theta > 0.0) {
    out[full] = theta;
  }
  return {m.frame(), std::move(out)};
}

MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2) {
  if (!(m1.frame() == m2.frame())) {
    throw std::invalid_argument("dempster_combine requires a common frame");
  }
  std::map<std::uint64_t, double> products;
  double conflict = 0.0;
  for (const auto& [b, vb] : m1.masses()) {
    for (const auto& [c, vc] : m2.masses()) {
      const std::uint64_t inter = b & c;
      const double v = vb * vc;
      if (inter == 0) {
        conflict += v;
      } else {
        products[inter] += v;
      }
    }
  }
  const double norm = 1.0 - conflict;
  if (norm <= kMassPruneThreshold) {
    throw TotalConflictError("total conflict: combination is undefined");
  }
  std::map<std::uint64_t, double> out;
  for (const auto& [subset, value] : products) {
    const double v = value / norm;
    if (v > kMassPruneThreshold) {
      out[subset] = v;
    }
  }
  return {m1.frame(), std::move(out)};
}

std::vector<double> pignistic(const MassFunction& m) {
  const std::size_t n = m.frame().size();
  std::vector<double> out(n, 0.0);
  for (const auto& [focal, value] : m.masses()) {
    const double share = value / subset_size(focal);
    for (std::size_t i = 0; i < n; ++i) {
      if (focal & (std::uint64_t{1} << i)) {
        out[i] += share;
      }
    }
  }
  return out;
}

}  // namespace dnt

#include "dnt/dnumbers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dnt {

DNumber::DNumber(LabelSet domain, std::map<std::uint64_t, double> masses,
                 double theta_mass)
    : domain_(std::move(domain)), masses_(std::move(masses)),
      theta_mass_(theta_mass) {
  if (theta_mass_ < 0.0) {
    throw std::invalid_argument("theta mass must be nonnegative");
  }
  const std::uint64_t full = domain_.full_mask();
  if (auto it = masses_.find(full); it != masses_.end()) {
    theta_mass_ += it->second;  // full-domain mass is theta by definition
    masses_.erase(it);
  }
  double total = theta_mass_;
  for (const auto& [subset, value] : masses_) {
    if (subset == 0) {
      throw std::invalid_argument("closed world: no mass on the empty set");
    }
    if ((subset & ~full) != 0) {
      throw std::invalid_argument("focal element is not within the domain");
    }
    if (!(value > 0.0) || value > 1.0 + kMassTolerance) {
      throw std::invalid_argument("masses must lie in (0, 1]");
    }
    total += value;
  }
  if (total > 1.0 + kMassTolerance) {
    throw std::invalid_argument("total mass of a D number cannot exceed 1");
  }
}

DNumber DNumber::vacuous(LabelSet domain) {
  return {std::move(domain), {}, 1.0};
}

double DNumber::total_mass() const {
  double total = theta_mass_;
  for (const auto& [subset, value] : masses_) {
    total += value;
  }
  return total;
}

double DNumber::mass(std::uint64_t subset) const {
  if (subset == domain_.full_mask()) {
    return theta_mass_;
  }
  auto it = masses_.find(subset);
  return it == masses_.end() ? 0.0 : it->second;
}

Completeness completeness(const DNumber& d) {
  const double deficit = 1.0 - d.total_mass();
  if (std::abs(deficit) <= kMassTolerance) {
    return {true, 0.0};
  }
  return {false, deficit};
}

DNumber fold_deficit_to_theta(const DNumber& d) {
  const auto c = completeness(d);
  if (c.complete) {
    return d;
  }
  return {d.domain(), d.masses(), d.theta_mass() + c.deficit};
}

PairedDNumber::PairedDNumber(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  double total = 0.0;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (!std::isfinite(pairs_[i].value)) {
      throw std::invalid_argument("paired values must be finite");
    }
    if (!(pairs_[i].mass > 0.0)) {
      throw std::invalid_argument("paired masses must be positive");
    }
    total += pairs_[i].mass;
    for (std::size_t j = 0; j < i; ++j) {
      if (pairs_[j].value == pairs_[i].value) {
        throw std::invalid_argument("paired values must be pairwise distinct");
      }
    }
  }
  if (total > 1.0 + kMassTolerance) {
    throw std::invalid_argument("paired masses cannot sum above 1");
  }
}

bool PairedDNumber::operator==(const PairedDNumber& other) const {
  if (pairs_.size() != other.pairs_.size()) {
    return false;
  }
  auto sorted = [](std::vector<Pair> ps) {
    std::sort(ps.begin(), ps.end(),
              [](const Pair& a, const Pair& b) { return a.value < b.value; });
    return ps;
  };
  const auto lhs = sorted(pairs_);
  const auto rhs = sorted(other.pairs_);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i].value != rhs[i].value || lhs[i].mass != rhs[i].mass) {
      return false;
    }
  }
  return true;
}

double integrate(const PairedDNumber& d) {
  double total = 0.0;
  for (const auto& p : d.pairs()) {
    total += p.value * p.mass;
  }
  return total;
}

RelativeMatrix::RelativeMatrix(std::vector<std::string> labels,
                               std::vector<double> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  const std::size_t n = labels_.size();
  if (entries_.size() != n * n) {
    throw std::invalid_argument("relative matrix entries must be n*n");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = entries_[i * n + j];
      if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("relative degrees must lie in [0, 1]");
      }
      if (std::abs(v - entries_[j * n + i]) > 1e-12) {
        throw std::invalid_argument("relative matrix must be symmetric");
      }
    }
    if (entries_[i * n + i] != 1.0) {
      throw std::invalid_argument("relative matrix diagonal must be 1");
    }
  }
}

double RelativeMatrix::at(std::size_t i, std::size_t j) const {
  return entries_[i * labels_.size() + j];
}

RelativeMatrix relative_matrix(const LinguisticScale& scale) {
  const std::size_t n = scale.size();
  for (const auto& t : scale.terms()) {
    if (!(t.shape.area() > 0.0)) {
      throw std::invalid_argument("relative_matrix requires terms with positive area; \"" +
                                  t.label + "\" has none");
    }
  }
  std::vector<double> entries(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = scale.term(i).shape;
      const auto& b = scale.term(j).shape;
      const double inter = min_area(a, b);
      const double uni = union_area(a, b);
      const double degree = inter / uni;
      entries[i * n + j] = degree;
      entries[j * n + i] = degree;
    }
  }
  return {scale.labels(), std::move(entries)};
}

double exclusive_coefficient(const RelativeMatrix& r) {
  const std::size_t n = r.size();
  if (n < 2) {
    throw std::invalid_argument("exclusive_coefficient requires at least two labels");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      total += r.at(i, j);
    }
  }
  return total / (static_cast<double>(n) * (n - 1) / 2.0);
}

DNumber discount_by_exclusivity(const DNumber& d, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("exclusive coefficient must lie in [0, 1]");
  }
  const DNumber folded = fold_deficit_to_theta(d);
  std::map<std::uint64_t, double> out;
  for (const auto& [subset, value] : folded.masses()) {
    const double v = value * (1.0 - epsilon);
    if (v > 0.0) {
      out[subset] = v;
    }
  }
  const double theta = folded.theta_mass() * (1.0 - epsilon) + epsilon;
  return {d.domain(), std::move(out), theta};
}

DNumber combine(const DNumber& d1, const DNumber& d2, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("exclusive coefficient must lie in [0, 1]");
  }
  if (!(d1.domain() == d2.domain())) {
    throw std::invalid_argument("combine requires a common domain");
  }
  const DNumber a = fold_deficit_to_theta(d1);
  const DNumber b = fold_deficit_to_theta(d2);
  const std::uint64_t full = a.domain().full_mask();

  auto focals = [full](const DNumber& d) {
    std::vector<std::pair<std::uint64_t, double>> out(d.masses().begin(),
                                                      d.masses().end());
    if (d.theta_mass() > 0.0) {
      out.emplace_back(full, d.theta_mass());
    }
    return out;
  };

  std::map<std::uint64_t, double> products;
  double conflict = 0.0;
  for (const auto& [fb, vb] : focals(a)) {
    for (const auto& [fc, vc] : focals(b)) {
      const std::uint64_t inter = fb & fc;
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
  double theta = 0.0;
  for (const auto& [subset, value] : products) {
    const double v = value / norm;
    if (v <= kMassPruneThreshold) {
      continue;
    }
    if (subset == full) {
      theta = v;
    } else {
      out[subset] = v;
    }
  }
  return {a.domain(), std::move(out), theta};
}

DNumber combine_all(std::span<const DNumber> ds, double epsilon) {
  if (ds.empty()) {
    throw std::invalid_argument("combine_all requires at least one D number");
  }
  DNumber acc = fold_deficit_to_theta(ds[0]);
  for (const auto& d : ds.subspan(1)) {
    acc = combine(acc, d, epsilon);
  }
  return acc;
}

MassFunction to_mass_function(const DNumber& d) {
  const auto c = completeness(d);
  if (!c.complete) {
    throw std::invalid_argument(
        "only a complete D number converts to a mass function");
  }
  std::map<std::uint64_t, double> masses = d.masses();
  if (d.theta_mass() > 0.0) {
    masses[d.domain().full_mask()] += d.theta_mass();
  }
  return {d.domain(), std::move(masses)};
}

DNumber from_mass_function(const MassFunction& m) {
  return {m.frame(), m.masses(), 0.0};
}

}  // namespace dnt

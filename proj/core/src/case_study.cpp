#include "dnt/case_study.hpp"

#include <sstream>
#include <stdexcept>

#include "dnt/problem_io.hpp"

namespace dnt::case_study {

namespace {

constexpr std::string_view kProblemText =
    R"(# Engineer-hiring reference case study: three candidates assessed by
# three experts against five benefit criteria on the built-in scales.

[weight-scale]
universe = 0 1
VL = (0, 0, 0.1)
L = (0, 0.1, 0.3)
ML = (0.1, 0.3, 0.5)
M = (0.3, 0.5, 0.7)
MH = (0.5, 0.7, 0.9)
H = (0.7, 0.9, 1.0)
VH = (0.9, 1.0, 1.0)

[rating-scale]
universe = 0 10
VP = (0, 0, 1)
P = (0, 1, 3)
MP = (1, 3, 5)
F = (3, 5, 7)
MG = (5, 7, 9)
G = (7, 9, 10)
VG = (9, 10, 10)

[experts]
E1
E2
E3

[criteria]
C1
C2
C3
C4
C5

[candidates]
A1
A2
A3

[weights]
C1 = H VH MH
C2 = VH VH VH
C3 = VH H H
C4 = H H H
C5 = M MH MH

[ratings]
C1 A1 = MG G MG
C1 A2 = G G MG
C1 A3 = VG G F
C2 A1 = G MG F
C2 A2 = VG VG VG
C2 A3 = MG G VG
C3 A1 = F G G
C3 A2 = VG VG G
C3 A3 = G MG VG
C4 A1 = VG G VG
C4 A2 = VG VG VG
C4 A3 = G VG MG
C5 A1 = F F F
C5 A2 = VG MG G
C5 A3 = G G MG

[options]
msd-threshold = MG
precision = 4
)";

}  // namespace

const DecisionProblem& problem() {
  static const DecisionProblem p = parse_problem(kProblemText).problem;
  return p;
}

std::string_view problem_text() { return kProblemText; }

DNumber to_dnumber(const ReferenceMasses& masses, const LinguisticScale& scale) {
  const LabelSet domain{scale.labels()};
  std::map<std::uint64_t, double> subset_masses;
  double theta = 0.0;
  for (const auto& [key, value] : masses) {
    if (key == "theta") {
      theta = value;
      continue;
    }
    std::vector<std::string> labels;
    std::istringstream parts{key};
    for (std::string part; std::getline(parts, part, ',');) {
      labels.push_back(part);
    }
    subset_masses[domain.mask_of(labels)] = value;
  }
  return {domain, std::move(subset_masses), theta};
}

const std::vector<std::vector<TriangularFuzzyNumber>>& reference_weighted_tfns() {
  static const std::vector<std::vector<TriangularFuzzyNumber>> table{
      {{4.87, 6.56, 7.92}, {5.44, 7.13, 8.21}, {5.56, 6.96, 7.44}},
      {{4.83, 6.77, 8.38}, {8.70, 9.67, 9.67}, {6.77, 8.38, 9.34}},
      {{5.01, 6.81, 8.03}, {7.52, 8.71, 9.00}, {6.30, 7.81, 8.71}},
      {{7.22, 8.38, 8.67}, {7.80, 8.67, 8.67}, {6.07, 7.51, 8.38}},
      {{1.90, 3.17, 4.43}, {4.30, 5.40, 6.10}, {3.97, 5.23, 6.10}},
  };
  return table;
}

const std::vector<std::vector<ReferenceMasses>>& reference_stage_dnumbers() {
  static const std::vector<std::vector<ReferenceMasses>> table{
      {
          {{"MP,F", 0.0015}, {"F", 0.0744}, {"F,MG", 0.3279}, {"MG", 0.4215},
           {"MG,G", 0.0826}, {"theta", 0.0921}},
          {{"F,MG", 0.2381}, {"MG", 0.5853}, {"MG,G", 0.1716}, {"theta", 0.0050}},
          {{"F,MG", 0.3244}, {"MG", 0.6330}, {"MG,G", 0.0415}, {"theta", 0.0011}},
      },
      {
          {{"MP,F", 0.0021}, {"F", 0.0529}, {"F,MG", 0.2817}, {"MG", 0.4611},
           {"MG,G", 0.1486}, {"theta", 0.0536}},
          {{"MG,G", 0.0312}, {"G", 0.3377}, {"G,VG", 0.4032}, {"VG", 0.0596},
           {"theta", 0.1983}},
          {{"F,MG", 0.0057}, {"MG", 0.1412}, {"MG,G", 0.3891}, {"G", 0.3077},
           {"G,VG", 0.0230}, {"theta", 0.1333}},
      },
      {
          {{"F", 0.0141}, {"F,MG", 0.3310}, {"MG", 0.5039}, {"MG,G", 0.1091},
           {"theta", 0.0419}},
          {{"MG", 0.4639}, {"MG,G", 0.4907}, {"theta", 0.0454}},
          {{"F,MG", 0.0579}, {"MG", 0.3889}, {"MG,G", 0.3832}, {"G", 0.0352},
           {"theta", 0.1348}},
      },
      {
          {{"MG", 0.0416}, {"MG,G", 0.6060}, {"G", 0.1942}, {"theta", 0.1582}},
          {{"MG", 0.5141}, {"MG,G", 0.4377}, {"theta", 0.0482}},
          {{"F,MG", 0.1088}, {"MG", 0.5370}, {"MG,G", 0.2873}, {"theta", 0.0669}},
      },
      {
          {{"P,MP", 0.1463}, {"MP", 0.5939}, {"MP,F", 0.2479}, {"theta", 0.0119}},
          {{"MP,F", 0.0878}, {"F", 0.6235}, {"F,MG", 0.2490}, {"theta", 0.0397}},
          {{"MP,F", 0.1528}, {"F", 0.6349}, {"F,MG", 0.1979}, {"theta", 0.0144}},
      },
  };
  return table;
}

const std::vector<ReferenceMasses>& reference_fused() {
  static const std::vector<ReferenceMasses> table{
      {{"P,MP", 0.00083}, {"MP", 0.00346}, {"MP,F", 0.00146}, {"F", 0.03973},
       {"F,MG", 0.01988}, {"MG", 0.92027}, {"MG,G", 0.01127}, {"G", 0.00278},
       {"theta", 0.00032}},
      {{"MP,F", 0.00027}, {"F", 0.01096}, {"F,MG", 0.00561}, {"MG", 0.54548},
       {"MG,G", 0.05219}, {"G", 0.38467}, {"G,VG", 0.00049}, {"VG", 0.00007},
       {"theta", 0.00026}},
      {{"MP,F", 0.00016}, {"F", 0.01418}, {"F,MG", 0.00569}, {"MG", 0.97317},
       {"MG,G", 0.00408}, {"G", 0.00265}, {"G,VG", 0.00001}, {"theta", 0.00006}},
  };
  return table;
}

const std::vector<SingletonDistribution>& reference_distributions() {
  static const std::vector<SingletonDistribution> table{
      {{"VP", "P", "MP", "F", "MG", "G", "VG"},
       {0.000094, 0.000503, 0.004567, 0.050428, 0.935062, 0.009252, 0.000094}},
      {{"VP", "P", "MP", "F", "MG", "G", "VG"},
       {0.000075, 0.000025, 0.000153, 0.013921, 0.570672, 0.414680, 0.000474}},
      {{"VP", "P", "MP", "F", "MG", "G", "VG"},
       {0.000018, 0.000006, 0.000084, 0.017102, 0.977771, 0.004996, 0.000023}},
  };
  return table;
}

const std::vector<double>& reference_msd() {
  static const std::vector<double> values{0.9444, 0.9858, 0.9828};
  return values;
}

const std::vector<std::string>& reference_ranking() {
  static const std::vector<std::string> order{"A2", "A3", "A1"};
  return order;
}

double reference_epsilon() { return 0.0431; }

}  // namespace dnt::case_study

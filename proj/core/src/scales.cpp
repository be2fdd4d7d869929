#include "dnt/linguistic_scale.hpp"

namespace dnt::scales {

const LinguisticScale& importance_weights() {
  static const LinguisticScale scale{
      {
          {"VL", {0.0, 0.0, 0.1}},
          {"L", {0.0, 0.1, 0.3}},
          {"ML", {0.1, 0.3, 0.5}},
          {"M", {0.3, 0.5, 0.7}},
          {"MH", {0.5, 0.7, 0.9}},
          {"H", {0.7, 0.9, 1.0}},
          {"VH", {0.9, 1.0, 1.0}},
      },
      {0.0, 1.0}};
  return scale;
}

const LinguisticScale& performance_ratings() {
  static const LinguisticScale scale{
      {
          {"VP", {0.0, 0.0, 1.0}},
          {"P", {0.0, 1.0, 3.0}},
          {"MP", {1.0, 3.0, 5.0}},
          {"F", {3.0, 5.0, 7.0}},
          {"MG", {5.0, 7.0, 9.0}},
          {"G", {7.0, 9.0, 10.0}},
          {"VG", {9.0, 10.0, 10.0}},
      },
      {0.0, 10.0}};
  return scale;
}

}  // namespace dnt::scales

#pragma once

#include <span>

#include "dnt/fuzzy.hpp"

namespace dnt::detail {

// Exact area under min(f, max(g_1, ..., g_k)); the part of f covered by the
// envelope of the g's. Defined in fuzzy.cpp.
double covered_area(const PiecewiseLinearCurve& f,
                    std::span<const PiecewiseLinearCurve> envelope_terms);

}  // namespace dnt::detail

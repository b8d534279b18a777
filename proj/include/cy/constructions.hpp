#pragma once

#include <optional>

#include "cy/series.hpp"
#include "cy/theta_op.hpp"

namespace cy {

struct FitSpec {
    int max_order = 4;  // rho: max theta-degree
    int max_degree = 2; // delta: max z-degree
    int guard = 8;      // extra coefficients beyond the minimal solve window
};

PowerSeries hadamard_series(const PowerSeries& f, const PowerSeries& g);

// minimal (rho+delta, then rho) theta-operator annihilating A on all
// available coefficients, or nullopt
std::optional<ThetaOperator> fit_operator(const PowerSeries& A, const FitSpec& spec);

} // namespace cy

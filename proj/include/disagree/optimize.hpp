#pragma once

#include <functional>

#include "disagree/views.hpp"

namespace disagree {

struct GridMax {
    double arg = 0.0;
    double value = 0.0;
    bool tie = false;  // another non-adjacent point is within tie tolerance of the max
};

inline constexpr double kTieTolerance = 1e-12;

inline bool within_tie(double a, double b) {
    const double scale = 1.0 + (a < 0 ? -a : a);
    const double d = a - b;
    return (d < 0 ? -d : d) <= kTieTolerance * scale;
}

// Maximizes f over the effort grid, then once more over a grid refine-times
// finer spanning one coarse cell either side of the incumbent.  Ties go to the
// lowest effort.
GridMax grid_argmax(const std::function<double(double)>& f, const EffortGrid& grid);

}  // namespace disagree

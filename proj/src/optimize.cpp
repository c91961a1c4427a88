#include "disagree/optimize.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace disagree {

GridMax grid_argmax(const std::function<double(double)>& f, const EffortGrid& grid) {
    if (grid.points < 2) throw std::invalid_argument("effort grid needs at least 2 points");
    const int n = grid.points;
    std::vector<double> vals(static_cast<std::size_t>(n));
    int best = 0;
    for (int i = 0; i < n; ++i) {
        vals[static_cast<std::size_t>(i)] = f(grid.at(i));
        if (vals[static_cast<std::size_t>(i)] > vals[static_cast<std::size_t>(best)] &&
            !within_tie(vals[static_cast<std::size_t>(i)], vals[static_cast<std::size_t>(best)]))
            best = i;
    }
    GridMax out;
    const double top = vals[static_cast<std::size_t>(best)];
    for (int i = 0; i < n; ++i)
        if (std::abs(i - best) > 1 && within_tie(vals[static_cast<std::size_t>(i)], top)) out.tie = true;

    out.arg = grid.at(best);
    out.value = top;
    const int r = std::max(1, grid.refine);
    if (r == 1) return out;
    // Fine points are computed from integer indices so the coarse incumbent is reproduced exactly.
    const double denom = static_cast<double>(n - 1) * r;
    const long lo = std::max<long>(0, static_cast<long>(best - 1) * r);
    const long hi = std::min<long>(static_cast<long>(n - 1) * r, static_cast<long>(best + 1) * r);
    for (long j = lo; j <= hi; ++j) {
        if (j == static_cast<long>(best) * r) continue;
        const double e = grid.b * static_cast<double>(j) / denom;
        const double v = f(e);
        const bool better = v > out.value && !within_tie(v, out.value);
        const bool lower_tie = within_tie(v, out.value) && e < out.arg;
        if (better) out.value = v;
        if (better || lower_tie) out.arg = e;
    }
    return out;
}

}  // namespace disagree

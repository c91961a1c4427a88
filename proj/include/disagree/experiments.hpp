#pragma once

// Dichotomous experiments, Neyman-Pearson power curves and the Blackwell order.
//
// For two-state experiments, a is Blackwell more informative than b iff for
// both choices of null state the most powerful size-alpha test on a is at
// least as powerful as the one on b at every alpha.  Power curves are concave
// and piecewise linear, so comparing them on the union of both curves'
// breakpoints (plus a uniform alpha grid) decides dominance exactly.

#include <span>
#include <vector>

#include "disagree/views.hpp"

namespace disagree {

using Signal = std::vector<double>;

class DichotomousExperiment {
public:
    DichotomousExperiment(std::vector<Signal> support, std::vector<double> p_null, std::vector<double> p_alt);
    // Scalar signals.
    DichotomousExperiment(const std::vector<double>& support, std::vector<double> p_null, std::vector<double> p_alt);

    const std::vector<Signal>& support() const { return support_; }
    const std::vector<double>& p_null() const { return p_null_; }
    const std::vector<double>& p_alt() const { return p_alt_; }
    std::size_t size() const { return p_null_.size(); }

    // Same experiment with the roles of the two states exchanged.
    DichotomousExperiment swapped() const;

private:
    std::vector<Signal> support_;
    std::vector<double> p_null_;
    std::vector<double> p_alt_;
};

// Pi_e = (H(.|e), L(.|e)) on the pair's shared support; H is the null state.
DichotomousExperiment view_experiment(const TechnologyViewPair& pair, double e);

// Independent product: signals are concatenated, probabilities multiply.
DichotomousExperiment product(const DichotomousExperiment& a, const DichotomousExperiment& b);

inline constexpr double kRatioTieTolerance = 1e-10;

// Atoms pooled by likelihood ratio alt/null, sorted by decreasing ratio.
// ratio == +inf for atoms impossible under the null; atoms with zero mass
// under both states are dropped.
struct RatioClass {
    double ratio;
    double null_mass;
    double alt_mass;
};

std::vector<RatioClass> pooled_ratio_classes(std::span<const double> p_null, std::span<const double> p_alt);

bool same_ratio(double a, double b);

// Maximal power as a function of size: piecewise linear through
// (size, power) knots, starting at (0, alt mass of null-impossible signals).
class PowerCurve {
public:
    explicit PowerCurve(const std::vector<RatioClass>& classes);

    double operator()(double alpha) const;
    const std::vector<double>& sizes() const { return sizes_; }
    const std::vector<double>& powers() const { return powers_; }

private:
    std::vector<double> sizes_;
    std::vector<double> powers_;
};

PowerCurve power_curve(const DichotomousExperiment& x);
std::vector<double> power_curve(const DichotomousExperiment& x, std::span<const double> alphas);

inline constexpr double kBlackwellTolerance = 1e-9;
inline constexpr int kDefaultAlphaGrid = 1001;

struct BlackwellVerdict {
    bool dominates = false;
    bool equivalent = false;
};

std::vector<double> uniform_alpha_grid(int points = kDefaultAlphaGrid);

BlackwellVerdict blackwell_geq(const DichotomousExperiment& a, const DichotomousExperiment& b,
                               std::span<const double> alpha_grid, double tol = kBlackwellTolerance);
BlackwellVerdict blackwell_geq(const DichotomousExperiment& a, const DichotomousExperiment& b,
                               double tol = kBlackwellTolerance);

// True iff (H, L) and (L, H) are Blackwell equivalent at every grid effort.
bool check_equal_falsifiability(const TechnologyViewPair& pair, std::span<const double> efforts,
                                double tol = kBlackwellTolerance);
bool check_equal_falsifiability(const TechnologyViewPair& pair, const EffortGrid& grid,
                                double tol = kBlackwellTolerance);

}  // namespace disagree

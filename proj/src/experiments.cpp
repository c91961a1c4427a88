#include "disagree/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace disagree {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_probability_vector(const std::vector<double>& p, std::size_t n, const char* what) {
    if (p.size() != n) throw std::invalid_argument(std::string(what) + ": length differs from support");
    double s = 0.0;
    for (double x : p) {
        if (!(x >= 0.0)) throw std::invalid_argument(std::string(what) + ": negative probability");
        s += x;
    }
    if (std::abs(s - 1.0) > 1e-9) throw std::invalid_argument(std::string(what) + ": does not sum to 1");
}

std::vector<Signal> scalar_signals(const std::vector<double>& support) {
    std::vector<Signal> out;
    out.reserve(support.size());
    for (double y : support) out.push_back(Signal{y});
    return out;
}

}  // namespace

DichotomousExperiment::DichotomousExperiment(std::vector<Signal> support, std::vector<double> p_null,
                                             std::vector<double> p_alt)
    : support_(std::move(support)), p_null_(std::move(p_null)), p_alt_(std::move(p_alt)) {
    check_probability_vector(p_null_, support_.size(), "p_null");
    check_probability_vector(p_alt_, support_.size(), "p_alt");
}

DichotomousExperiment::DichotomousExperiment(const std::vector<double>& support, std::vector<double> p_null,
                                             std::vector<double> p_alt)
    : DichotomousExperiment(scalar_signals(support), std::move(p_null), std::move(p_alt)) {}

DichotomousExperiment DichotomousExperiment::swapped() const {
    return DichotomousExperiment(support_, p_alt_, p_null_);
}

DichotomousExperiment view_experiment(const TechnologyViewPair& pair, double e) {
    OutputDistribution h = pair.distribution(Stance::H, e);
    OutputDistribution l = pair.distribution(Stance::L, e);
    return DichotomousExperiment(h.values, std::move(h.probs), std::move(l.probs));
}

DichotomousExperiment product(const DichotomousExperiment& a, const DichotomousExperiment& b) {
    std::vector<Signal> support;
    std::vector<double> pn;
    std::vector<double> pa;
    const std::size_t n = a.size() * b.size();
    support.reserve(n);
    pn.reserve(n);
    pa.reserve(n);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            Signal s = a.support()[i];
            s.insert(s.end(), b.support()[j].begin(), b.support()[j].end());
            support.push_back(std::move(s));
            pn.push_back(a.p_null()[i] * b.p_null()[j]);
            pa.push_back(a.p_alt()[i] * b.p_alt()[j]);
        }
    return DichotomousExperiment(std::move(support), std::move(pn), std::move(pa));
}

bool same_ratio(double a, double b) {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    return std::abs(a - b) <= kRatioTieTolerance * std::max(std::abs(a), std::abs(b));
}

std::vector<RatioClass> pooled_ratio_classes(std::span<const double> p_null, std::span<const double> p_alt) {
    if (p_null.size() != p_alt.size()) throw std::invalid_argument("pooled_ratio_classes: length mismatch");
    std::vector<RatioClass> atoms;
    atoms.reserve(p_null.size());
    for (std::size_t i = 0; i < p_null.size(); ++i) {
        const double n = p_null[i];
        const double a = p_alt[i];
        if (n <= 0.0 && a <= 0.0) continue;
        atoms.push_back({n > 0.0 ? a / n : kInf, n, a});
    }
    std::stable_sort(atoms.begin(), atoms.end(), [](const RatioClass& x, const RatioClass& y) { return x.ratio > y.ratio; });
    std::vector<RatioClass> classes;
    for (const RatioClass& r : atoms) {
        if (!classes.empty() && same_ratio(classes.back().ratio, r.ratio)) {
            classes.back().null_mass += r.null_mass;
            classes.back().alt_mass += r.alt_mass;
        } else {
            classes.push_back(r);
        }
    }
    return classes;
}

PowerCurve::PowerCurve(const std::vector<RatioClass>& classes) {
    double size = 0.0;
    double power = 0.0;
    std::size_t k = 0;
    if (k < classes.size() && std::isinf(classes[k].ratio)) power = classes[k++].alt_mass;
    sizes_.push_back(0.0);
    powers_.push_back(power);
    for (; k < classes.size(); ++k) {
        size += classes[k].null_mass;
        power += classes[k].alt_mass;
        sizes_.push_back(std::min(size, 1.0));
        powers_.push_back(std::min(power, 1.0));
    }
}

double PowerCurve::operator()(double alpha) const {
    if (alpha <= 0.0) return powers_.front();
    if (alpha >= sizes_.back()) return powers_.back();
    auto it = std::upper_bound(sizes_.begin(), sizes_.end(), alpha);
    const std::size_t hi = static_cast<std::size_t>(it - sizes_.begin());
    const std::size_t lo = hi - 1;
    const double w = (alpha - sizes_[lo]) / (sizes_[hi] - sizes_[lo]);
    return powers_[lo] + w * (powers_[hi] - powers_[lo]);
}

PowerCurve power_curve(const DichotomousExperiment& x) {
    return PowerCurve(pooled_ratio_classes(x.p_null(), x.p_alt()));
}

std::vector<double> power_curve(const DichotomousExperiment& x, std::span<const double> alphas) {
    const PowerCurve pc = power_curve(x);
    std::vector<double> out;
    out.reserve(alphas.size());
    for (double a : alphas) {
        if (!(a >= 0.0 && a <= 1.0)) throw std::domain_error("size level outside [0, 1]");
        out.push_back(pc(a));
    }
    return out;
}

std::vector<double> uniform_alpha_grid(int points) {
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = static_cast<double>(i) / (points - 1);
    return g;
}

namespace {

bool curve_geq(const PowerCurve& a, const PowerCurve& b, std::span<const double> grid, double tol) {
    const auto check = [&](double x) { return a(x) >= b(x) - tol; };
    return std::all_of(grid.begin(), grid.end(), check) && std::all_of(a.sizes().begin(), a.sizes().end(), check) &&
           std::all_of(b.sizes().begin(), b.sizes().end(), check);
}

}  // namespace

BlackwellVerdict blackwell_geq(const DichotomousExperiment& a, const DichotomousExperiment& b,
                               std::span<const double> alpha_grid, double tol) {
    const PowerCurve a1 = power_curve(a);
    const PowerCurve b1 = power_curve(b);
    const PowerCurve a2 = power_curve(a.swapped());
    const PowerCurve b2 = power_curve(b.swapped());
    BlackwellVerdict v;
    v.dominates = curve_geq(a1, b1, alpha_grid, tol) && curve_geq(a2, b2, alpha_grid, tol);
    v.equivalent = v.dominates && curve_geq(b1, a1, alpha_grid, tol) && curve_geq(b2, a2, alpha_grid, tol);
    return v;
}

BlackwellVerdict blackwell_geq(const DichotomousExperiment& a, const DichotomousExperiment& b, double tol) {
    return blackwell_geq(a, b, uniform_alpha_grid(), tol);
}

bool check_equal_falsifiability(const TechnologyViewPair& pair, std::span<const double> efforts, double tol) {
    const auto grid = uniform_alpha_grid();
    for (double e : efforts) {
        const DichotomousExperiment x = view_experiment(pair, e);
        if (!blackwell_geq(x, x.swapped(), grid, tol).equivalent) return false;
    }
    return true;
}

bool check_equal_falsifiability(const TechnologyViewPair& pair, const EffortGrid& grid, double tol) {
    return check_equal_falsifiability(pair, grid.values(), tol);
}

}  // namespace disagree

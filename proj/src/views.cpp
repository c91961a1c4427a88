#include "disagree/views.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "disagree/experiments.hpp"
#include "disagree/optimize.hpp"
#include "disagree/payoff.hpp"

namespace disagree {

namespace {

constexpr double kMassTolerance = 1e-12;
constexpr double kCdfTolerance = 1e-12;

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double truncated_normal_cdf(double z) {
    const double t = kGaussianTruncation;
    if (z <= -t) return 0.0;
    if (z >= t) return 1.0;
    const double lo = std_normal_cdf(-t);
    return (std_normal_cdf(z) - lo) / (1.0 - 2.0 * lo);
}

double triangular_cdf(double x, double w) {
    if (x <= -w) return 0.0;
    if (x >= w) return 1.0;
    if (x <= 0.0) return (x + w) * (x + w) / (2.0 * w * w);
    return 1.0 - (w - x) * (w - x) / (2.0 * w * w);
}

void normalize(std::vector<double>& p) {
    const double s = std::accumulate(p.begin(), p.end(), 0.0);
    if (!(s > 0.0)) throw std::logic_error("discretized distribution has no mass");
    for (double& x : p) x /= s;
}

double overlap(double lo, double hi, double a, double b) { return std::max(0.0, std::min(hi, b) - std::max(lo, a)); }

}  // namespace

std::string to_string(Stance s) { return s == Stance::H ? "H" : "L"; }

std::string to_string(Family f) {
    switch (f) {
        case Family::DiscreteBandit: return "DiscreteBandit";
        case Family::AdditiveNoise: return "AdditiveNoise";
        case Family::UniformLinear: return "UniformLinear";
        case Family::InverseInfoLinear: return "InverseInfoLinear";
    }
    return "?";
}

std::optional<Family> parse_family(const std::string& name) {
    for (Family f : {Family::DiscreteBandit, Family::AdditiveNoise, Family::UniformLinear, Family::InverseInfoLinear})
        if (to_string(f) == name) return f;
    return std::nullopt;
}

std::optional<Stance> parse_stance(const std::string& name) {
    if (name == "H") return Stance::H;
    if (name == "L") return Stance::L;
    return std::nullopt;
}

double OutputDistribution::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) m += values[i] * probs[i];
    return m;
}

double OutputDistribution::cdf(double y) const {
    double c = 0.0;
    for (std::size_t i = 0; i < values.size() && values[i] <= y; ++i) c += probs[i];
    return std::min(c, 1.0);
}

std::optional<std::size_t> find_atom(std::span<const double> values, double y) {
    auto it = std::lower_bound(values.begin(), values.end(), y);
    const auto close = [y](double v) { return std::abs(v - y) <= 1e-9 * std::max(1.0, std::abs(y)); };
    if (it != values.end() && close(*it)) return static_cast<std::size_t>(it - values.begin());
    if (it != values.begin() && close(*(it - 1))) return static_cast<std::size_t>(it - values.begin() - 1);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// TechnologyViewPair

TechnologyViewPair::TechnologyViewPair(Family f, FamilyParams p, double b, int atoms)
    : family_(f), params_(p), b_(b), atoms_(atoms) {
    if (!(b > 0.0)) throw std::invalid_argument("effort bound b must be positive");
    if (atoms < 3) throw std::invalid_argument("output grid needs at least 3 atoms");
}

TechnologyViewPair TechnologyViewPair::discrete_bandit(BanditParams p, double b) {
    if (!(p.r >= 0.0)) throw std::invalid_argument("DiscreteBandit: r must be >= 0");
    if (!(p.R > p.r)) throw std::invalid_argument("DiscreteBandit: R must exceed r");
    if (!(p.lambda > 0.0)) throw std::invalid_argument("DiscreteBandit: lambda must be positive");
    TechnologyViewPair pair(Family::DiscreteBandit, p, b, 3);
    pair.fixed_grid_ = p.r == 0.0 ? std::vector<double>{0.0, p.R} : std::vector<double>{0.0, p.r, p.R};
    return pair;
}

TechnologyViewPair TechnologyViewPair::additive_noise(AdditiveNoiseParams p, double b, int atoms) {
    if (!(p.slope_L >= 0.0)) throw std::invalid_argument("AdditiveNoise: slope_L must be >= 0");
    if (!(p.slope_H > p.slope_L)) throw std::invalid_argument("AdditiveNoise: slope_H must exceed slope_L");
    if (!(p.scale > 0.0)) throw std::invalid_argument("AdditiveNoise: noise scale must be positive");
    if (atoms % 2 == 0) ++atoms;
    TechnologyViewPair pair(Family::AdditiveNoise, p, b, atoms);
    const double half_range = 0.5 * (p.slope_H - p.slope_L) * b + pair.noise_hi();
    pair.spacing_ = half_range / static_cast<double>((atoms - 1) / 2);
    return pair;
}

TechnologyViewPair TechnologyViewPair::uniform_linear(UniformLinearParams p, double b, int atoms) {
    if (!(p.gamma_H > 0.0)) throw std::invalid_argument("UniformLinear: gamma_H must be positive");
    if (!(p.psi > 0.0)) throw std::invalid_argument("UniformLinear: psi must be positive");
    TechnologyViewPair pair(Family::UniformLinear, p, b, atoms);
    // Cells of width 2 psi / n tile [-psi, gamma_H b + psi] with atoms at the
    // cell midpoints, so +-psi are cell edges and every cell inside the H/L
    // overlap has likelihood ratio exactly one.
    const double span = p.gamma_H * b + 2.0 * p.psi;
    const double target = span / static_cast<double>(atoms - 1);
    int n_noise = static_cast<int>(std::lround(2.0 * p.psi / target));
    n_noise = std::max(2, n_noise + (n_noise % 2));
    pair.spacing_ = 2.0 * p.psi / n_noise;
    const int cells = static_cast<int>(std::ceil(span / pair.spacing_ - 1e-9));
    pair.fixed_grid_.resize(static_cast<std::size_t>(cells));
    for (int j = 0; j < cells; ++j) pair.fixed_grid_[static_cast<std::size_t>(j)] = -p.psi + (j + 0.5) * pair.spacing_;
    pair.atoms_ = cells;
    return pair;
}

TechnologyViewPair TechnologyViewPair::inverse_info_linear(InverseInfoParams p, double b, int atoms) {
    if (!(p.gamma0 > 0.0 && p.gamma1 > 0.0)) throw std::invalid_argument("InverseInfoLinear: gamma0, gamma1 must be positive");
    if (!(p.gamma2 > p.gamma1)) throw std::invalid_argument("InverseInfoLinear: gamma2 must exceed gamma1");
    if (!(p.gamma2 * b < p.gamma0 + p.gamma1 * b))
        throw std::invalid_argument("InverseInfoLinear: requires gamma2 b < gamma0 + gamma1 b");
    if (!(p.sigma > 0.0)) throw std::invalid_argument("InverseInfoLinear: sigma must be positive");
    if (atoms % 2 == 0) ++atoms;
    TechnologyViewPair pair(Family::InverseInfoLinear, p, b, atoms);
    // The mean gap gamma0 + (gamma1 - gamma2) e is largest at e = 0.
    const double half_range = 0.5 * p.gamma0 + pair.noise_hi();
    pair.spacing_ = half_range / static_cast<double>((atoms - 1) / 2);
    return pair;
}

const std::vector<double>& TechnologyViewPair::fixed_support() const {
    if (fixed_grid_.empty()) throw std::logic_error(to_string(family_) + " has an effort-dependent support");
    return fixed_grid_;
}

void TechnologyViewPair::check_effort(double e) const {
    if (!(e >= 0.0 && e <= b_ * (1.0 + 1e-12)))
        throw std::domain_error("effort " + std::to_string(e) + " outside [0, " + std::to_string(b_) + "]");
}

double TechnologyViewPair::success_probability(double e) const {
    const auto& p = std::get<BanditParams>(params_);
    return std::min(1.0, p.lambda * e);
}

double TechnologyViewPair::mean_of(Stance s, double e) const {
    switch (family_) {
        case Family::DiscreteBandit: {
            const auto& p = std::get<BanditParams>(params_);
            return (s == Stance::H ? p.R : p.r) * success_probability(e);
        }
        case Family::AdditiveNoise: {
            const auto& p = std::get<AdditiveNoiseParams>(params_);
            return (s == Stance::H ? p.slope_H : p.slope_L) * e;
        }
        case Family::UniformLinear: {
            const auto& p = std::get<UniformLinearParams>(params_);
            return s == Stance::H ? p.gamma_H * e : 0.0;
        }
        case Family::InverseInfoLinear: {
            const auto& p = std::get<InverseInfoParams>(params_);
            return s == Stance::H ? p.gamma0 + p.gamma1 * e : p.gamma2 * e;
        }
    }
    return 0.0;
}

double TechnologyViewPair::noise_cdf(double x) const {
    switch (family_) {
        case Family::AdditiveNoise: {
            const auto& p = std::get<AdditiveNoiseParams>(params_);
            return p.noise == NoiseShape::Gaussian ? truncated_normal_cdf(x / p.scale) : triangular_cdf(x, p.scale);
        }
        case Family::InverseInfoLinear:
            return truncated_normal_cdf(x / std::get<InverseInfoParams>(params_).sigma);
        case Family::UniformLinear: {
            const double psi = std::get<UniformLinearParams>(params_).psi;
            return std::clamp((x + psi) / (2.0 * psi), 0.0, 1.0);
        }
        case Family::DiscreteBandit: break;
    }
    throw std::logic_error("noise_cdf: family has no additive noise");
}

double TechnologyViewPair::noise_hi() const {
    switch (family_) {
        case Family::AdditiveNoise: {
            const auto& p = std::get<AdditiveNoiseParams>(params_);
            return p.noise == NoiseShape::Gaussian ? kGaussianTruncation * p.scale : p.scale;
        }
        case Family::InverseInfoLinear: return kGaussianTruncation * std::get<InverseInfoParams>(params_).sigma;
        case Family::UniformLinear: return std::get<UniformLinearParams>(params_).psi;
        case Family::DiscreteBandit: break;
    }
    return 0.0;
}

double TechnologyViewPair::noise_lo() const { return -noise_hi(); }

double TechnologyViewPair::continuous_cdf(Stance s, double e, double y) const {
    return noise_cdf(y - mean_of(s, e));
}

std::vector<double> TechnologyViewPair::grid_at(double e) const {
    if (!fixed_grid_.empty()) return fixed_grid_;
    const double mid = 0.5 * (mean_of(Stance::H, e) + mean_of(Stance::L, e));
    const int half = (atoms_ - 1) / 2;
    std::vector<double> g(static_cast<std::size_t>(atoms_));
    for (int j = -half; j <= half; ++j) g[static_cast<std::size_t>(j + half)] = mid + j * spacing_;
    return g;
}

OutputDistribution TechnologyViewPair::distribution(Stance s, double e) const {
    check_effort(e);
    e = std::min(e, b_);
    OutputDistribution d;
    d.values = grid_at(e);
    d.probs.assign(d.values.size(), 0.0);
    switch (family_) {
        case Family::DiscreteBandit: {
            const auto& p = std::get<BanditParams>(params_);
            const double f = success_probability(e);
            d.probs[0] += 1.0 - f;
            d.probs[s == Stance::H ? d.values.size() - 1 : (p.r == 0.0 ? 0 : 1)] += f;
            return d;
        }
        case Family::UniformLinear: {
            const auto& p = std::get<UniformLinearParams>(params_);
            const double lo = mean_of(s, e) - p.psi;
            const double hi = mean_of(s, e) + p.psi;
            for (std::size_t j = 0; j < d.values.size(); ++j)
                d.probs[j] = overlap(d.values[j] - 0.5 * spacing_, d.values[j] + 0.5 * spacing_, lo, hi) / (2.0 * p.psi);
            break;
        }
        case Family::AdditiveNoise:
        case Family::InverseInfoLinear: {
            const double mu = mean_of(s, e);
            for (std::size_t j = 0; j < d.values.size(); ++j) {
                // cells touching the support only by rounding get no mass
                const double lo = std::max(d.values[j] - 0.5 * spacing_, mu + noise_lo());
                const double hi = std::min(d.values[j] + 0.5 * spacing_, mu + noise_hi());
                if (hi - lo <= 1e-9 * spacing_) continue;
                d.probs[j] = noise_cdf(hi - mu) - noise_cdf(lo - mu);
            }
            break;
        }
    }
    normalize(d.probs);
    return d;
}

double TechnologyViewPair::likelihood(Stance s, double e, double y) const {
    const OutputDistribution d = distribution(s, e);
    if (family_ == Family::DiscreteBandit) {
        const auto i = find_atom(d.values, y);
        return i ? d.probs[*i] : 0.0;
    }
    // continuous families: mass of the cell containing y
    const double pos = (y - (d.values.front() - 0.5 * spacing_)) / spacing_;
    if (!(pos >= 0.0) || pos >= static_cast<double>(d.size())) return 0.0;
    return d.probs[static_cast<std::size_t>(pos)];
}

double TechnologyViewPair::expected_output(Stance s, double e) const { return distribution(s, e).mean(); }

double TechnologyViewPair::model_cdf(Stance s, double e, double y) const {
    check_effort(e);
    if (family_ == Family::DiscreteBandit) return distribution(s, e).cdf(y);
    return continuous_cdf(s, e, y);
}

std::vector<double> TechnologyViewPair::cdf_probe_points(double e1, double e2) const {
    if (family_ == Family::DiscreteBandit) return fixed_grid_;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double e : {e1, e2})
        for (Stance s : {Stance::H, Stance::L}) {
            lo = std::min(lo, mean_of(s, e) + noise_lo());
            hi = std::max(hi, mean_of(s, e) + noise_hi());
        }
    std::vector<double> probes;
    constexpr int n = 2001;
    probes.reserve(n + 8);
    for (int i = 0; i < n; ++i) probes.push_back(lo + (hi - lo) * i / (n - 1));
    for (double e : {e1, e2})
        for (Stance s : {Stance::H, Stance::L}) probes.push_back(mean_of(s, e));
    std::sort(probes.begin(), probes.end());
    return probes;
}

std::string TechnologyViewPair::describe() const {
    std::ostringstream os;
    os << to_string(family_) << "(";
    std::visit(
        [&os](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, BanditParams>)
                os << "r=" << p.r << ", R=" << p.R << ", lambda=" << p.lambda;
            else if constexpr (std::is_same_v<P, AdditiveNoiseParams>)
                os << "slope_H=" << p.slope_H << ", slope_L=" << p.slope_L << ", noise="
                   << (p.noise == NoiseShape::Gaussian ? "gaussian" : "triangular") << ", scale=" << p.scale;
            else if constexpr (std::is_same_v<P, UniformLinearParams>)
                os << "gamma_H=" << p.gamma_H << ", psi=" << p.psi;
            else
                os << "gamma0=" << p.gamma0 << ", gamma1=" << p.gamma1 << ", gamma2=" << p.gamma2
                   << ", sigma=" << p.sigma;
        },
        params_);
    os << ", b=" << b_ << ")";
    return os.str();
}

double evaluate_likelihood(const TechnologyViewPair& pair, Stance view, double e, double y) {
    return pair.likelihood(view, e, y);
}

double expected_output(const TechnologyViewPair& pair, Stance view, double e) {
    return pair.expected_output(view, e);
}

// ---------------------------------------------------------------------------
// TrueProcess

TrueProcess TrueProcess::table(Table t) {
    if (t.efforts.size() < 2) throw std::invalid_argument("true-process table needs at least two effort rows");
    if (t.pmf.size() != t.efforts.size()) throw std::invalid_argument("true-process table: one pmf row per effort");
    if (!std::is_sorted(t.support.begin(), t.support.end()) || !std::is_sorted(t.efforts.begin(), t.efforts.end()))
        throw std::invalid_argument("true-process table: support and efforts must be ascending");
    for (auto& row : t.pmf) {
        if (row.size() != t.support.size()) throw std::invalid_argument("true-process table: row length != support size");
        if (std::any_of(row.begin(), row.end(), [](double p) { return !(p >= 0.0); }))
            throw std::invalid_argument("true-process table: negative probability");
        const double s = std::accumulate(row.begin(), row.end(), 0.0);
        if (std::abs(s - 1.0) > 1e-9) throw std::invalid_argument("true-process table: row does not sum to 1");
        normalize(row);
    }
    return TrueProcess(std::move(t));
}

TrueProcess TrueProcess::uniform_shift(const TechnologyViewPair& pair, double gamma, int effort_points) {
    if (pair.family() != Family::UniformLinear)
        throw std::invalid_argument("uniform_shift requires a UniformLinear view pair");
    if (!(gamma > 0.0)) throw std::invalid_argument("uniform_shift: gamma must be positive");
    const double psi = std::get<UniformLinearParams>(pair.params()).psi;
    const double h = pair.grid_spacing();
    Table t;
    t.support = pair.fixed_support();
    if (gamma * pair.effort_bound() + psi > t.support.back() + 0.5 * h + 1e-12)
        throw std::invalid_argument("uniform_shift: gamma * b + psi exceeds the output grid");
    EffortGrid eg{pair.effort_bound(), effort_points, 1};
    t.efforts = eg.values();
    for (double e : t.efforts) {
        std::vector<double> row(t.support.size());
        for (std::size_t j = 0; j < row.size(); ++j)
            row[j] = overlap(t.support[j] - 0.5 * h, t.support[j] + 0.5 * h, gamma * e - psi, gamma * e + psi) / (2.0 * psi);
        normalize(row);
        t.pmf.push_back(std::move(row));
    }
    return table(std::move(t));
}

OutputDistribution TrueProcess::distribution(const TechnologyViewPair& pair, double e) const {
    if (is_member()) return pair.distribution(stance(), e);
    const Table& t = table_data();
    if (!(e >= t.efforts.front() - 1e-12 && e <= t.efforts.back() * (1.0 + 1e-12)))
        throw std::domain_error("effort outside the true-process table");
    auto it = std::upper_bound(t.efforts.begin(), t.efforts.end(), e);
    std::size_t hi = std::min(static_cast<std::size_t>(it - t.efforts.begin()), t.efforts.size() - 1);
    std::size_t lo = hi - 1;
    const double w = std::clamp((e - t.efforts[lo]) / (t.efforts[hi] - t.efforts[lo]), 0.0, 1.0);
    OutputDistribution d;
    d.values = t.support;
    d.probs.resize(t.support.size());
    for (std::size_t j = 0; j < d.probs.size(); ++j) d.probs[j] = (1.0 - w) * t.pmf[lo][j] + w * t.pmf[hi][j];
    return d;
}

double TrueProcess::expected_output(const TechnologyViewPair& pair, double e) const {
    return distribution(pair, e).mean();
}

double TrueProcess::cdf(const TechnologyViewPair& pair, double e, double y) const {
    if (is_member()) return pair.model_cdf(stance(), e, y);
    return distribution(pair, e).cdf(y);
}

std::string TrueProcess::describe() const {
    if (is_member()) return to_string(stance());
    return "table(" + std::to_string(table_data().efforts.size()) + " rows)";
}

// ---------------------------------------------------------------------------
// EffortGrid

double EffortGrid::at(int i) const { return b * static_cast<double>(i) / static_cast<double>(points - 1); }

std::vector<double> EffortGrid::values() const {
    std::vector<double> v(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) v[static_cast<std::size_t>(i)] = at(i);
    return v;
}

// ---------------------------------------------------------------------------
// Assumption checks

namespace {

enum class Dominance { Strict, Equal, Neither };

template <class CdfHi, class CdfLo>
Dominance compare_cdfs(const std::vector<double>& probes, CdfHi hi, CdfLo lo) {
    bool strict = false;
    for (double y : probes) {
        const double a = hi(y);
        const double b = lo(y);
        if (a > b + kCdfTolerance) return Dominance::Neither;
        if (a < b - kCdfTolerance) strict = true;
    }
    return strict ? Dominance::Strict : Dominance::Equal;
}

std::vector<double> merged_probes(const TechnologyViewPair& pair, const TrueProcess& q, double e1, double e2) {
    std::vector<double> probes = pair.cdf_probe_points(e1, e2);
    if (!q.is_member()) {
        const auto& s = q.table_data().support;
        probes.insert(probes.end(), s.begin(), s.end());
        std::sort(probes.begin(), probes.end());
    }
    return probes;
}

}  // namespace

AssumptionReport validate_assumptions(const TechnologyViewPair& pair, const PayoffSpec& payoff, const EffortGrid& grid,
                                      const TrueProcess& q) {
    if (grid.points < 3) throw std::invalid_argument("validate_assumptions: grid needs at least 3 points");
    AssumptionReport rep;
    const std::vector<double> efforts = grid.values();

    rep.fosd_H = rep.fosd_L = rep.fosd_Q = true;
    for (std::size_t i = 0; i + 1 < efforts.size(); ++i) {
        const double e0 = efforts[i];
        const double e1 = efforts[i + 1];
        const auto probes = merged_probes(pair, q, e0, e1);
        for (Stance s : {Stance::H, Stance::L}) {
            const Dominance d = compare_cdfs(
                probes, [&](double y) { return pair.model_cdf(s, e1, y); },
                [&](double y) { return pair.model_cdf(s, e0, y); });
            if (s == Stance::H && d != Dominance::Strict) rep.fosd_H = false;
            if (s == Stance::L && d == Dominance::Neither) rep.fosd_L = false;
        }
        const Dominance dq = compare_cdfs(
            probes, [&](double y) { return q.cdf(pair, e1, y); }, [&](double y) { return q.cdf(pair, e0, y); });
        if (dq != Dominance::Strict) rep.fosd_Q = false;
    }
    if (!rep.fosd_H) rep.notes.push_back("H is not strictly FOSD-monotone on the effort grid");
    if (!rep.fosd_L) rep.notes.push_back("L is not FOSD-monotone on the effort grid");
    if (!rep.fosd_Q) rep.notes.push_back("Q is not strictly FOSD-monotone on the effort grid");

    rep.dominance_H_over_L = true;
    for (double e : efforts) {
        const auto probes = pair.cdf_probe_points(e, e);
        const Dominance d = compare_cdfs(
            probes, [&](double y) { return pair.model_cdf(Stance::H, e, y); },
            [&](double y) { return pair.model_cdf(Stance::L, e, y); });
        if (e == 0.0) {
            rep.zero_effort_coincide = d == Dominance::Equal;
            if (d == Dominance::Neither) rep.dominance_H_over_L = false;
        } else if (d != Dominance::Strict) {
            rep.dominance_H_over_L = false;
        }
    }
    if (!rep.dominance_H_over_L) rep.notes.push_back("H does not strictly dominate L at every positive effort");
    if (rep.zero_effort_coincide) rep.notes.push_back("H(.|0) = L(.|0): zero effort is uninformative");

    const EffortGrid opt_grid{pair.effort_bound(), grid.points, grid.refine};
    const GridMax mh = grid_argmax([&](double e) { return payoff.expected_u(pair.distribution(Stance::H, e), e); }, opt_grid);
    const GridMax ml = grid_argmax([&](double e) { return payoff.expected_u(pair.distribution(Stance::L, e), e); }, opt_grid);
    rep.e_H = mh.arg;
    rep.e_L = ml.arg;
    rep.unique_maximizers = !mh.tie && !ml.tie && pair.effort_bound() > rep.e_H && rep.e_H > rep.e_L && rep.e_L >= 0.0;
    if (!rep.unique_maximizers) rep.notes.push_back("static optima violate b > e^H > e^L >= 0 or are not unique");

    rep.informativeness_monotone = rep.informativeness_reversed = true;
    const auto alphas = uniform_alpha_grid();
    DichotomousExperiment prev = view_experiment(pair, efforts.front());
    for (std::size_t i = 1; i < efforts.size(); ++i) {
        DichotomousExperiment cur = view_experiment(pair, efforts[i]);
        if (rep.informativeness_monotone) {
            const auto up = blackwell_geq(cur, prev, alphas);
            if (!up.dominates || up.equivalent) rep.informativeness_monotone = false;
        }
        if (rep.informativeness_reversed) {
            const auto down = blackwell_geq(prev, cur, alphas);
            if (!down.dominates || down.equivalent) rep.informativeness_reversed = false;
        }
        if (!rep.informativeness_monotone && !rep.informativeness_reversed) break;
        prev = std::move(cur);
    }
    if (rep.informativeness_reversed) rep.notes.push_back("lower effort is strictly more informative");
    else if (!rep.informativeness_monotone) rep.notes.push_back("informativeness is not strictly monotone in effort");
    return rep;
}

}  // namespace disagree

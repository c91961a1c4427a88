#pragma once

// Technology views (optimistic H / skeptical L) and the objective output process.
//
// Continuous families are discretized onto a finite output grid by integrating
// the density over cells of equal width, then renormalized.  Two grid layouts
// are used:
//   - fixed: one grid for every effort (DiscreteBandit, UniformLinear);
//   - centered: a symmetric lattice centered on the midpoint of the two view
//     means at each effort (AdditiveNoise, InverseInfoLinear).  Reflection
//     about the midpoint maps H onto L exactly when the noise is symmetric.
// Model CDFs (used for first-order stochastic dominance) are the continuous
// ones for continuous families and the step CDF for the bandit.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace disagree {

enum class Stance : std::uint8_t { H, L };

enum class Family : std::uint8_t { DiscreteBandit, AdditiveNoise, UniformLinear, InverseInfoLinear };

enum class NoiseShape : std::uint8_t { Gaussian, Triangular };

std::string to_string(Stance s);
std::string to_string(Family f);
std::optional<Family> parse_family(const std::string& name);
std::optional<Stance> parse_stance(const std::string& name);

constexpr Stance other(Stance s) { return s == Stance::H ? Stance::L : Stance::H; }

// Atoms sorted by value; probabilities sum to one.
struct OutputDistribution {
    std::vector<double> values;
    std::vector<double> probs;

    double mean() const;
    double cdf(double y) const;
    std::size_t size() const { return values.size(); }
};

// Index of the atom equal to y (relative tolerance), if any.
std::optional<std::size_t> find_atom(std::span<const double> values, double y);

struct BanditParams {
    double r = 0.0;
    double R = 1.0;
    double lambda = 1.0;
};

struct AdditiveNoiseParams {
    double slope_H = 1.0;  // phi(e,H) = slope_H * e
    double slope_L = 0.5;  // phi(e,L) = slope_L * e
    NoiseShape noise = NoiseShape::Gaussian;
    double scale = 1.0;    // sigma for Gaussian, half-width for triangular
};

struct UniformLinearParams {
    double gamma_H = 1.0;
    double psi = 5.0;
};

struct InverseInfoParams {
    double gamma0 = 5.0;
    double gamma1 = 0.5;
    double gamma2 = 1.0;
    double sigma = 1.0;
};

using FamilyParams = std::variant<BanditParams, AdditiveNoiseParams, UniformLinearParams, InverseInfoParams>;

inline constexpr int kDefaultOutputAtoms = 201;
inline constexpr double kGaussianTruncation = 4.0;

class TechnologyViewPair {
public:
    static TechnologyViewPair discrete_bandit(BanditParams p, double b);
    static TechnologyViewPair additive_noise(AdditiveNoiseParams p, double b, int atoms = kDefaultOutputAtoms);
    static TechnologyViewPair uniform_linear(UniformLinearParams p, double b, int atoms = kDefaultOutputAtoms);
    static TechnologyViewPair inverse_info_linear(InverseInfoParams p, double b, int atoms = kDefaultOutputAtoms);

    Family family() const { return family_; }
    const FamilyParams& params() const { return params_; }
    double effort_bound() const { return b_; }
    int output_atoms() const { return atoms_; }

    // Discretized conditional output law.  H and L share the same support at
    // any given effort.  Throws std::domain_error if e is outside [0, b].
    OutputDistribution distribution(Stance s, double e) const;

    double likelihood(Stance s, double e, double y) const;
    double expected_output(Stance s, double e) const;

    // CDF of the view itself (continuous for continuous families).
    double model_cdf(Stance s, double e, double y) const;

    // Points at which comparing model CDFs decides dominance between efforts e1, e2.
    std::vector<double> cdf_probe_points(double e1, double e2) const;

    bool has_fixed_support() const { return !fixed_grid_.empty(); }
    const std::vector<double>& fixed_support() const;
    double grid_spacing() const { return spacing_; }

    // Bandit success curve F(e) = min(1, lambda e).
    double success_probability(double e) const;

    std::string describe() const;

private:
    TechnologyViewPair(Family f, FamilyParams p, double b, int atoms);

    void check_effort(double e) const;
    double mean_of(Stance s, double e) const;       // view mean before discretization
    double noise_cdf(double z) const;               // standardized by the family's scale
    double noise_lo() const;
    double noise_hi() const;
    double continuous_cdf(Stance s, double e, double y) const;
    std::vector<double> grid_at(double e) const;

    Family family_;
    FamilyParams params_;
    double b_;
    int atoms_;
    double spacing_ = 0.0;
    std::vector<double> fixed_grid_;
};

// Objective process for one technology: either one of the two views or an
// explicit table of output laws indexed by an effort grid (rows are
// interpolated linearly in effort).
class TrueProcess {
public:
    struct Table {
        std::vector<double> support;
        std::vector<double> efforts;
        std::vector<std::vector<double>> pmf;
    };

    static TrueProcess member(Stance s) { return TrueProcess(s); }
    static TrueProcess table(Table t);
    // Q = gamma e + U[-psi, psi] on a UniformLinear pair's grid, so E_Q[Y|e] = gamma e.
    static TrueProcess uniform_shift(const TechnologyViewPair& pair, double gamma, int effort_points);

    bool is_member() const { return std::holds_alternative<Stance>(rep_); }
    Stance stance() const { return std::get<Stance>(rep_); }
    const Table& table_data() const { return std::get<Table>(rep_); }

    OutputDistribution distribution(const TechnologyViewPair& pair, double e) const;
    double expected_output(const TechnologyViewPair& pair, double e) const;
    double cdf(const TechnologyViewPair& pair, double e, double y) const;

    std::string describe() const;

private:
    explicit TrueProcess(Stance s) : rep_(s) {}
    explicit TrueProcess(Table t) : rep_(std::move(t)) {}

    std::variant<Stance, Table> rep_;
};

// Uniform grid of efforts on [0, b].
struct EffortGrid {
    double b = 1.0;
    int points = 401;
    int refine = 10;

    double step() const { return b / static_cast<double>(points - 1); }
    double at(int i) const;
    std::vector<double> values() const;
};

class PayoffSpec;

struct AssumptionReport {
    bool fosd_Q = false;                   // objective process strictly FOSD-monotone
    bool fosd_H = false;                   // strict
    bool fosd_L = false;                   // weak
    bool dominance_H_over_L = false;       // H(.|e) FOSD L(.|e) for every e > 0
    bool zero_effort_coincide = false;     // H(.|0) == L(.|0): e = 0 is uninformative
    bool unique_maximizers = false;
    double e_H = 0.0;
    double e_L = 0.0;
    bool informativeness_monotone = false;  // higher effort strictly more informative
    bool informativeness_reversed = false;  // lower effort strictly more informative
    std::vector<std::string> notes;

    bool all_hold() const {
        return fosd_Q && fosd_H && fosd_L && dominance_H_over_L && unique_maximizers && informativeness_monotone;
    }
};

// Checks the structural assumptions on an effort grid.  Q defaults to the H member.
AssumptionReport validate_assumptions(const TechnologyViewPair& pair, const PayoffSpec& payoff,
                                      const EffortGrid& grid,
                                      const TrueProcess& q = TrueProcess::member(Stance::H));

// Free-function forms of the per-view queries.
double evaluate_likelihood(const TechnologyViewPair& pair, Stance view, double e, double y);
double expected_output(const TechnologyViewPair& pair, Stance view, double e);

}  // namespace disagree

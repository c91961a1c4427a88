#pragma once

// Expected team output under the objective process and the team-comparison verifiers.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "disagree/game.hpp"

namespace disagree {

struct MonteCarloSpec {
    std::uint64_t paths = 1'000'000;
    std::optional<std::uint64_t> seed;
};

struct TeamOutcome {
    // output[player][period] = E_Q[y^i_t]
    std::array<std::array<double, 2>, 2> output{};
    double total = 0.0;
    std::array<double, 2> switch_probability{};  // under Q
    std::array<double, 2> payoff{};              // E_Q of both stage payoffs, undiscounted
    FirstPeriodPlay play;
    std::size_t equilibrium_index = 0;
    bool monte_carlo = false;
    std::uint64_t paths = 0;
    std::uint64_t seed = 0;
    double std_error = 0.0;  // of total (Monte Carlo only)
};

// Exact evaluation of one first-period play.
TeamOutcome evaluate_play(const GameConfig& config, const StrategyProfile& profile, const FirstPeriodPlay& play);

// Y-hat: exact evaluation of the most productive equilibrium in the profile.
TeamOutcome expected_team_output(const GameConfig& config, const StrategyProfile& profile);

// Monte Carlo evaluation of one play.  Throws std::domain_error without a seed.
TeamOutcome simulate_play(const GameConfig& config, const StrategyProfile& profile, const FirstPeriodPlay& play,
                          const MonteCarloSpec& mc);

// Solve and evaluate in one step.
struct Evaluation {
    GameConfig config;
    StrategyProfile profile;
    TeamOutcome outcome;
};

Evaluation solve_and_evaluate(const GameConfig& config);

// One verdict line: lhs (relation) rhs.
struct Inequality {
    std::string name;
    std::string relation;  // ">=", ">", "<=", "==", "info"
    double lhs = 0.0;
    double rhs = 0.0;
    bool applicable = true;
    bool holds = true;
    bool strict = false;   // lhs and rhs separated by more than the tolerance
    std::string note;

    double margin() const { return lhs - rhs; }
};

std::string format_inequality(const Inequality& q);

struct ThresholdReport {
    double delta = 0.0;              // Delta_H(H, L)
    double max_bound = 0.0;          // max over the range of -(dE_H[u]/de) / (dphi/de)
    double e_hat = 0.0;              // E_Q[Y|e_hat] = 4 E_Q[Y|e^H]
    bool e_hat_attainable = false;
    bool condition_holds = false;
    bool conclusion_holds = false;   // Y(H,L,Q) > Y(H,H,Q)
    bool implication_ok = false;     // condition => conclusion
    std::vector<std::string> notes;
};

struct VerificationReport {
    std::string title;
    std::vector<Inequality> checks;
    std::vector<std::string> notes;
    std::vector<Evaluation> evaluations;
    std::vector<std::string> labels;  // one per evaluation

    bool all_hold() const;
};

// Central differences with step h (one effort-grid cell).
double central_difference(const std::function<double(double)>& f, double x, double h);

ThresholdReport strong_externality_threshold(const GameConfig& config);

// Single-technology comparisons: team formation, strong externalities and the
// unaware / myopic benchmarks.
VerificationReport verify_team_comparisons(const GameConfig& config);

// Two-technology comparisons: fixed assignment, endogenous choice and the
// half/half mixture over which technology is good.
VerificationReport verify_two_tech(const GameConfig& config);

// Negative externalities combined with inverse informativeness.
VerificationReport verify_claim1_direction(const GameConfig& config);

// Exact vs Monte Carlo agreement in units of standard error.
struct CrossCheck {
    double exact = 0.0;
    double simulated = 0.0;
    double std_error = 0.0;
    double z() const { return std_error > 0 ? (simulated - exact) / std_error : 0.0; }
};

CrossCheck cross_check(const GameConfig& config, const MonteCarloSpec& mc);

}  // namespace disagree

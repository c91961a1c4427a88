#pragma once

// Two-player, two-period production game with model disagreement.
//
// Second period: each player maximizes expected own utility under her current
// model (payoffs are separable, so the rival's model is irrelevant).
// First period: player i maximizes
//   E_{m^i}[u(Y, e) | e, k] + 1{m^A != m^B} * delta * phi(e, k; rival) * Delta_i
// where phi is the probability, computed under m^i, that the rival's switch
// test moves the rival to m^i, and Delta_i is i's subjective gain in
// externality value from the rival acting under m^i rather than m^-i.
// Equilibria are pure fixed points of simultaneous grid best responses.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "disagree/model.hpp"
#include "disagree/payoff.hpp"
#include "disagree/switching.hpp"
#include "disagree/views.hpp"

namespace disagree {

enum class Mode { Full, Myopic, Unaware };

std::string to_string(Mode m);
std::optional<Mode> parse_mode(const std::string& name);

struct Technology {
    std::string name;
    TechnologyViewPair views;
    TrueProcess truth;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GameConfig {
    std::vector<Technology> technologies;
    Model model_A;
    Model model_B;
    PayoffSpec payoff = PayoffSpec::quadratic(1.0, 0.0);
    double alpha = 0.0;
    double delta = 1.0;
    Mode mode = Mode::Full;
    std::optional<std::array<int, 2>> assignment;  // fixed first-period technologies
    EffortGrid grid;
    std::uint64_t seed = 0;

    std::size_t techs() const { return technologies.size(); }
    double effort_bound() const { return grid.b; }
    const TechnologyViewPair& pair(int k) const { return technologies.at(static_cast<std::size_t>(k)).views; }
    std::vector<TechnologyViewPair> view_pairs() const;
    const Model& model(Player p) const { return p == Player::A ? model_A : model_B; }

    // Effective discount used in first-period objectives (0 when myopic).
    double effective_delta() const { return mode == Mode::Myopic ? 0.0 : delta; }

    // Throws ConfigError on violated invariants.
    void validate() const;

    GameConfig with_models(Model a, Model b) const;
    GameConfig with_mode(Mode m) const;
    GameConfig with_truth(std::vector<TrueProcess> truth) const;
};

struct SecondPeriodChoice {
    Action action;
    bool tie = false;
};

// Static optimum under a model: grid argmax over effort, then the best
// technology (ties go to the lowest technology index).
SecondPeriodChoice solve_second_period(const Model& model, const PayoffSpec& payoff,
                                       std::span<const TechnologyViewPair> views, const EffortGrid& grid,
                                       std::optional<int> fixed_tech = std::nullopt);

struct FirstPeriodPlay {
    std::array<Action, 2> actions;  // indexed by Player

    bool operator==(const FirstPeriodPlay&) const = default;
};

struct SolverDiagnostics {
    int iterations = 0;               // for the run started at the static optima
    int starts = 0;
    int cycling_starts = 0;
    bool tie_flagged = false;
    std::vector<std::string> notes;
};

struct StrategyProfile {
    // Second-period action of a player holding a model (independent of the rival's model).
    std::map<Model, Action> second_period;
    // Distinct pure equilibria of the first period; the first one is reached
    // from the static optima.
    std::vector<FirstPeriodPlay> equilibria;
    SolverDiagnostics diagnostics;

    const FirstPeriodPlay& primary() const { return equilibria.front(); }
    Action second_period_action(const Model& m) const { return second_period.at(m); }
};

class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, std::vector<FirstPeriodPlay> cycle)
        : std::runtime_error(what), cycle_(std::move(cycle)) {}
    const std::vector<FirstPeriodPlay>& cycle() const { return cycle_; }

private:
    std::vector<FirstPeriodPlay> cycle_;
};

inline constexpr int kMaxBestResponseIterations = 500;

// Subjective gain Delta_i of player `who` from the rival acting under `who`'s model.
double persuasion_gain(Player who, const GameConfig& config, const std::map<Model, Action>& second_period);

// Probability, under `who`'s model, that the rival switches to it.
double persuasion_probability(Player who, const Action& own, const Action& rival_action, const GameConfig& config);

double first_period_objective(Player who, double e, int k, const Action& rival_action, const GameConfig& config,
                              const std::map<Model, Action>& second_period);

std::map<Model, Action> second_period_table(const GameConfig& config, bool* tie = nullptr);

struct BestResponse {
    Action action;
    double value = 0.0;
    bool tie = false;
};

BestResponse best_response(Player who, const Action& rival_action, const GameConfig& config,
                           const std::map<Model, Action>& second_period);

StrategyProfile solve_equilibrium(const GameConfig& config);

struct LemmaEffortReport {
    double optimist_disagree = 0.0;  // s^A_1e(H, L)
    double optimist_agree = 0.0;     // s^A_1e(H, H)
    double skeptic_disagree = 0.0;   // s^B_1e(H, L)
    double skeptic_agree = 0.0;      // s^B_1e(L, L)
    bool optimist_holds = false;
    bool skeptic_holds = false;
    bool optimist_strict = false;
    bool skeptic_strict = false;
    bool phi_strictly_increasing = false;

    bool holds() const { return optimist_holds && skeptic_holds; }
};

LemmaEffortReport lemma_effort_check(const GameConfig& config);

}  // namespace disagree

#include "disagree/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "disagree/optimize.hpp"

namespace disagree {

std::string to_string(Mode m) {
    switch (m) {
        case Mode::Full: return "full";
        case Mode::Myopic: return "myopic";
        case Mode::Unaware: return "unaware";
    }
    return "?";
}

std::optional<Mode> parse_mode(const std::string& name) {
    for (Mode m : {Mode::Full, Mode::Myopic, Mode::Unaware})
        if (to_string(m) == name) return m;
    return std::nullopt;
}

std::vector<TechnologyViewPair> GameConfig::view_pairs() const {
    std::vector<TechnologyViewPair> out;
    out.reserve(technologies.size());
    for (const auto& t : technologies) out.push_back(t.views);
    return out;
}

void GameConfig::validate() const {
    if (technologies.empty()) throw ConfigError("at least one technology is required");
    if (technologies.size() > 2) throw ConfigError("at most two technologies are supported");
    if (model_A.techs() != techs() || model_B.techs() != techs())
        throw ConfigError("each model needs one view per technology");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
    if (!(delta >= 0.0 && delta <= 1.0)) throw ConfigError("delta must lie in [0, 1]");
    if (!(grid.b > 0.0)) throw ConfigError("effort bound b must be positive");
    if (grid.points < 3) throw ConfigError("effort grid needs at least 3 points");
    if (grid.refine < 1) throw ConfigError("grid refinement factor must be >= 1");
    if (assignment) {
        if (techs() != 2) throw ConfigError("a fixed assignment requires two technologies");
        for (int k : *assignment)
            if (k < 0 || k > 1) throw ConfigError("assigned technology index out of range");
    }
    for (const auto& t : technologies) {
        if (std::abs(t.views.effort_bound() - grid.b) > 1e-12 * grid.b)
            throw ConfigError("technology " + t.name + ": effort bound differs from the grid bound");
        if (!t.truth.is_member()) {
            if (!t.views.has_fixed_support())
                throw ConfigError("technology " + t.name + ": tabulated Q needs a family with a fixed output grid");
            const auto& sup = t.views.fixed_support();
            const auto& tab = t.truth.table_data();
            if (tab.support.size() != sup.size())
                throw ConfigError("technology " + t.name + ": Q support differs from the output grid");
            for (std::size_t j = 0; j < sup.size(); ++j)
                if (!find_atom(sup, tab.support[j])) throw ConfigError("technology " + t.name + ": Q support differs from the output grid");
            if (tab.efforts.front() > 1e-12 || tab.efforts.back() < grid.b * (1.0 - 1e-12))
                throw ConfigError("technology " + t.name + ": Q table must cover [0, b]");
        }
    }
}

GameConfig GameConfig::with_models(Model a, Model b) const {
    GameConfig c = *this;
    c.model_A = std::move(a);
    c.model_B = std::move(b);
    return c;
}

GameConfig GameConfig::with_mode(Mode m) const {
    GameConfig c = *this;
    c.mode = m;
    return c;
}

GameConfig GameConfig::with_truth(std::vector<TrueProcess> truth) const {
    if (truth.size() != technologies.size()) throw std::invalid_argument("one true process per technology");
    GameConfig c = *this;
    for (std::size_t k = 0; k < truth.size(); ++k) c.technologies[k].truth = std::move(truth[k]);
    return c;
}

// ---------------------------------------------------------------------------

SecondPeriodChoice solve_second_period(const Model& model, const PayoffSpec& payoff,
                                       std::span<const TechnologyViewPair> views, const EffortGrid& grid,
                                       std::optional<int> fixed_tech) {
    SecondPeriodChoice best;
    double best_value = -std::numeric_limits<double>::infinity();
    bool first = true;
    for (int k = 0; k < static_cast<int>(views.size()); ++k) {
        if (fixed_tech && *fixed_tech != k) continue;
        const auto& pair = views[static_cast<std::size_t>(k)];
        const Stance s = model[static_cast<std::size_t>(k)];
        const GridMax g = grid_argmax([&](double e) { return payoff.expected_u(pair.distribution(s, e), e); }, grid);
        if (first || (g.value > best_value && !within_tie(g.value, best_value))) {
            best.action = {g.arg, k};
            best.tie = g.tie;
            best_value = g.value;
            first = false;
        } else if (within_tie(g.value, best_value)) {
            best.tie = best.tie || g.tie;
        }
    }
    return best;
}

std::map<Model, Action> second_period_table(const GameConfig& config, bool* tie) {
    const auto views = config.view_pairs();
    std::map<Model, Action> table;
    bool any_tie = false;
    for (const Model& m : all_models(config.techs())) {
        const SecondPeriodChoice c = solve_second_period(m, config.payoff, views, config.grid);
        table[m] = c.action;
        any_tie = any_tie || c.tie;
    }
    if (tie) *tie = any_tie;
    return table;
}

namespace {

double subjective_v(const GameConfig& config, const Model& belief, const Action& a) {
    const auto& pair = config.pair(a.tech);
    return config.payoff.expected_v(pair.distribution(belief[static_cast<std::size_t>(a.tech)], a.effort));
}

bool persuasion_active(const GameConfig& config) {
    return config.mode != Mode::Unaware && config.model_A != config.model_B && config.effective_delta() > 0.0;
}

}  // namespace

double persuasion_gain(Player who, const GameConfig& config, const std::map<Model, Action>& second_period) {
    const Model& own = config.model(who);
    const Model& other = config.model(rival(who));
    if (own == other) return 0.0;
    return subjective_v(config, own, second_period.at(own)) - subjective_v(config, own, second_period.at(other));
}

double persuasion_probability(Player who, const Action& own, const Action& rival_action, const GameConfig& config) {
    const Model& m_own = config.model(who);
    const Model& m_rival = config.model(rival(who));
    std::array<double, 2> efforts{};
    std::array<int, 2> techs{};
    efforts[static_cast<std::size_t>(index(who))] = own.effort;
    techs[static_cast<std::size_t>(index(who))] = own.tech;
    efforts[static_cast<std::size_t>(index(rival(who)))] = rival_action.effort;
    techs[static_cast<std::size_t>(index(rival(who)))] = rival_action.tech;
    const auto views = config.view_pairs();
    // The rival tests its own model against ours; power is evaluated under ours.
    return SwitchTest::build(m_rival, m_own, efforts, techs, views, config.alpha).power();
}

double first_period_objective(Player who, double e, int k, const Action& rival_action, const GameConfig& config,
                              const std::map<Model, Action>& second_period) {
    const Model& m = config.model(who);
    const double base = config.payoff.expected_u(config.pair(k).distribution(m[static_cast<std::size_t>(k)], e), e);
    if (!persuasion_active(config)) return base;
    const double gain = persuasion_gain(who, config, second_period);
    if (gain == 0.0) return base;
    return base + config.effective_delta() * persuasion_probability(who, {e, k}, rival_action, config) * gain;
}

BestResponse best_response(Player who, const Action& rival_action, const GameConfig& config,
                           const std::map<Model, Action>& second_period) {
    BestResponse best;
    bool first = true;
    for (int k = 0; k < static_cast<int>(config.techs()); ++k) {
        if (config.assignment && (*config.assignment)[static_cast<std::size_t>(index(who))] != k) continue;
        const GridMax g = grid_argmax(
            [&](double e) { return first_period_objective(who, e, k, rival_action, config, second_period); }, config.grid);
        if (first || (g.value > best.value && !within_tie(g.value, best.value))) {
            best = {{g.arg, k}, g.value, g.tie};
            first = false;
        } else if (within_tie(g.value, best.value)) {
            best.tie = true;
        }
    }
    return best;
}

namespace {

struct Run {
    bool converged = false;
    FirstPeriodPlay play;
    std::vector<FirstPeriodPlay> cycle;
    int iterations = 0;
    bool tie = false;
};

// Simultaneous best responses; sequential ones (A then B) when `sequential`.
Run iterate(FirstPeriodPlay start, const GameConfig& config, const std::map<Model, Action>& table, bool sequential) {
    Run run;
    std::vector<FirstPeriodPlay> history{start};
    FirstPeriodPlay cur = start;
    for (int it = 1; it <= kMaxBestResponseIterations; ++it) {
        const BestResponse a = best_response(Player::A, cur.actions[1], config, table);
        const BestResponse b = best_response(Player::B, sequential ? a.action : cur.actions[0], config, table);
        run.tie = run.tie || a.tie || b.tie;
        FirstPeriodPlay next{{a.action, b.action}};
        run.iterations = it;
        if (next == cur) {
            run.converged = true;
            run.play = next;
            return run;
        }
        auto seen = std::find(history.begin(), history.end(), next);
        if (seen != history.end()) {
            run.cycle.assign(seen, history.end());
            return run;
        }
        history.push_back(next);
        cur = next;
    }
    run.cycle = std::move(history);
    return run;
}

}  // namespace

StrategyProfile solve_equilibrium(const GameConfig& config) {
    config.validate();
    StrategyProfile profile;
    bool tie = false;
    profile.second_period = second_period_table(config, &tie);
    profile.diagnostics.tie_flagged = tie;
    if (tie) profile.diagnostics.notes.push_back("second-period argmax tie broken toward the lowest effort");

    const auto views = config.view_pairs();
    const auto static_action = [&](Player p) {
        std::optional<int> fixed;
        if (config.assignment) fixed = (*config.assignment)[static_cast<std::size_t>(index(p))];
        return solve_second_period(config.model(p), config.payoff, views, config.grid, fixed).action;
    };
    std::vector<FirstPeriodPlay> starts{{{static_action(Player::A), static_action(Player::B)}}};
    if (persuasion_active(config)) {
        const int ka = starts[0].actions[0].tech;
        const int kb = starts[0].actions[1].tech;
        for (double ea : {0.0, config.grid.b})
            for (double eb : {0.0, config.grid.b}) starts.push_back({{Action{ea, ka}, Action{eb, kb}}});
    }

    std::vector<FirstPeriodPlay> cycle_of_first;
    for (std::size_t s = 0; s < starts.size(); ++s) {
        Run run = iterate(starts[s], config, profile.second_period, false);
        if (!run.converged) {
            // Simultaneous updates can oscillate between neighbouring grid points.
            const Run seq = iterate(starts[s], config, profile.second_period, true);
            if (seq.converged) {
                profile.diagnostics.notes.push_back("start " + std::to_string(s) +
                                                    ": simultaneous updates cycled, sequential updates converged");
                run = seq;
            }
        }
        profile.diagnostics.starts++;
        profile.diagnostics.tie_flagged = profile.diagnostics.tie_flagged || run.tie;
        if (s == 0) profile.diagnostics.iterations = run.iterations;
        if (!run.converged) {
            profile.diagnostics.cycling_starts++;
            if (s == 0) cycle_of_first = run.cycle;
            continue;
        }
        if (std::find(profile.equilibria.begin(), profile.equilibria.end(), run.play) == profile.equilibria.end())
            profile.equilibria.push_back(run.play);
    }
    if (profile.equilibria.empty()) {
        std::ostringstream os;
        os << "best-response iteration did not converge from any of " << starts.size() << " starts";
        throw NonConvergence(os.str(), cycle_of_first);
    }
    if (profile.diagnostics.cycling_starts > 0)
        profile.diagnostics.notes.push_back(std::to_string(profile.diagnostics.cycling_starts) +
                                            " start(s) cycled without reaching a fixed point");
    if (profile.equilibria.size() > 1)
        profile.diagnostics.notes.push_back(std::to_string(profile.equilibria.size()) + " distinct pure equilibria found");
    return profile;
}

LemmaEffortReport lemma_effort_check(const GameConfig& config) {
    if (config.techs() != 1) throw std::invalid_argument("lemma_effort_check needs one technology");
    const Model H{Stance::H};
    const Model L{Stance::L};
    const GameConfig hl = config.with_models(H, L);
    const StrategyProfile p_hl = solve_equilibrium(hl);
    const StrategyProfile p_hh = solve_equilibrium(config.with_models(H, H));
    const StrategyProfile p_ll = solve_equilibrium(config.with_models(L, L));
    LemmaEffortReport r;
    r.optimist_disagree = p_hl.primary().actions[0].effort;
    r.skeptic_disagree = p_hl.primary().actions[1].effort;
    r.optimist_agree = p_hh.primary().actions[0].effort;
    r.skeptic_agree = p_ll.primary().actions[1].effort;
    constexpr double tol = 1e-12;
    r.optimist_holds = r.optimist_disagree >= r.optimist_agree - tol;
    r.skeptic_holds = r.skeptic_disagree <= r.skeptic_agree + tol;
    r.optimist_strict = r.optimist_disagree > r.optimist_agree + tol;
    r.skeptic_strict = r.skeptic_disagree < r.skeptic_agree - tol;

    const Action bob = p_hl.primary().actions[1];
    r.phi_strictly_increasing = true;
    double prev = -1.0;
    for (double e : config.grid.values()) {
        const double phi = persuasion_probability(Player::A, {e, 0}, bob, hl);
        if (!(phi > prev + tol)) {
            r.phi_strictly_increasing = false;
            break;
        }
        prev = phi;
    }
    return r;
}

}  // namespace disagree

#include "disagree/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace disagree {

namespace {

constexpr double kCompareTolerance = 1e-9;

bool switching_possible(const GameConfig& config) {
    return config.mode != Mode::Unaware && config.model_A != config.model_B;
}

OutputDistribution q_law(const GameConfig& config, const Action& a) {
    const auto& t = config.technologies.at(static_cast<std::size_t>(a.tech));
    return t.truth.distribution(t.views, a.effort);
}

// Switch probabilities of both players under Q for a first-period play.
std::array<double, 2> switch_probabilities(const GameConfig& config, const FirstPeriodPlay& play) {
    std::array<double, 2> p{0.0, 0.0};
    if (!switching_possible(config)) return p;
    const auto views = config.view_pairs();
    const std::array<double, 2> efforts{play.actions[0].effort, play.actions[1].effort};
    const std::array<int, 2> techs{play.actions[0].tech, play.actions[1].tech};
    const OutputDistribution la = q_law(config, play.actions[0]);
    const OutputDistribution lb = q_law(config, play.actions[1]);
    for (Player who : {Player::A, Player::B}) {
        const SwitchTest t =
            SwitchTest::build(config.model(who), config.model(rival(who)), efforts, techs, views, config.alpha);
        p[static_cast<std::size_t>(index(who))] = switch_probability(t, la, lb);
    }
    return p;
}

std::size_t sample(const std::vector<double>& cumulative, std::mt19937_64& rng) {
    const double u = unit_draw(rng) * cumulative.back();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    return std::min(static_cast<std::size_t>(it - cumulative.begin()), cumulative.size() - 1);
}

std::vector<double> cumulative_of(const OutputDistribution& d) {
    std::vector<double> c(d.probs.size());
    double s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (s += d.probs[i]);
    return c;
}

}  // namespace

TeamOutcome evaluate_play(const GameConfig& config, const StrategyProfile& profile, const FirstPeriodPlay& play) {
    TeamOutcome out;
    out.play = play;
    out.switch_probability = switch_probabilities(config, play);
    for (Player who : {Player::A, Player::B}) {
        const std::size_t i = static_cast<std::size_t>(index(who));
        const Player other = rival(who);
        const Action first = play.actions[i];
        const Action stay = profile.second_period_action(config.model(who));
        const Action moved = profile.second_period_action(config.model(other));
        const double p = out.switch_probability[i];
        const OutputDistribution d1 = q_law(config, first);
        const OutputDistribution ds = q_law(config, stay);
        const OutputDistribution dm = q_law(config, moved);
        out.output[i][0] = d1.mean();
        out.output[i][1] = (1.0 - p) * ds.mean() + p * dm.mean();
        out.payoff[i] = config.payoff.expected_u(d1, first.effort) +
                        (1.0 - p) * config.payoff.expected_u(ds, stay.effort) +
                        p * config.payoff.expected_u(dm, moved.effort);
    }
    for (Player who : {Player::A, Player::B}) {
        const std::size_t i = static_cast<std::size_t>(index(who));
        const std::size_t j = static_cast<std::size_t>(index(rival(who)));
        out.payoff[i] += config.payoff.beta() * (out.output[j][0] + out.output[j][1]);
    }
    out.total = out.output[0][0] + out.output[0][1] + out.output[1][0] + out.output[1][1];
    return out;
}

TeamOutcome expected_team_output(const GameConfig& config, const StrategyProfile& profile) {
    if (profile.equilibria.empty()) throw std::invalid_argument("profile has no equilibrium");
    TeamOutcome best;
    for (std::size_t s = 0; s < profile.equilibria.size(); ++s) {
        TeamOutcome o = evaluate_play(config, profile, profile.equilibria[s]);
        o.equilibrium_index = s;
        if (s == 0 || o.total > best.total + kCompareTolerance) best = o;
    }
    return best;
}

TeamOutcome simulate_play(const GameConfig& config, const StrategyProfile& profile, const FirstPeriodPlay& play,
                          const MonteCarloSpec& mc) {
    if (!mc.seed) throw std::domain_error("Monte Carlo evaluation requires a seed");
    if (mc.paths < 2) throw std::domain_error("Monte Carlo evaluation requires at least 2 paths");
    TeamOutcome out = evaluate_play(config, profile, play);
    out.monte_carlo = true;
    out.paths = mc.paths;
    out.seed = *mc.seed;

    const auto views = config.view_pairs();
    const std::array<double, 2> efforts{play.actions[0].effort, play.actions[1].effort};
    const std::array<int, 2> techs{play.actions[0].tech, play.actions[1].tech};
    const bool can_switch = switching_possible(config);
    std::array<std::optional<SwitchTest>, 2> tests;
    if (can_switch)
        for (Player who : {Player::A, Player::B})
            tests[static_cast<std::size_t>(index(who))] =
                SwitchTest::build(config.model(who), config.model(rival(who)), efforts, techs, views, config.alpha);

    struct Law {
        OutputDistribution d;
        std::vector<double> cum;
    };
    const auto law = [&](const Action& a) {
        Law l{q_law(config, a), {}};
        l.cum = cumulative_of(l.d);
        return l;
    };
    std::array<Law, 2> first{law(play.actions[0]), law(play.actions[1])};
    std::array<Law, 2> stay{law(profile.second_period_action(config.model_A)),
                            law(profile.second_period_action(config.model_B))};
    std::array<Law, 2> moved{law(profile.second_period_action(config.model_B)),
                             law(profile.second_period_action(config.model_A))};

    std::mt19937_64 rng(*mc.seed);
    std::array<std::array<double, 2>, 2> sums{};
    std::array<double, 2> switches{};
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t n = 0; n < mc.paths; ++n) {
        const double ya = first[0].d.values[sample(first[0].cum, rng)];
        const double yb = first[1].d.values[sample(first[1].cum, rng)];
        double total = ya + yb;
        sums[0][0] += ya;
        sums[1][0] += yb;
        for (std::size_t i = 0; i < 2; ++i) {
            const bool sw = can_switch && apply_test(*tests[i], ya, yb, rng);
            switches[i] += sw ? 1.0 : 0.0;
            const Law& l = sw ? moved[i] : stay[i];
            const double y2 = l.d.values[sample(l.cum, rng)];
            sums[i][1] += y2;
            total += y2;
        }
        sum += total;
        sum_sq += total * total;
    }
    const double n = static_cast<double>(mc.paths);
    for (std::size_t i = 0; i < 2; ++i) {
        out.output[i][0] = sums[i][0] / n;
        out.output[i][1] = sums[i][1] / n;
        out.switch_probability[i] = switches[i] / n;
    }
    out.total = sum / n;
    const double var = std::max(0.0, (sum_sq - n * out.total * out.total) / (n - 1.0));
    out.std_error = std::sqrt(var / n);
    return out;
}

Evaluation solve_and_evaluate(const GameConfig& config) {
    Evaluation ev{config, solve_equilibrium(config), {}};
    ev.outcome = expected_team_output(ev.config, ev.profile);
    return ev;
}

std::string format_inequality(const Inequality& q) {
    char buf[512];
    const char* verdict = !q.applicable ? "N/A" : (q.holds ? "HOLDS" : "FAILS");
    std::snprintf(buf, sizeof buf, "%-48s %.12g %s %.12g  margin=%.6g  %s%s", q.name.c_str(), q.lhs, q.relation.c_str(),
                  q.rhs, q.margin(), verdict, q.strict ? " (strict)" : "");
    std::string s = buf;
    if (!q.note.empty()) s += "  [" + q.note + "]";
    return s;
}

bool VerificationReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const Inequality& q) { return !q.applicable || q.holds; });
}

namespace {

Inequality compare(std::string name, std::string rel, double lhs, double rhs, double tol = kCompareTolerance) {
    Inequality q;
    q.name = std::move(name);
    q.relation = std::move(rel);
    q.lhs = lhs;
    q.rhs = rhs;
    q.strict = std::abs(lhs - rhs) > tol;
    if (q.relation == ">=") q.holds = lhs >= rhs - tol;
    else if (q.relation == ">") q.holds = lhs > rhs + tol;
    else if (q.relation == "<=") q.holds = lhs <= rhs + tol;
    else if (q.relation == "<") q.holds = lhs < rhs - tol;
    else if (q.relation == "==") q.holds = !q.strict;
    else q.holds = true;  // "info"
    return q;
}

Inequality not_applicable(std::string name, std::string note) {
    Inequality q;
    q.name = std::move(name);
    q.relation = "info";
    q.applicable = false;
    q.holds = true;
    q.note = std::move(note);
    return q;
}

const Model kH{Stance::H};
const Model kL{Stance::L};

double evaluate_into(VerificationReport& rep, const GameConfig& c, const std::string& label) {
    Evaluation ev = solve_and_evaluate(c);
    const double y = ev.outcome.total;
    rep.labels.push_back(label);
    rep.evaluations.push_back(std::move(ev));
    return y;
}

double one_sided_safe_difference(const std::function<double(double)>& f, double x, double h, double b) {
    // second-order one-sided stencils at the ends of [0, b]
    if (x - h < 0.0) return (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h);
    if (x + h > b * (1.0 + 1e-12)) return (3.0 * f(x) - 4.0 * f(x - h) + f(x - 2.0 * h)) / (2.0 * h);
    return central_difference(f, x, h);
}

}  // namespace

double central_difference(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

ThresholdReport strong_externality_threshold(const GameConfig& config) {
    if (config.techs() != 1) throw std::invalid_argument("strong_externality_threshold needs one technology");
    ThresholdReport r;
    const GameConfig hl = config.with_models(kH, kL);
    const auto table = second_period_table(hl);
    const double e_h = table.at(kH).effort;
    const double e_l = table.at(kL).effort;
    r.delta = persuasion_gain(Player::A, hl, table);

    const auto& tech = config.technologies[0];
    const double b = config.grid.b;
    const auto yq = [&](double e) { return tech.truth.expected_output(tech.views, e); };
    const double target = 4.0 * yq(e_h);
    if (yq(b) < target - 1e-12) {
        r.e_hat = b;
        r.e_hat_attainable = false;
        r.notes.push_back("E_Q[Y|b] < 4 E_Q[Y|e^H]: e_hat unattainable, range truncated at b");
    } else {
        double lo = e_h;
        double hi = b;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + b); ++it) {
            const double mid = 0.5 * (lo + hi);
            (yq(mid) < target ? lo : hi) = mid;
        }
        r.e_hat = hi;
        r.e_hat_attainable = true;
    }

    const double h = config.grid.step();
    const auto& pair = tech.views;
    const PayoffSpec& pay = config.payoff;
    r.max_bound = -std::numeric_limits<double>::infinity();
    const auto efforts = config.grid.values();
    for (double eb : efforts) {
        if (eb > e_l + 1e-12) break;
        for (double ea : efforts) {
            if (ea < e_h - 1e-12 || ea > r.e_hat + 1e-12) continue;
            const double du = one_sided_safe_difference(
                [&](double e) { return pay.expected_u(pair.distribution(Stance::H, e), e); }, ea, h, b);
            const double dphi = one_sided_safe_difference(
                [&](double e) { return persuasion_probability(Player::A, {e, 0}, {eb, 0}, hl); }, ea, h, b);
            const double bound = dphi != 0.0 ? -du / dphi : (du < 0 ? std::numeric_limits<double>::infinity() : 0.0);
            r.max_bound = std::max(r.max_bound, bound);
        }
    }
    r.condition_holds = r.delta > r.max_bound;
    const double y_hl = solve_and_evaluate(hl).outcome.total;
    const double y_hh = solve_and_evaluate(config.with_models(kH, kH)).outcome.total;
    r.conclusion_holds = y_hl > y_hh + kCompareTolerance;
    r.implication_ok = !r.condition_holds || r.conclusion_holds;
    if (!r.condition_holds && r.conclusion_holds)
        r.notes.push_back("sufficient condition fails but the conclusion holds");
    return r;
}

VerificationReport verify_team_comparisons(const GameConfig& config) {
    if (config.techs() != 1) throw std::invalid_argument("verify_team_comparisons needs one technology");
    VerificationReport rep;
    rep.title = "one technology: team formation, strong externalities, benchmarks";
    const auto table = second_period_table(config);
    const double e_l = table.at(kL).effort;
    const bool premise = e_l == 0.0;
    if (!premise) rep.notes.push_back("e^L > 0: team-formation premise (L discourages effort) not met");

    const GameConfig base = config.with_models(kH, kL);
    bool phi_strict = false;
    try {
        phi_strict = lemma_effort_check(base.with_mode(Mode::Full)).phi_strictly_increasing;
    } catch (const NonConvergence&) {
        rep.notes.push_back("lemma check did not converge");
    }

    for (Stance qs : {Stance::H, Stance::L}) {
        const std::string ql = to_string(qs);
        const GameConfig cq = base.with_truth({TrueProcess::member(qs)});
        std::map<std::pair<Mode, std::string>, double> y;
        for (Mode mode : {Mode::Full, Mode::Myopic, Mode::Unaware}) {
            const GameConfig cm = cq.with_mode(mode);
            for (const auto& [a, b] : {std::pair{kH, kL}, std::pair{kH, kH}, std::pair{kL, kL}}) {
                const std::string lab = "Y_" + to_string(mode) + "(" + to_string(a) + "," + to_string(b) + "," + ql + ")";
                y[{mode, to_string(a) + to_string(b)}] = evaluate_into(rep, cm.with_models(a, b), lab);
            }
        }
        const auto Y = [&](Mode m, const char* k) { return y.at({m, k}); };

        if (qs == Stance::H) {
            if (premise) {
                Inequality q = compare("team formation, Q=H: 2Y(H,L) vs Y(H,H)+Y(L,L)", phi_strict ? ">" : ">=",
                                       2 * Y(Mode::Full, "HL"), Y(Mode::Full, "HH") + Y(Mode::Full, "LL"));
                rep.checks.push_back(q);
            } else {
                rep.checks.push_back(not_applicable("team formation, Q=H", "requires e^L = 0"));
            }
        } else {
            Inequality q = compare("team formation, Q=L: 2Y(H,L) vs Y(H,H)+Y(L,L)", "info", 2 * Y(Mode::Full, "HL"),
                                   Y(Mode::Full, "HH") + Y(Mode::Full, "LL"));
            q.note = "either direction is possible";
            rep.checks.push_back(q);
        }
        rep.checks.push_back(compare("strong externalities, Q=" + ql + ": Y(H,L) vs Y(H,H)", "info", Y(Mode::Full, "HL"),
                                     Y(Mode::Full, "HH")));
        rep.checks.push_back(compare("unaware, Q=" + ql + ": 2Y_u(H,L) == Y_u(H,H)+Y_u(L,L)", "==",
                                     2 * Y(Mode::Unaware, "HL"), Y(Mode::Unaware, "HH") + Y(Mode::Unaware, "LL"), 1e-12));
        rep.checks.push_back(compare("myopic, Q=" + ql + ": 2Y_o(H,L) vs Y_o(H,H)+Y_o(L,L)",
                                     qs == Stance::H ? ">=" : "<=", 2 * Y(Mode::Myopic, "HL"),
                                     Y(Mode::Myopic, "HH") + Y(Mode::Myopic, "LL")));
        for (const char* m : {"HH", "LL"}) {
            rep.checks.push_back(compare(std::string("like-minded across modes, Q=") + ql + ": Y_u(" + m + ") == Y(" + m + ")",
                                         "==", Y(Mode::Unaware, m), Y(Mode::Full, m), 1e-12));
            rep.checks.push_back(compare(std::string("like-minded across modes, Q=") + ql + ": Y_o(" + m + ") == Y(" + m + ")",
                                         "==", Y(Mode::Myopic, m), Y(Mode::Full, m), 1e-12));
        }
        // Strict ranking of the benchmarks needs E_Q[Y|e^H] > E_Q[Y|e^L].
        const auto& t0 = cq.technologies[0];
        const bool ranked = t0.truth.expected_output(t0.views, table.at(kH).effort) >
                            t0.truth.expected_output(t0.views, table.at(kL).effort) + kCompareTolerance;
        for (Mode mode : {Mode::Myopic, Mode::Unaware}) {
            const std::string mn = to_string(mode);
            for (const char* m : {"HL", "LL"}) {
                const std::string name = "benchmark " + mn + ", Q=" + ql + ": Y(H,H) > Y(" + m[0] + "," + m[1] + ")";
                if (ranked) rep.checks.push_back(compare(name, ">", Y(mode, "HH"), Y(mode, m)));
                else rep.checks.push_back(not_applicable(name, "E_Q[Y|e^H] = E_Q[Y|e^L]"));
            }
        }
    }

    try {
        const ThresholdReport t = strong_externality_threshold(config.with_models(kH, kL));
        Inequality q = compare("strong externalities: Delta vs max bound", "info", t.delta, t.max_bound);
        q.note = std::string("condition ") + (t.condition_holds ? "holds" : "fails") + ", conclusion " +
                 (t.conclusion_holds ? "holds" : "fails") + ", e_hat=" + std::to_string(t.e_hat);
        rep.checks.push_back(q);
        Inequality imp = compare("strong externalities: condition implies conclusion", "info", t.implication_ok, 1.0);
        imp.relation = "==";
        imp.holds = t.implication_ok;
        rep.checks.push_back(imp);
        for (const auto& n : t.notes) rep.notes.push_back(n);
    } catch (const NonConvergence& e) {
        rep.notes.push_back(std::string("threshold report skipped: ") + e.what());
    }
    return rep;
}

namespace {

bool same_truth(const GameConfig& c) {
    const auto& x = c.technologies[0];
    const auto& y = c.technologies[1];
    for (double e : c.grid.values()) {
        const OutputDistribution a = x.truth.distribution(x.views, e);
        const OutputDistribution b = y.truth.distribution(y.views, e);
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (std::abs(a.values[i] - b.values[i]) > 1e-12 || std::abs(a.probs[i] - b.probs[i]) > 1e-12) return false;
    }
    return true;
}

bool phi_strictly_increasing_two_tech(const GameConfig& c, const FirstPeriodPlay& play) {
    for (Player who : {Player::A, Player::B}) {
        const std::size_t i = static_cast<std::size_t>(index(who));
        const Action rival_action = play.actions[1 - i];
        double prev = -1.0;
        for (double e : c.grid.values()) {
            const double phi = persuasion_probability(who, {e, play.actions[i].tech}, rival_action, c);
            if (!(phi > prev + 1e-12)) return false;
            prev = phi;
        }
    }
    return true;
}

}  // namespace

VerificationReport verify_two_tech(const GameConfig& config) {
    if (config.techs() != 2) throw std::invalid_argument("verify_two_tech needs two technologies");
    VerificationReport rep;
    rep.title = "two technologies: fixed assignment, endogenous choice, half/half mixture";
    const Model hl{Stance::H, Stance::L};
    const Model lh{Stance::L, Stance::H};
    const auto models = all_models(2);
    GameConfig endo = config;
    endo.assignment.reset();
    endo.mode = Mode::Full;

    bool equal_falsifiability = true;
    for (std::size_t k = 0; k < 2; ++k)
        equal_falsifiability = equal_falsifiability && check_equal_falsifiability(config.pair(static_cast<int>(k)), config.grid);
    rep.notes.push_back(std::string("equal falsifiability: ") + (equal_falsifiability ? "yes" : "no"));
    const bool qxy = same_truth(config);
    rep.notes.push_back(std::string("Q_x = Q_y: ") + (qxy ? "yes" : "no"));
    const double e_h = second_period_table(config).at(Model{Stance::H, Stance::H}).effort;

    // Fixed assignment.
    GameConfig fixed = endo;
    fixed.assignment = std::array<int, 2>{0, 1};
    const double y_h_fixed = evaluate_into(rep, fixed.with_models(hl, lh), "Y(x,y,(H,L),(L,H))");
    const FirstPeriodPlay horizontal_fixed = rep.evaluations.back().outcome.play;
    const bool strict_fixed = phi_strictly_increasing_two_tech(fixed.with_models(hl, lh), horizontal_fixed);
    double best_like = -std::numeric_limits<double>::infinity();
    for (int ka = 0; ka < 2; ++ka)
        for (int kb = 0; kb < 2; ++kb)
            for (const Model& m : models) {
                GameConfig c = endo;
                c.assignment = std::array<int, 2>{ka, kb};
                const std::string lab = "Y(" + std::string(ka ? "y" : "x") + "," + (kb ? "y" : "x") + "," + to_string(m) + "," + to_string(m) + ")";
                best_like = std::max(best_like, evaluate_into(rep, c.with_models(m, m), lab));
            }
    if (qxy) {
        rep.checks.push_back(compare("fixed assignment: Y(horizontal) vs max like-minded", strict_fixed ? ">" : ">=", y_h_fixed, best_like));
    } else {
        rep.checks.push_back(not_applicable("fixed assignment: Y(horizontal) vs max like-minded", "requires Q_x = Q_y"));
    }
    rep.checks.push_back(compare("fixed assignment: A first-period effort vs e^H", ">=", horizontal_fixed.actions[0].effort, e_h));
    rep.checks.push_back(compare("fixed assignment: B first-period effort vs e^H", ">=", horizontal_fixed.actions[1].effort, e_h));

    // Endogenous technology choice.
    const GameConfig endo_h = endo.with_models(hl, lh);
    const double y_h = evaluate_into(rep, endo_h, "Y((H,L),(L,H))");
    const Evaluation& eh = rep.evaluations.back();
    const StrategyProfile horizontal_profile = eh.profile;
    const FirstPeriodPlay hp = eh.outcome.play;
    const bool strict_endo = phi_strictly_increasing_two_tech(endo_h, hp);
    double best_like_endo = -std::numeric_limits<double>::infinity();
    std::vector<std::pair<Model, StrategyProfile>> like_profiles;
    for (const Model& m : models) {
        best_like_endo = std::max(best_like_endo, evaluate_into(rep, endo.with_models(m, m), "Y(" + to_string(m) + "," + to_string(m) + ")"));
        like_profiles.emplace_back(m, rep.evaluations.back().profile);
    }
    if (equal_falsifiability && qxy) {
        rep.checks.push_back(compare("endogenous choice: Y(horizontal) vs max like-minded", strict_endo ? ">" : ">=", y_h, best_like_endo));
    } else {
        rep.checks.push_back(not_applicable("endogenous choice: Y(horizontal) vs max like-minded",
                                            "requires equal falsifiability and Q_x = Q_y"));
    }
    Inequality techs = compare("endogenous choice: techs (A on x, B on y)", "==", hp.actions[0].tech == 0 && hp.actions[1].tech == 1, 1.0);
    if (!equal_falsifiability) techs.applicable = false;
    rep.checks.push_back(techs);
    for (std::size_t i = 0; i < 2; ++i) {
        Inequality q = compare(std::string("endogenous choice: ") + (i ? "B" : "A") + " first-period effort vs e^H", ">=",
                               hp.actions[i].effort, e_h);
        if (!equal_falsifiability) {
            q.applicable = false;
            q.note = "views not equally falsifiable";
        }
        rep.checks.push_back(q);
    }

    // Half/half mixture over Q = (H_x, L_y) and Q = (L_x, H_y).
    if (!equal_falsifiability) {
        rep.checks.push_back(not_applicable("mixture: E_p[Y(horizontal)] vs like-minded", "views not equally falsifiable"));
        return rep;
    }
    const std::vector<std::vector<TrueProcess>> states{{TrueProcess::member(Stance::H), TrueProcess::member(Stance::L)},
                                                       {TrueProcess::member(Stance::L), TrueProcess::member(Stance::H)}};
    const auto mixture = [&](const GameConfig& c, const StrategyProfile& p, const FirstPeriodPlay& play) {
        double s = 0.0;
        for (const auto& st : states) s += 0.5 * evaluate_play(c.with_truth(st), p, play).total;
        return s;
    };
    double worst_h = std::numeric_limits<double>::infinity();
    for (const auto& play : horizontal_profile.equilibria) worst_h = std::min(worst_h, mixture(endo_h, horizontal_profile, play));
    double best_m = -std::numeric_limits<double>::infinity();
    for (const auto& [m, p] : like_profiles)
        for (const auto& play : p.equilibria) best_m = std::max(best_m, mixture(endo.with_models(m, m), p, play));
    rep.checks.push_back(compare("mixture: min E_p[Y_s(horizontal)] vs max E_p[Y_s(m,m)]", strict_endo ? ">" : ">=", worst_h, best_m));
    return rep;
}

VerificationReport verify_claim1_direction(const GameConfig& config) {
    VerificationReport rep;
    rep.title = "negative externalities with inverse informativeness";
    if (config.techs() != 1) throw std::invalid_argument("verify_claim1_direction needs one technology");
    const auto& pair = config.pair(0);
    const AssumptionReport ar = validate_assumptions(pair, config.payoff, config.grid);
    rep.notes.push_back(std::string("informativeness reversed: ") + (ar.informativeness_reversed ? "yes" : "no"));
    rep.notes.push_back("e^H=" + std::to_string(ar.e_H) + ", e^L=" + std::to_string(ar.e_L));
    const bool pre = pair.family() == Family::InverseInfoLinear && ar.informativeness_reversed && config.payoff.beta() < 0;
    if (!pre) {
        rep.checks.push_back(not_applicable("optimist effort vs e^H (beta < 0)", "requires inverse informativeness and beta < 0"));
        return rep;
    }
    const GameConfig hl = config.with_models(kH, kL);
    const double beta = config.payoff.beta();
    const auto optimist_effort = [&](double b, const std::string& label) {
        GameConfig c = hl;
        c.payoff = c.payoff.with_beta(b);
        evaluate_into(rep, c, label);
        return rep.evaluations.back().outcome.play.actions[0].effort;
    };
    const auto table = second_period_table(hl);
    const double e_h = table.at(kH).effort;
    const double e_l = table.at(kL).effort;
    char lab[64];
    std::snprintf(lab, sizeof lab, "Y(H,L), beta=%g", beta);
    rep.checks.push_back(compare("beta < 0: optimist first-period effort vs e^H", ">=", optimist_effort(beta, lab), e_h));
    GameConfig zero = hl;
    zero.payoff = zero.payoff.with_beta(0.0);
    evaluate_into(rep, zero, "Y(H,L), beta=0");
    const auto& pz = rep.evaluations.back().outcome.play;
    rep.checks.push_back(compare("beta = 0: optimist effort == e^H", "==", pz.actions[0].effort, e_h, 0.0));
    rep.checks.push_back(compare("beta = 0: skeptic effort == e^L", "==", pz.actions[1].effort, e_l, 0.0));
    std::snprintf(lab, sizeof lab, "Y(H,L), beta=%g", -beta);
    rep.checks.push_back(compare("beta > 0: optimist first-period effort vs e^H", "<=", optimist_effort(-beta, lab), e_h));
    return rep;
}

CrossCheck cross_check(const GameConfig& config, const MonteCarloSpec& mc) {
    const Evaluation ev = solve_and_evaluate(config);
    const TeamOutcome sim = simulate_play(config, ev.profile, ev.outcome.play, mc);
    return {ev.outcome.total, sim.total, sim.std_error};
}

}  // namespace disagree

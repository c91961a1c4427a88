#include "disagree/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <map>
#include <sstream>

#include "disagree/config.hpp"
#include "disagree/evaluate.hpp"
#include "disagree/experiments.hpp"

namespace disagree {

namespace fs = std::filesystem;

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names{"validate-views",  "solve",  "compare-one-tech", "compare-two-tech",
                                                "benchmark-modes", "claim1", "paper-suite"};
    return names;
}

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

class Artifacts {
public:
    Artifacts() {
        results_ << "experiment,label,model_A,model_B,mode,Q,alpha,beta,delta,"
                    "e1_A,k1_A,e1_B,k1_B,e2_A,k2_A,e2_B,k2_B,e2_A_switched,k2_A_switched,e2_B_switched,k2_B_switched,"
                    "Y1_A,Y2_A,Y1_B,Y2_B,Y_total,payoff_A,payoff_B,switch_A,switch_B,equilibria,method,paths,seed,std_error\n";
        curves_ << "curve,series,x,y\n";
    }

    void row(const std::string& experiment, const std::string& label, const GameConfig& c, const StrategyProfile& p,
             const TeamOutcome& o) {
        const auto n = format_number;
        const Action a2 = p.second_period_action(c.model_A);
        const Action b2 = p.second_period_action(c.model_B);
        std::string q;
        for (std::size_t k = 0; k < c.techs(); ++k) q += (k ? ";" : "") + c.technologies[k].truth.describe();
        results_ << experiment << ',' << quote(label) << ',' << quote(to_string(c.model_A)) << ','
                 << quote(to_string(c.model_B)) << ',' << to_string(c.mode) << ',' << quote(q) << ',' << n(c.alpha) << ','
                 << n(c.payoff.beta()) << ',' << n(c.delta) << ',' << n(o.play.actions[0].effort) << ','
                 << o.play.actions[0].tech << ',' << n(o.play.actions[1].effort) << ',' << o.play.actions[1].tech << ','
                 << n(a2.effort) << ',' << a2.tech << ',' << n(b2.effort) << ',' << b2.tech << ',' << n(b2.effort) << ','
                 << b2.tech << ',' << n(a2.effort) << ',' << a2.tech << ',' << n(o.output[0][0]) << ','
                 << n(o.output[0][1]) << ',' << n(o.output[1][0]) << ',' << n(o.output[1][1]) << ',' << n(o.total) << ','
                 << n(o.payoff[0]) << ',' << n(o.payoff[1]) << ',' << n(o.switch_probability[0]) << ','
                 << n(o.switch_probability[1]) << ',' << p.equilibria.size() << ','
                 << (o.monte_carlo ? "monte_carlo" : "exact") << ',' << o.paths << ',' << o.seed << ','
                 << n(o.std_error) << '\n';
    }

    void curve(const std::string& name, const std::string& series, double x, double y) {
        curves_ << name << ',' << quote(series) << ',' << format_number(x) << ',' << format_number(y) << '\n';
    }

    std::ostringstream& report() { return report_; }

    void write(const fs::path& dir) const {
        fs::create_directories(dir);
        put(dir / "results.csv", results_.str());
        put(dir / "report.txt", report_.str());
        put(dir / "curves.csv", curves_.str());
    }

private:
    static std::string quote(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return out + "\"";
    }

    static void put(const fs::path& path, const std::string& content) {
        const fs::path tmp = path.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write " + tmp.string());
            out << content;
        }
        fs::rename(tmp, path);
    }

    std::ostringstream results_;
    std::ostringstream report_;
    std::ostringstream curves_;
};

void report_checks(Artifacts& art, const VerificationReport& rep) {
    auto& r = art.report();
    r << "== " << rep.title << '\n';
    for (const auto& q : rep.checks) r << "  " << format_inequality(q) << '\n';
    for (const auto& note : rep.notes) r << "  note: " << note << '\n';
    r << "  verdict: " << (rep.all_hold() ? "all applicable checks hold" : "SOME CHECKS FAIL") << "\n\n";
}

void emit_rows(Artifacts& art, const std::string& experiment, const VerificationReport& rep) {
    for (std::size_t i = 0; i < rep.evaluations.size(); ++i) {
        const auto& ev = rep.evaluations[i];
        art.row(experiment, rep.labels[i], ev.config, ev.profile, ev.outcome);
    }
}

void validate_views(Artifacts& art, const GameConfig& c) {
    auto& r = art.report();
    r << "== view validation\n";
    for (std::size_t k = 0; k < c.techs(); ++k) {
        const auto& t = c.technologies[k];
        const AssumptionReport a = validate_assumptions(t.views, c.payoff, c.grid, t.truth);
        const bool ef = check_equal_falsifiability(t.views, c.grid);
        const auto flag = [](bool b) { return b ? "yes" : "no"; };
        r << "  technology " << t.name << ": " << t.views.describe() << ", Q=" << t.truth.describe() << '\n'
          << "    Q strictly FOSD-monotone:        " << flag(a.fosd_Q) << '\n'
          << "    H strictly FOSD-monotone:        " << flag(a.fosd_H) << '\n'
          << "    L FOSD-monotone:                 " << flag(a.fosd_L) << '\n'
          << "    H dominates L for e > 0:         " << flag(a.dominance_H_over_L) << '\n'
          << "    H = L at e = 0:                  " << flag(a.zero_effort_coincide) << '\n'
          << "    unique maximizers, b>e^H>e^L>=0: " << flag(a.unique_maximizers) << "  (e^H=" << format_number(a.e_H)
          << ", e^L=" << format_number(a.e_L) << ")\n"
          << "    informativeness increasing:      " << flag(a.informativeness_monotone) << '\n'
          << "    informativeness decreasing:      " << flag(a.informativeness_reversed) << '\n'
          << "    equally falsifiable:             " << flag(ef) << '\n';
        for (const auto& n : a.notes) r << "    note: " << n << '\n';
        for (double frac : {0.25, 0.5, 1.0}) {
            const double e = frac * c.grid.b;
            const DichotomousExperiment x = view_experiment(t.views, e);
            const PowerCurve pc = power_curve(x);
            const std::string series = t.name + ",e=" + format_number(e);
            for (double alpha : uniform_alpha_grid(101)) art.curve("power_null_H", series, alpha, pc(alpha));
            const PowerCurve ps = power_curve(x.swapped());
            for (double alpha : uniform_alpha_grid(101)) art.curve("power_null_L", series, alpha, ps(alpha));
        }
    }
    r << '\n';
}

void solve_one(Artifacts& art, const GameConfig& c, const LoadedConfig& lc, std::optional<std::uint64_t> mc) {
    const Evaluation ev = solve_and_evaluate(c);
    art.row("solve", "configured", c, ev.profile, ev.outcome);
    auto& r = art.report();
    r << "== solve: models A=" << to_string(c.model_A) << " B=" << to_string(c.model_B) << ", mode " << to_string(c.mode)
      << '\n';
    for (const auto& [m, a] : ev.profile.second_period)
        r << "  second period under " << to_string(m) << ": effort " << format_number(a.effort) << " on "
          << c.technologies[static_cast<std::size_t>(a.tech)].name << '\n';
    for (std::size_t s = 0; s < ev.profile.equilibria.size(); ++s) {
        const auto& p = ev.profile.equilibria[s];
        const TeamOutcome o = evaluate_play(c, ev.profile, p);
        r << "  equilibrium " << s << ": A " << format_number(p.actions[0].effort) << " on "
          << c.technologies[static_cast<std::size_t>(p.actions[0].tech)].name << ", B " << format_number(p.actions[1].effort)
          << " on " << c.technologies[static_cast<std::size_t>(p.actions[1].tech)].name << ", Y=" << format_number(o.total)
          << '\n';
    }
    r << "  Y-hat = " << format_number(ev.outcome.total) << " (equilibrium " << ev.outcome.equilibrium_index << ")\n";
    r << "  best-response iterations " << ev.profile.diagnostics.iterations << ", starts " << ev.profile.diagnostics.starts
      << '\n';
    for (const auto& n : ev.profile.diagnostics.notes) r << "  note: " << n << '\n';

    // Effort-response curves at the selected equilibrium.
    const auto& play = ev.outcome.play;
    for (Player who : {Player::A, Player::B}) {
        const std::size_t i = static_cast<std::size_t>(index(who));
        const Action rival_action = play.actions[1 - i];
        const int k = play.actions[i].tech;
        const std::string series = std::string(who == Player::A ? "A" : "B");
        for (double e : c.grid.values()) {
            art.curve("first_period_objective", series, e,
                      first_period_objective(who, e, k, rival_action, c, ev.profile.second_period));
            if (c.model_A != c.model_B && c.mode != Mode::Unaware)
                art.curve("persuasion_probability", series, e, persuasion_probability(who, {e, k}, rival_action, c));
        }
    }

    if (mc) {
        if (!lc.seed) throw ConfigError("Monte Carlo evaluation requires a seed (--seed or \"seed\")");
        const TeamOutcome sim = simulate_play(c, ev.profile, play, {*mc, lc.seed});
        art.row("solve", "configured (monte carlo)", c, ev.profile, sim);
        const double z = sim.std_error > 0 ? (sim.total - ev.outcome.total) / sim.std_error : 0.0;
        r << "  monte carlo: " << format_number(sim.total) << " +/- " << format_number(sim.std_error) << " (n=" << *mc
          << ", seed=" << *lc.seed << ", z=" << format_number(z) << ")\n";
    }
    r << '\n';
}

void benchmark_modes(Artifacts& art, const GameConfig& c) {
    if (c.techs() != 1) throw ConfigError("benchmark-modes needs one technology");
    VerificationReport rep;
    rep.title = "benchmark modes (Q as configured)";
    const Model H{Stance::H};
    const Model L{Stance::L};
    std::map<std::pair<Mode, std::string>, double> y;
    for (Mode mode : {Mode::Full, Mode::Myopic, Mode::Unaware})
        for (const auto& [a, b] : {std::pair{H, L}, std::pair{H, H}, std::pair{L, L}}) {
            const GameConfig cm = c.with_mode(mode).with_models(a, b);
            Evaluation ev = solve_and_evaluate(cm);
            y[{mode, to_string(a) + to_string(b)}] = ev.outcome.total;
            rep.labels.push_back("Y_" + to_string(mode) + "(" + to_string(a) + "," + to_string(b) + ")");
            rep.evaluations.push_back(std::move(ev));
        }
    const auto Y = [&](Mode m, const char* k) { return y.at({m, k}); };
    const auto add = [&](std::string name, std::string rel, double lhs, double rhs, double tol) {
        Inequality q;
        q.name = std::move(name);
        q.relation = std::move(rel);
        q.lhs = lhs;
        q.rhs = rhs;
        q.strict = std::abs(lhs - rhs) > tol;
        q.holds = q.relation == "==" ? !q.strict : q.relation == ">=" ? lhs >= rhs - tol : q.relation == "<=" ? lhs <= rhs + tol : true;
        rep.checks.push_back(q);
    };
    add("unaware: 2Y_u(H,L) == Y_u(H,H)+Y_u(L,L)", "==", 2 * Y(Mode::Unaware, "HL"),
        Y(Mode::Unaware, "HH") + Y(Mode::Unaware, "LL"), 1e-12);
    const auto& q = c.technologies[0].truth;
    const std::string rel = q.is_member() ? (q.stance() == Stance::H ? ">=" : "<=") : "info";
    add("myopic: 2Y_o(H,L) vs Y_o(H,H)+Y_o(L,L)", rel, 2 * Y(Mode::Myopic, "HL"), Y(Mode::Myopic, "HH") + Y(Mode::Myopic, "LL"),
        1e-9);
    for (const char* m : {"HH", "LL"})
        for (Mode mode : {Mode::Myopic, Mode::Unaware})
            add("like-minded " + std::string(m) + ": Y_" + to_string(mode) + " == Y_full", "==", Y(mode, m), Y(Mode::Full, m),
                1e-12);
    report_checks(art, rep);
    emit_rows(art, "benchmark-modes", rep);
}

void lemma_report(Artifacts& art, const GameConfig& c) {
    const LemmaEffortReport l = lemma_effort_check(c);
    auto& r = art.report();
    r << "== first-period efforts, disagreement vs agreement\n"
      << "  optimist: " << format_number(l.optimist_disagree) << " >= " << format_number(l.optimist_agree) << "  "
      << (l.optimist_holds ? "HOLDS" : "FAILS") << (l.optimist_strict ? " (strict)" : "") << '\n'
      << "  skeptic:  " << format_number(l.skeptic_disagree) << " <= " << format_number(l.skeptic_agree) << "  "
      << (l.skeptic_holds ? "HOLDS" : "FAILS") << (l.skeptic_strict ? " (strict)" : "") << '\n'
      << "  switch probability strictly increasing in the optimist's effort: " << (l.phi_strictly_increasing ? "yes" : "no")
      << "\n\n";
}

}  // namespace

int run(const RunManifest& manifest, std::ostream& log) {
    const auto& names = experiment_names();
    if (std::find(names.begin(), names.end(), manifest.experiment) == names.end()) {
        log << "error: unknown experiment \"" << manifest.experiment << "\"\n";
        return kExitInvalid;
    }
    Artifacts art;
    try {
        ConfigOverrides ov;
        ov.effort_points = manifest.grid;
        LoadedConfig lc = load_config(manifest.config_path, ov);
        if (manifest.seed) {
            lc.seed = manifest.seed;
            lc.game.seed = *manifest.seed;
        }
        std::optional<std::uint64_t> mc = manifest.mc ? manifest.mc : lc.mc_paths;
        if (mc && !lc.seed) {
            log << "error: Monte Carlo evaluation requires a seed (--seed or \"seed\")\n";
            return kExitInvalid;
        }
        const GameConfig& c = lc.game;
        const std::string& ex = manifest.experiment;
        art.report() << "config: " << manifest.config_path << "\nexperiment: " << ex << "\npayoff: " << c.payoff.describe()
                     << "\nalpha=" << format_number(c.alpha) << " delta=" << format_number(c.delta)
                     << " mode=" << to_string(c.mode) << " effort grid " << c.grid.points << " points on [0, "
                     << format_number(c.grid.b) << "]\n\n";

        if (ex == "validate-views") {
            validate_views(art, c);
        } else if (ex == "solve") {
            solve_one(art, c, lc, mc);
        } else if (ex == "compare-one-tech") {
            const auto rep = verify_team_comparisons(c);
            report_checks(art, rep);
            emit_rows(art, ex, rep);
        } else if (ex == "compare-two-tech") {
            const auto rep = verify_two_tech(c);
            report_checks(art, rep);
            emit_rows(art, ex, rep);
        } else if (ex == "benchmark-modes") {
            benchmark_modes(art, c);
        } else if (ex == "claim1") {
            const auto rep = verify_claim1_direction(c);
            report_checks(art, rep);
            emit_rows(art, ex, rep);
        } else {  // paper-suite
            validate_views(art, c);
            solve_one(art, c, lc, mc);
            if (c.techs() == 1) {
                const bool inverse = c.pair(0).family() == Family::InverseInfoLinear;
                if (inverse) {
                    const auto rep = verify_claim1_direction(c);
                    report_checks(art, rep);
                    emit_rows(art, "claim1", rep);
                } else {
                    lemma_report(art, c.with_models(Model{Stance::H}, Model{Stance::L}));
                    const auto rep = verify_team_comparisons(c);
                    report_checks(art, rep);
                    emit_rows(art, "compare-one-tech", rep);
                }
            } else {
                const auto rep = verify_two_tech(c);
                report_checks(art, rep);
                emit_rows(art, "compare-two-tech", rep);
            }
        }
        art.write(manifest.out_dir);
        log << "wrote results.csv, report.txt, curves.csv to " << manifest.out_dir << '\n';
        return kExitOk;
    } catch (const ConfigError& e) {
        log << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        log << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const NonConvergence& e) {
        log << "error: " << e.what() << " (cycle of length " << e.cycle().size() << ")\n";
        for (const auto& p : e.cycle())
            log << "  cycle point: A " << format_number(p.actions[0].effort) << "/" << p.actions[0].tech << ", B "
                << format_number(p.actions[1].effort) << "/" << p.actions[1].tech << '\n';
        return kExitNonConvergence;
    }
}

}  // namespace disagree

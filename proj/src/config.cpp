#include "disagree/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace disagree {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ConfigError(where + ": " + what);
}

std::string line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

// Object view that remembers its path and rejects unknown keys.
class Node {
public:
    Node(const json& j, std::string path, std::string origin) : j_(j), path_(std::move(path)), origin_(std::move(origin)) {
        if (!j_.is_object()) fail(where(), "expected an object");
    }

    void allow(std::initializer_list<const char*> keys) const {
        std::set<std::string> ok(keys.begin(), keys.end());
        for (const auto& [k, v] : j_.items())
            if (!ok.count(k)) fail(where(), "unknown key \"" + k + "\"");
    }

    bool has(const char* key) const { return j_.contains(key); }
    const json& raw(const char* key) const { return j_.at(key); }
    std::string at(const char* key) const { return path_ + "/" + key; }
    Node child(const char* key) const {
        if (!has(key)) fail(where(), std::string("missing key \"") + key + "\"");
        return Node(j_.at(key), at(key), origin_);
    }

    double number(const char* key) const {
        if (!has(key)) fail(where(), std::string("missing key \"") + key + "\"");
        return number_of(j_.at(key), at(key));
    }
    double number(const char* key, double dflt) const { return has(key) ? number(key) : dflt; }

    std::string string(const char* key, const std::string& dflt) const {
        if (!has(key)) return dflt;
        if (!j_.at(key).is_string()) fail(loc(at(key)), "expected a string");
        return j_.at(key).get<std::string>();
    }

    std::int64_t integer(const char* key, std::int64_t dflt) const {
        if (!has(key)) return dflt;
        const json& v = j_.at(key);
        if (!v.is_number_integer()) fail(loc(at(key)), "expected an integer");
        return v.get<std::int64_t>();
    }

    std::uint64_t unsigned_integer(const char* key) const {
        const json& v = j_.at(key);
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
            fail(loc(at(key)), "expected a non-negative integer");
        return v.get<std::uint64_t>();
    }

    std::vector<double> numbers(const json& v, const std::string& path) const {
        if (!v.is_array()) fail(loc(path), "expected an array of numbers");
        std::vector<double> out;
        for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number_of(v[i], path + "/" + std::to_string(i)));
        return out;
    }

    std::string where() const { return loc(path_.empty() ? "/" : path_); }
    std::string loc(const std::string& p) const { return origin_ + ": " + p; }
    const std::string& origin() const { return origin_; }

private:
    double number_of(const json& v, const std::string& p) const {
        if (!v.is_number()) fail(loc(p), "expected a number");
        return v.get<double>();
    }

    const json& j_;
    std::string path_;
    std::string origin_;
};

Stance stance_of(const json& v, const Node& ctx, const std::string& path) {
    if (!v.is_string()) fail(ctx.loc(path), "expected \"H\" or \"L\"");
    const auto s = parse_stance(v.get<std::string>());
    if (!s) fail(ctx.loc(path), "expected \"H\" or \"L\"");
    return *s;
}

TechnologyViewPair parse_view(const Node& view, double b, int atoms) {
    view.allow({"family", "params"});
    const std::string fname = view.string("family", "");
    const auto family = parse_family(fname);
    if (!family) fail(view.loc(view.at("family")), "unknown family \"" + fname + "\"");
    const Node p = view.child("params");
    try {
        switch (*family) {
            case Family::DiscreteBandit:
                p.allow({"r", "R", "lambda"});
                return TechnologyViewPair::discrete_bandit({p.number("r"), p.number("R"), p.number("lambda", 1.0)}, b);
            case Family::AdditiveNoise: {
                p.allow({"slope_H", "slope_L", "noise", "scale"});
                const std::string noise = p.string("noise", "gaussian");
                if (noise != "gaussian" && noise != "triangular")
                    fail(p.loc(p.at("noise")), "noise must be \"gaussian\" or \"triangular\"");
                return TechnologyViewPair::additive_noise(
                    {p.number("slope_H"), p.number("slope_L"), noise == "gaussian" ? NoiseShape::Gaussian : NoiseShape::Triangular,
                     p.number("scale")},
                    b, atoms);
            }
            case Family::UniformLinear:
                p.allow({"gamma_H", "psi"});
                return TechnologyViewPair::uniform_linear({p.number("gamma_H"), p.number("psi")}, b, atoms);
            case Family::InverseInfoLinear:
                p.allow({"gamma0", "gamma1", "gamma2", "sigma"});
                return TechnologyViewPair::inverse_info_linear(
                    {p.number("gamma0"), p.number("gamma1"), p.number("gamma2"), p.number("sigma")}, b, atoms);
        }
    } catch (const std::invalid_argument& e) {
        fail(p.where(), e.what());
    }
    fail(view.where(), "unreachable");
}

TrueProcess parse_truth(const json& q, const Node& tech, const TechnologyViewPair& pair, int effort_points) {
    const std::string path = tech.at("Q");
    if (q.is_string()) return TrueProcess::member(stance_of(q, tech, path));
    const Node n(q, path, tech.origin());
    n.allow({"uniform_shift", "table"});
    try {
        if (n.has("uniform_shift")) {
            const Node u = n.child("uniform_shift");
            u.allow({"gamma"});
            return TrueProcess::uniform_shift(pair, u.number("gamma"), effort_points);
        }
        if (n.has("table")) {
            const Node t = n.child("table");
            t.allow({"support", "efforts", "pmf"});
            TrueProcess::Table tab;
            tab.support = t.numbers(t.raw("support"), t.at("support"));
            tab.efforts = t.numbers(t.raw("efforts"), t.at("efforts"));
            const json& rows = t.raw("pmf");
            if (!rows.is_array()) fail(t.loc(t.at("pmf")), "expected an array of rows");
            for (std::size_t i = 0; i < rows.size(); ++i)
                tab.pmf.push_back(t.numbers(rows[i], t.at("pmf") + "/" + std::to_string(i)));
            return TrueProcess::table(std::move(tab));
        }
    } catch (const std::invalid_argument& e) {
        fail(n.where(), e.what());
    } catch (const json::out_of_range& e) {
        fail(n.where(), "missing table field");
    }
    fail(n.where(), "expected \"H\", \"L\", {\"uniform_shift\": ...} or {\"table\": ...}");
}

PayoffSpec parse_payoff(const Node& p) {
    p.allow({"utility", "c", "beta", "kappa", "table"});
    const std::string kind = p.string("utility", "quadratic");
    const double beta = p.number("beta", 0.0);
    try {
        if (kind == "quadratic") return PayoffSpec::quadratic(p.number("c"), beta);
        if (kind == "exponential") return PayoffSpec::exponential(p.number("kappa"), p.number("c"), beta);
        if (kind == "table") {
            const Node t = p.child("table");
            t.allow({"outputs", "efforts", "values"});
            UtilityTable u;
            u.outputs = t.numbers(t.raw("outputs"), t.at("outputs"));
            u.efforts = t.numbers(t.raw("efforts"), t.at("efforts"));
            const json& rows = t.raw("values");
            if (!rows.is_array()) fail(t.loc(t.at("values")), "expected an array of rows");
            for (std::size_t i = 0; i < rows.size(); ++i)
                u.values.push_back(t.numbers(rows[i], t.at("values") + "/" + std::to_string(i)));
            return PayoffSpec::tabulated(std::move(u), beta);
        }
    } catch (const std::invalid_argument& e) {
        fail(p.where(), e.what());
    }
    fail(p.loc(p.at("utility")), "utility must be \"quadratic\", \"exponential\" or \"table\"");
}

Model parse_model_array(const json& v, const Node& ctx, const std::string& path) {
    if (v.is_string()) return Model{stance_of(v, ctx, path)};
    if (!v.is_array() || v.empty()) fail(ctx.loc(path), "expected an array of views");
    std::vector<Stance> s;
    for (std::size_t i = 0; i < v.size(); ++i) s.push_back(stance_of(v[i], ctx, path + "/" + std::to_string(i)));
    return Model(std::move(s));
}

}  // namespace

LoadedConfig parse_config(const std::string& text, const std::string& origin, const ConfigOverrides& overrides) {
    json root;
    try {
        root = json::parse(text, nullptr, true, true);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        if (auto pos = msg.find("parse error"); pos != std::string::npos) msg = msg.substr(pos);
        throw ConfigError(origin + ":" + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + msg);
    }
    const Node top(root, "", origin);
    top.allow({"b", "alpha", "delta", "mode", "payoff", "technologies", "models", "assignment", "grid", "seed", "mc"});

    LoadedConfig out;
    GameConfig& g = out.game;
    g.grid.b = top.number("b");
    if (!(g.grid.b > 0.0)) fail(top.loc("/b"), "must be positive");
    if (top.has("grid")) {
        const Node gr = top.child("grid");
        gr.allow({"effort_points", "output_atoms", "refine"});
        g.grid.points = static_cast<int>(gr.integer("effort_points", g.grid.points));
        g.grid.refine = static_cast<int>(gr.integer("refine", g.grid.refine));
        out.output_atoms = static_cast<int>(gr.integer("output_atoms", out.output_atoms));
    }
    if (overrides.effort_points) g.grid.points = *overrides.effort_points;
    if (overrides.output_atoms) out.output_atoms = *overrides.output_atoms;
    if (g.grid.points < 3) fail(top.loc("/grid/effort_points"), "must be at least 3");
    if (out.output_atoms < 3) fail(top.loc("/grid/output_atoms"), "must be at least 3");

    g.alpha = top.number("alpha", 0.0);
    g.delta = top.number("delta", 1.0);
    const std::string mode = top.string("mode", "full");
    const auto m = parse_mode(mode);
    if (!m) fail(top.loc("/mode"), "mode must be \"full\", \"myopic\" or \"unaware\"");
    g.mode = *m;
    g.payoff = parse_payoff(top.child("payoff"));

    if (!top.has("technologies") || !top.raw("technologies").is_array())
        fail(top.where(), "\"technologies\" must be an array");
    const json& techs = top.raw("technologies");
    if (techs.empty()) fail(top.loc("/technologies"), "at least one technology is required");
    for (std::size_t k = 0; k < techs.size(); ++k) {
        const Node t(techs[k], "/technologies/" + std::to_string(k), origin);
        t.allow({"name", "view", "Q"});
        const std::string name = t.string("name", k == 0 ? "x" : "y");
        TechnologyViewPair pair = parse_view(t.child("view"), g.grid.b, out.output_atoms);
        TrueProcess q = t.has("Q") ? parse_truth(t.raw("Q"), t, pair, g.grid.points) : TrueProcess::member(Stance::H);
        g.technologies.push_back({name, std::move(pair), std::move(q)});
    }

    const Node models = top.child("models");
    models.allow({"A", "B"});
    if (!models.has("A") || !models.has("B")) fail(models.where(), "both \"A\" and \"B\" models are required");
    g.model_A = parse_model_array(models.raw("A"), models, models.at("A"));
    g.model_B = parse_model_array(models.raw("B"), models, models.at("B"));

    if (top.has("assignment") && !top.raw("assignment").is_null()) {
        const json& a = top.raw("assignment");
        if (!a.is_array() || a.size() != 2) fail(top.loc("/assignment"), "expected [tech of A, tech of B]");
        std::array<int, 2> asg{};
        for (std::size_t i = 0; i < 2; ++i) {
            if (a[i].is_number_integer()) {
                asg[i] = a[i].get<int>();
            } else if (a[i].is_string()) {
                asg[i] = -1;
                for (std::size_t k = 0; k < g.technologies.size(); ++k)
                    if (g.technologies[k].name == a[i].get<std::string>()) asg[i] = static_cast<int>(k);
                if (asg[i] < 0) fail(top.loc("/assignment/" + std::to_string(i)), "unknown technology name");
            } else {
                fail(top.loc("/assignment/" + std::to_string(i)), "expected a technology name or index");
            }
        }
        g.assignment = asg;
    }
    if (top.has("seed")) {
        out.seed = top.unsigned_integer("seed");
        g.seed = *out.seed;
    }
    if (top.has("mc")) out.mc_paths = top.unsigned_integer("mc");

    try {
        g.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return out;
}

LoadedConfig load_config(const std::string& path, const ConfigOverrides& overrides) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path, overrides);
}

std::string config_template(Family family) {
    const char* common_tail = R"(  "grid": {"effort_points": 401, "output_atoms": 201, "refine": 10},
  "seed": 1
}
)";
    std::string s;
    switch (family) {
        case Family::DiscreteBandit:
            s = R"(// DiscreteBandit: H pays R, L pays r, each with probability F(e) = min(1, lambda e).
{
  "b": 1,
  "alpha": 0,
  "delta": 1,
  "mode": "full",            // full | myopic | unaware
  "payoff": {"utility": "quadratic", "c": 4, "beta": 2},
  "technologies": [
    {"name": "x",
     "view": {"family": "DiscreteBandit", "params": {"r": 0, "R": 1, "lambda": 1}},
     "Q": "H"}               // "H", "L", {"uniform_shift": {...}} or {"table": {...}}
  ],
  "models": {"A": ["H"], "B": ["L"]},
)";
            break;
        case Family::AdditiveNoise:
            s = R"(// AdditiveNoise: Y = slope_m e + noise; noise is gaussian (scale = sigma, cut at 4 sigma) or triangular.
{
  "b": 2,
  "alpha": 0.05,
  "delta": 1,
  "mode": "full",
  "payoff": {"utility": "quadratic", "c": 1, "beta": 1},
  "technologies": [
    {"name": "x",
     "view": {"family": "AdditiveNoise",
              "params": {"slope_H": 1, "slope_L": 0.5, "noise": "gaussian", "scale": 1}},
     "Q": "H"}
  ],
  "models": {"A": ["H"], "B": ["L"]},
)";
            break;
        case Family::UniformLinear:
            s = R"(// UniformLinear: H is Y = gamma_H e + U[-psi, psi], L is Y = U[-psi, psi].
{
  "b": 10,
  "alpha": 0.05,
  "delta": 1,
  "mode": "full",
  "payoff": {"utility": "quadratic", "c": 1, "beta": 2},
  "technologies": [
    {"name": "x",
     "view": {"family": "UniformLinear", "params": {"gamma_H": 1, "psi": 5}},
     "Q": {"uniform_shift": {"gamma": 1}}}   // E_Q[Y|e] = gamma e
  ],
  "models": {"A": ["H"], "B": ["L"]},
)";
            break;
        case Family::InverseInfoLinear:
            s = R"(// InverseInfoLinear: H is Y = gamma0 + gamma1 e + N(0, sigma^2), L is Y = gamma2 e + N(0, sigma^2).
// Requires gamma2 > gamma1 > 0 and gamma2 b < gamma0 + gamma1 b.
{
  "b": 8,
  "alpha": 0.05,
  "delta": 1,
  "mode": "full",
  // exponential own-output utility keeps e^H > e^L for these views
  "payoff": {"utility": "exponential", "kappa": 0.3, "c": 1.2, "beta": -2},
  "technologies": [
    {"name": "x",
     "view": {"family": "InverseInfoLinear",
              "params": {"gamma0": 5, "gamma1": 0.5, "gamma2": 1, "sigma": 1}},
     "Q": "H"}
  ],
  "models": {"A": ["H"], "B": ["L"]},
)";
            break;
    }
    return s + common_tail;
}

}  // namespace disagree

#include "disagree/switching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace disagree {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSizeSlack = 1e-14;

struct Pooled {
    std::vector<int> atom_class;
    std::vector<double> own;
    std::vector<double> rival;
};

// Pool a marginal's atoms by rival/own ratio.
Pooled pool_marginal(const MarginalEvidence& m) {
    const std::size_t n = m.support.size();
    Pooled out;
    out.atom_class.assign(n, -1);
    std::vector<std::size_t> idx;
    std::vector<double> ratio(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (m.p_own[i] <= 0.0 && m.p_rival[i] <= 0.0) continue;
        ratio[i] = m.p_own[i] > 0.0 ? m.p_rival[i] / m.p_own[i] : kInf;
        idx.push_back(i);
    }
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return ratio[a] > ratio[b]; });
    double head = 0.0;
    for (std::size_t i : idx) {
        if (out.own.empty() || !same_ratio(head, ratio[i])) {
            head = ratio[i];
            out.own.push_back(0.0);
            out.rival.push_back(0.0);
        }
        out.atom_class[i] = static_cast<int>(out.own.size()) - 1;
        out.own.back() += m.p_own[i];
        out.rival.back() += m.p_rival[i];
    }
    return out;
}

void check_marginal(const MarginalEvidence& m) {
    if (m.p_own.size() != m.support.size() || m.p_rival.size() != m.support.size())
        throw std::invalid_argument("marginal evidence: vectors differ in length");
}

}  // namespace

SwitchTest SwitchTest::never(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha outside [0, 1]");
    SwitchTest t;
    t.degenerate_ = true;
    t.alpha_ = alpha;
    return t;
}

SwitchTest SwitchTest::build(const Model& own, const Model& rival, std::array<double, 2> efforts,
                             std::array<int, 2> techs, std::span<const TechnologyViewPair> views, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha outside [0, 1]");
    if (own.techs() != views.size() || rival.techs() != views.size())
        throw std::invalid_argument("model size differs from the number of technologies");
    std::array<MarginalEvidence, 2> marg;
    for (int i = 0; i < 2; ++i) {
        const int k = techs[static_cast<std::size_t>(i)];
        if (k < 0 || static_cast<std::size_t>(k) >= views.size()) throw std::invalid_argument("technology index out of range");
        const auto& pair = views[static_cast<std::size_t>(k)];
        const double e = efforts[static_cast<std::size_t>(i)];
        OutputDistribution d_own = pair.distribution(own[static_cast<std::size_t>(k)], e);
        OutputDistribution d_rival = pair.distribution(rival[static_cast<std::size_t>(k)], e);
        marg[static_cast<std::size_t>(i)] = {std::move(d_own.values), std::move(d_own.probs), std::move(d_rival.probs)};
    }
    if (own == rival) {
        SwitchTest t = never(alpha);
        t.marginals_ = std::move(marg);
        return t;
    }
    return from_marginals(std::move(marg), alpha);
}

SwitchTest SwitchTest::from_marginals(std::array<MarginalEvidence, 2> marginals, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha outside [0, 1]");
    for (const auto& m : marginals) check_marginal(m);
    SwitchTest t;
    t.alpha_ = alpha;
    t.marginals_ = std::move(marginals);
    t.calibrate();
    return t;
}

void SwitchTest::calibrate() {
    const Pooled a = pool_marginal(marginals_[0]);
    const Pooled b = pool_marginal(marginals_[1]);
    atom_class_ = {a.atom_class, b.atom_class};
    classes_b_ = b.own.size();
    class_decision_.assign(a.own.size() * b.own.size(), 0.0);

    struct Joint {
        double ratio, own, rival;
        std::size_t cell;
    };
    std::vector<Joint> cells;
    cells.reserve(class_decision_.size());
    for (std::size_t i = 0; i < a.own.size(); ++i)
        for (std::size_t j = 0; j < b.own.size(); ++j) {
            const double own = a.own[i] * b.own[j];
            const double rival = a.rival[i] * b.rival[j];
            if (own <= 0.0 && rival <= 0.0) continue;  // impossible under both models
            cells.push_back({own > 0.0 ? rival / own : kInf, own, rival, i * classes_b_ + j});
        }
    std::stable_sort(cells.begin(), cells.end(), [](const Joint& x, const Joint& y) { return x.ratio > y.ratio; });

    // Group into ratio classes (ranges of `cells`).
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (groups.empty() || !same_ratio(cells[groups.back().first].ratio, cells[i].ratio)) groups.emplace_back(i, i);
        groups.back().second = i + 1;
    }
    const auto mass = [&](std::pair<std::size_t, std::size_t> g, bool own) {
        double s = 0.0;
        for (std::size_t i = g.first; i < g.second; ++i) s += own ? cells[i].own : cells[i].rival;
        return s;
    };
    const auto set = [&](std::pair<std::size_t, std::size_t> g, double d) {
        for (std::size_t i = g.first; i < g.second; ++i) class_decision_[cells[i].cell] = d;
    };

    double before = 0.0;
    std::size_t g = 0;
    if (g < groups.size() && std::isinf(cells[groups[g].first].ratio)) set(groups[g++], 1.0);
    c_ = 0.0;
    q_ = 0.0;
    bool bound = false;
    for (; g < groups.size(); ++g) {
        const double own_k = mass(groups[g], true);
        if (before + own_k > alpha_ + kSizeSlack) {
            c_ = cells[groups[g].first].ratio;
            q_ = std::clamp((alpha_ - before) / own_k, 0.0, 1.0);
            set(groups[g], q_);
            bound = true;
            break;
        }
        before += own_k;
        set(groups[g], 1.0);
    }
    if (!bound && !groups.empty()) {
        // Every class fits: c = 0 and the ratio-0 class (if any) carries the randomization.
        const auto& last = groups.back();
        if (cells[last.first].ratio == 0.0 || same_ratio(cells[last.first].ratio, 0.0)) {
            const double own0 = mass(last, true);
            q_ = std::clamp((alpha_ - (before - own0)) / own0, 0.0, 1.0);
            set(last, q_);
        }
    }

    type_one_ = 0.0;
    power_ = 0.0;
    for (const Joint& j : cells) {
        type_one_ += j.own * class_decision_[j.cell];
        power_ += j.rival * class_decision_[j.cell];
    }
}

double SwitchTest::decision_at(std::size_t i_a, std::size_t i_b) const {
    if (degenerate_) return 0.0;
    const int ca = atom_class_[0].at(i_a);
    const int cb = atom_class_[1].at(i_b);
    if (ca < 0 || cb < 0) return 0.0;
    return class_decision_[static_cast<std::size_t>(ca) * classes_b_ + static_cast<std::size_t>(cb)];
}

double SwitchTest::decision(double y_a, double y_b) const {
    if (degenerate_) return 0.0;
    const auto i = find_atom(marginals_[0].support, y_a);
    const auto j = find_atom(marginals_[1].support, y_b);
    if (!i || !j) return 0.0;
    return decision_at(*i, *j);
}

double switch_probability(const SwitchTest& test, const OutputDistribution& law_a, const OutputDistribution& law_b) {
    if (test.degenerate()) return 0.0;
    const auto match = [](const MarginalEvidence& m, const OutputDistribution& law) {
        std::vector<std::pair<std::size_t, double>> out;
        for (std::size_t i = 0; i < law.size(); ++i) {
            if (law.probs[i] <= 0.0) continue;
            if (const auto j = find_atom(m.support, law.values[i])) out.emplace_back(*j, law.probs[i]);
        }
        return out;
    };
    const auto a = match(test.marginal(Player::A), law_a);
    const auto b = match(test.marginal(Player::B), law_b);
    double p = 0.0;
    for (const auto& [i, pa] : a)
        for (const auto& [j, pb] : b) p += pa * pb * test.decision_at(i, j);
    return std::min(p, 1.0);
}

double switch_probability(const SwitchTest& test, const Model& under, std::array<double, 2> efforts,
                          std::array<int, 2> techs, std::span<const TechnologyViewPair> views) {
    const auto law = [&](int i) {
        const int k = techs[static_cast<std::size_t>(i)];
        return views[static_cast<std::size_t>(k)].distribution(under[static_cast<std::size_t>(k)],
                                                                efforts[static_cast<std::size_t>(i)]);
    };
    return switch_probability(test, law(0), law(1));
}

bool apply_test(const SwitchTest& test, double y_a, double y_b, std::mt19937_64& rng) {
    const double d = test.decision(y_a, y_b);
    if (d <= 0.0) return false;
    if (d >= 1.0) return true;
    return unit_draw(rng) < d;
}

}  // namespace disagree

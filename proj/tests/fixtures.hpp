#pragma once

#include <string>

#include "disagree/config.hpp"
#include "disagree/game.hpp"

namespace fixtures {

using namespace disagree;

inline const Model H{Stance::H};
inline const Model L{Stance::L};

// Bandit illustration: R = 1, F(e) = e, u = y - (c/2) e^2, v = beta y.
inline GameConfig bandit(double beta = 2.0, double r = 0.0, double alpha = 0.0, double c = 4.0, int points = 401) {
    GameConfig g;
    g.grid = {1.0, points, 10};
    g.technologies.push_back({"x", TechnologyViewPair::discrete_bandit({r, 1.0, 1.0}, 1.0), TrueProcess::member(Stance::H)});
    g.model_A = H;
    g.model_B = L;
    g.payoff = PayoffSpec::quadratic(c, beta);
    g.alpha = alpha;
    return g;
}

inline GameConfig bandit_two_tech(double r = 0.0, double alpha = 0.0, double beta = 2.0) {
    GameConfig g = bandit(beta, r, alpha);
    g.technologies.push_back({"y", TechnologyViewPair::discrete_bandit({r, 1.0, 1.0}, 1.0), TrueProcess::member(Stance::H)});
    g.model_A = Model{Stance::H, Stance::L};
    g.model_B = Model{Stance::L, Stance::H};
    return g;
}

// Uniform-noise example: gamma_H = 1, psi = 5, b = 10, c = 1.
inline GameConfig uniform(double beta = 2.0, double alpha = 0.05, double gamma_q = 1.0) {
    GameConfig g;
    g.grid = {10.0, 401, 10};
    auto pair = TechnologyViewPair::uniform_linear({1.0, 5.0}, 10.0);
    auto q = TrueProcess::uniform_shift(pair, gamma_q, 401);
    g.technologies.push_back({"x", pair, q});
    g.model_A = H;
    g.model_B = L;
    g.payoff = PayoffSpec::quadratic(1.0, beta);
    g.alpha = alpha;
    return g;
}

inline GameConfig inverse_info(double sigma, double kappa, double c, double beta, int atoms = 101, int points = 201) {
    GameConfig g;
    g.grid = {8.0, points, 10};
    g.technologies.push_back(
        {"x", TechnologyViewPair::inverse_info_linear({5.0, 0.5, 1.0, sigma}, 8.0, atoms), TrueProcess::member(Stance::H)});
    g.model_A = H;
    g.model_B = L;
    g.payoff = PayoffSpec::exponential(kappa, c, beta);
    g.alpha = 0.05;
    return g;
}

inline std::string source_path(const std::string& rel) { return std::string(DISAGREE_SOURCE_DIR) + "/" + rel; }

}  // namespace fixtures

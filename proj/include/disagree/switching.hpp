#pragma once

// Model-switch rule: player i abandons m_own for m_rival when
//   L_rival(y | e, k) > c * L_own(y | e, k),
// switches with probability q on equality, and never otherwise.  c is the
// smallest non-negative scalar keeping the type-I error (switching while
// m_own is true) at most alpha; q brings it to exactly alpha whenever the
// boundary class has mass.  Outcomes impossible under both models never
// trigger a switch.

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "disagree/experiments.hpp"
#include "disagree/model.hpp"
#include "disagree/views.hpp"

namespace disagree {

// Per-player marginal: the player's output law under the owner's model and
// under the rival's model, on a shared support.
struct MarginalEvidence {
    std::vector<double> support;
    std::vector<double> p_own;
    std::vector<double> p_rival;
};

class SwitchTest {
public:
    // Joint test over both players' first-period outputs.
    static SwitchTest build(const Model& own, const Model& rival, std::array<double, 2> efforts,
                            std::array<int, 2> techs, std::span<const TechnologyViewPair> views, double alpha);
    // Test on arbitrary independent marginals (one per player).
    static SwitchTest from_marginals(std::array<MarginalEvidence, 2> marginals, double alpha);
    static SwitchTest never(double alpha);

    bool degenerate() const { return degenerate_; }
    double alpha() const { return alpha_; }
    double critical_value() const { return c_; }
    double randomization() const { return q_; }
    double type_one_error() const { return type_one_; }
    double power() const { return power_; }  // switch probability when the rival model is true

    const MarginalEvidence& marginal(Player p) const { return marginals_[index(p)]; }

    // Switch probability for an outcome: 1 inside the region, q on the boundary, 0 otherwise.
    double decision(double y_a, double y_b) const;
    double decision_at(std::size_t i_a, std::size_t i_b) const;

private:
    SwitchTest() = default;
    void calibrate();

    bool degenerate_ = false;
    double alpha_ = 0.0;
    double c_ = 0.0;
    double q_ = 0.0;
    double type_one_ = 0.0;
    double power_ = 0.0;
    std::array<MarginalEvidence, 2> marginals_;
    // Atoms are pooled per player by marginal likelihood ratio; the decision
    // depends only on the pair of marginal classes.  -1 marks off-support atoms.
    std::array<std::vector<int>, 2> atom_class_;
    std::size_t classes_b_ = 0;
    std::vector<double> class_decision_;
};

// Exact switch probability when the players' outputs follow the given laws.
// Atoms of the laws are matched to the test's support by value; atoms off the
// support never trigger a switch.
double switch_probability(const SwitchTest& test, const OutputDistribution& law_a, const OutputDistribution& law_b);

// Law induced by a model (one view per technology) at the test's efforts/techs.
double switch_probability(const SwitchTest& test, const Model& under, std::array<double, 2> efforts,
                          std::array<int, 2> techs, std::span<const TechnologyViewPair> views);

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
inline double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Realized decision; the generator is consumed only on the boundary.
bool apply_test(const SwitchTest& test, double y_a, double y_b, std::mt19937_64& rng);

}  // namespace disagree

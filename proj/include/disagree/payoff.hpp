#pragma once

// Stage payoff U^i = u(y^i, e^i) + v(y^-i) with v(y) = beta * y.

#include <string>
#include <vector>

#include "disagree/views.hpp"

namespace disagree {

enum class OwnUtility { QuadraticCost, ExponentialOutput, Tabulated };

// u on a rectangular (output x effort) table, bilinear in between, clamped at the edges.
struct UtilityTable {
    std::vector<double> outputs;             // ascending
    std::vector<double> efforts;             // ascending
    std::vector<std::vector<double>> values;  // values[i][j] = u(outputs[i], efforts[j])
};

class PayoffSpec {
public:
    // u(y, e) = y - (c/2) e^2
    static PayoffSpec quadratic(double c, double beta);
    // u(y, e) = (exp(kappa y) - 1) / kappa - (c/2) e^2
    static PayoffSpec exponential(double kappa, double c, double beta);
    static PayoffSpec tabulated(UtilityTable table, double beta);

    OwnUtility kind() const { return kind_; }
    double c() const { return c_; }
    double beta() const { return beta_; }
    double kappa() const { return kappa_; }
    const UtilityTable& table() const { return table_; }

    PayoffSpec with_beta(double beta) const;

    double u(double y, double e) const;
    double v(double y) const { return beta_ * y; }

    double expected_u(const OutputDistribution& d, double e) const;
    double expected_v(const OutputDistribution& d) const { return beta_ * d.mean(); }

    // Sign of dv/dy: +1, -1 or 0.
    int externality_sign() const { return (beta_ > 0.0) - (beta_ < 0.0); }

    std::string describe() const;

private:
    PayoffSpec() = default;

    OwnUtility kind_ = OwnUtility::QuadraticCost;
    double c_ = 1.0;
    double beta_ = 0.0;
    double kappa_ = 0.0;
    UtilityTable table_;
};

}  // namespace disagree

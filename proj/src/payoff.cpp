#include "disagree/payoff.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace disagree {

namespace {

// Index i with xs[i] <= x <= xs[i+1] and the weight of xs[i+1]; clamps outside.
std::pair<std::size_t, double> bracket(const std::vector<double>& xs, double x) {
    if (xs.size() == 1 || x <= xs.front()) return {0, 0.0};
    if (x >= xs.back()) return {xs.size() - 2, 1.0};
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xs.begin()) - 1;
    return {i, (x - xs[i]) / (xs[i + 1] - xs[i])};
}

}  // namespace

PayoffSpec PayoffSpec::quadratic(double c, double beta) {
    if (!(c > 0.0)) throw std::invalid_argument("cost parameter c must be positive");
    PayoffSpec p;
    p.kind_ = OwnUtility::QuadraticCost;
    p.c_ = c;
    p.beta_ = beta;
    return p;
}

PayoffSpec PayoffSpec::exponential(double kappa, double c, double beta) {
    if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
    PayoffSpec p = quadratic(c, beta);
    p.kind_ = OwnUtility::ExponentialOutput;
    p.kappa_ = kappa;
    return p;
}

PayoffSpec PayoffSpec::tabulated(UtilityTable table, double beta) {
    const auto& ys = table.outputs;
    const auto& es = table.efforts;
    if (ys.size() < 2 || es.size() < 2) throw std::invalid_argument("utility table needs at least 2x2 entries");
    if (!std::is_sorted(ys.begin(), ys.end()) || !std::is_sorted(es.begin(), es.end()))
        throw std::invalid_argument("utility table axes must be ascending");
    if (table.values.size() != ys.size()) throw std::invalid_argument("utility table: one row per output");
    for (const auto& row : table.values)
        if (row.size() != es.size()) throw std::invalid_argument("utility table: one column per effort");
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = 0; j < es.size(); ++j) {
            if (i + 1 < ys.size() && !(table.values[i + 1][j] > table.values[i][j]))
                throw std::invalid_argument("utility table: u must increase in output");
            if (j + 1 < es.size() && !(table.values[i][j + 1] < table.values[i][j]))
                throw std::invalid_argument("utility table: u must decrease in effort");
        }
    PayoffSpec p;
    p.kind_ = OwnUtility::Tabulated;
    p.beta_ = beta;
    p.table_ = std::move(table);
    return p;
}

PayoffSpec PayoffSpec::with_beta(double beta) const {
    PayoffSpec p = *this;
    p.beta_ = beta;
    return p;
}

double PayoffSpec::u(double y, double e) const {
    switch (kind_) {
        case OwnUtility::QuadraticCost: return y - 0.5 * c_ * e * e;
        case OwnUtility::ExponentialOutput: return std::expm1(kappa_ * y) / kappa_ - 0.5 * c_ * e * e;
        case OwnUtility::Tabulated: {
            const auto [i, wy] = bracket(table_.outputs, y);
            const auto [j, we] = bracket(table_.efforts, e);
            const auto& v = table_.values;
            return (1 - wy) * ((1 - we) * v[i][j] + we * v[i][j + 1]) + wy * ((1 - we) * v[i + 1][j] + we * v[i + 1][j + 1]);
        }
    }
    return 0.0;
}

double PayoffSpec::expected_u(const OutputDistribution& d, double e) const {
    if (kind_ == OwnUtility::QuadraticCost) return d.mean() - 0.5 * c_ * e * e;
    double s = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) s += d.probs[i] * u(d.values[i], e);
    return s;
}

std::string PayoffSpec::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case OwnUtility::QuadraticCost: os << "u = y - (c/2)e^2, c=" << c_; break;
        case OwnUtility::ExponentialOutput: os << "u = (exp(kappa y)-1)/kappa - (c/2)e^2, kappa=" << kappa_ << ", c=" << c_; break;
        case OwnUtility::Tabulated: os << "u tabulated (" << table_.outputs.size() << "x" << table_.efforts.size() << ")"; break;
    }
    os << "; v = beta y, beta=" << beta_;
    return os.str();
}

}  // namespace disagree

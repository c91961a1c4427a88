#include "disagree/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace disagree {

bool Model::optimistic_somewhere() const {
    return std::find(views.begin(), views.end(), Stance::H) != views.end();
}

std::string to_string(const Model& m) {
    if (m.techs() == 1) return to_string(m[0]);
    std::string s = "(";
    for (std::size_t k = 0; k < m.techs(); ++k) {
        if (k) s += ",";
        s += to_string(m[k]);
    }
    return s + ")";
}

Model parse_model(const std::string& text) {
    std::vector<Stance> v;
    for (char ch : text) {
        if (ch == 'H') v.push_back(Stance::H);
        else if (ch == 'L') v.push_back(Stance::L);
        else if (ch != '(' && ch != ')' && ch != ',' && ch != ' ')
            throw std::invalid_argument("bad model string: " + text);
    }
    if (v.empty()) throw std::invalid_argument("empty model string");
    return Model(std::move(v));
}

std::vector<Model> all_models(std::size_t k) {
    std::vector<Model> out;
    const std::size_t n = std::size_t{1} << k;
    for (std::size_t mask = 0; mask < n; ++mask) {
        std::vector<Stance> v(k);
        for (std::size_t j = 0; j < k; ++j) v[j] = (mask >> (k - 1 - j)) & 1 ? Stance::L : Stance::H;
        out.emplace_back(std::move(v));
    }
    return out;
}

}  // namespace disagree

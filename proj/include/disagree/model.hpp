#pragma once

#include <compare>
#include <string>
#include <vector>

#include "disagree/views.hpp"

namespace disagree {

// One technology view per technology.
struct Model {
    std::vector<Stance> views;

    Model() = default;
    Model(std::initializer_list<Stance> v) : views(v) {}
    explicit Model(std::vector<Stance> v) : views(std::move(v)) {}

    std::size_t techs() const { return views.size(); }
    Stance operator[](std::size_t k) const { return views.at(k); }
    bool optimistic_somewhere() const;

    auto operator<=>(const Model&) const = default;
    bool operator==(const Model&) const = default;
};

// "H" for one technology, "(H,L)" for two.
std::string to_string(const Model& m);
Model parse_model(const std::string& text);

// Every model over k technologies, in lexicographic order H < L.
std::vector<Model> all_models(std::size_t k);

struct Action {
    double effort = 0.0;
    int tech = 0;

    bool operator==(const Action&) const = default;
};

enum class Player : int { A = 0, B = 1 };

constexpr int index(Player p) { return static_cast<int>(p); }
constexpr Player rival(Player p) { return p == Player::A ? Player::B : Player::A; }

}  // namespace disagree

#pragma once

#include <json.hpp>

#include "cells.hpp"
#include "involution.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"

namespace schubcalc {

using nlohmann::json;

// Canonical JSON: object keys sort alphabetically (nlohmann's default map)
// and polynomial terms follow the canonical monomial order, so equal values
// serialize to identical bytes.

inline json to_json(const Polynomial& f) {
    json terms = json::array();
    for (auto& [m, c] : f.terms()) {
        json mono = json::array();
        for (auto& [v, e] : m.factors)
            mono.push_back(json::array({v.alphabet == Alphabet::X ? "x" : "y", v.index, e}));
        terms.push_back(json{{"c", c.str()}, {"m", mono}});
    }
    return json{{"terms", terms}};
}

inline Polynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("polynomial json needs a terms array");
    Polynomial f;
    for (const json& t : j["terms"]) {
        Int c(t.at("c").get<std::string>());
        Monomial m;
        for (const json& v : t.at("m")) {
            std::string alpha = v.at(0).get<std::string>();
            if (alpha != "x" && alpha != "y") throw std::invalid_argument("unknown alphabet " + alpha);
            m.factors.emplace_back(VarRef(alpha == "x" ? Alphabet::X : Alphabet::Y, v.at(1).get<int>()),
                                   v.at(2).get<int>());
        }
        std::sort(m.factors.begin(), m.factors.end());
        f.add_term(m, c);
    }
    return f;
}

inline json to_json(const Permutation& w) { return json{{"oneline", w.oneline()}}; }

inline Permutation permutation_from_json(const json& j) {
    return Permutation(j.at("oneline").get<std::vector<int>>());
}

inline json to_json(const Involution& y) {
    return json{{"flavor", flavor_name(y.flavor())}, {"oneline", y.perm().oneline()}};
}

inline Involution involution_from_json(const json& j) {
    std::string f = j.at("flavor").get<std::string>();
    if (f != "O" && f != "Sp") throw std::invalid_argument("unknown flavor " + f);
    return Involution(Permutation(j.at("oneline").get<std::vector<int>>()),
                      f == "O" ? Flavor::O : Flavor::Sp);
}

inline json to_json(const Partition& p) { return json(p); }

inline json to_json(const CellSet& s) {
    json out = json::array();
    for (const Cell& c : s.cells()) out.push_back(json::array({c.row, c.col}));
    return out;
}

inline CellSet cellset_from_json(const json& j) {
    std::vector<Cell> cells;
    for (const json& c : j) cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    return CellSet(std::move(cells));
}

} // namespace schubcalc

#pragma once

#include <random>
#include <vector>

#include "starfold/monomial.hpp"

namespace starfold::testutil {

inline Exponent E(std::vector<int> v) { return Exponent(std::move(v)); }

// All exponent vectors u with 0 <= u_i <= box[i], in mixed-radix order.
inline std::vector<Exponent> box_points(const std::vector<int>& box) {
    std::vector<Exponent> out;
    std::vector<int> cur(box.size(), 0);
    for (;;) {
        out.push_back(Exponent(cur));
        std::size_t i = 0;
        while (i < box.size() && cur[i] == box[i])
            cur[i++] = 0;
        if (i == box.size())
            return out;
        ++cur[i];
    }
}

// Membership agreement over a full box; the blunt instrument behind most
// equality checks in the suite.
inline bool agree_on_box(const MonomialIdeal& I, const MonomialIdeal& J,
                         const std::vector<int>& box) {
    for (const Exponent& u : box_points(box))
        if (I.member(u) != J.member(u))
            return false;
    return true;
}

inline MonomialIdeal random_ideal(std::mt19937& rng, int s, int max_exp, int n_gens) {
    std::uniform_int_distribution<int> d(0, max_exp);
    std::vector<Exponent> gens;
    for (int k = 0; k < n_gens; ++k) {
        std::vector<int> e(static_cast<std::size_t>(s));
        for (int& x : e)
            x = d(rng);
        gens.push_back(Exponent(std::move(e)));
    }
    return MonomialIdeal::make(s, std::move(gens));
}

} // namespace starfold::testutil

#include "starfold/monomial.hpp"

#include <algorithm>

#include "starfold/numeric.hpp"

namespace starfold {

Exponent::Exponent(std::vector<int> entries) : e_(std::move(entries)) {
    for (int x : e_)
        if (x < 0)
            throw ParameterError("Exponent: negative entry");
}

Exponent Exponent::zero(int s) {
    if (s < 0)
        throw ParameterError("Exponent::zero: s < 0");
    return Exponent(std::vector<int>(static_cast<std::size_t>(s), 0));
}

Exponent Exponent::unit(int s, int i) {
    if (i < 0 || i >= s)
        throw ParameterError("Exponent::unit: index out of range");
    std::vector<int> e(static_cast<std::size_t>(s), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return Exponent(std::move(e));
}

int Exponent::degree() const {
    int d = 0;
    for (int x : e_)
        d = checked_add(d, x);
    return d;
}

bool Exponent::divides(const Exponent& u) const {
    if (e_.size() != u.e_.size())
        throw DimensionError("Exponent::divides: size mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > u.e_[i])
            return false;
    return true;
}

Exponent Exponent::lcm(const Exponent& u) const {
    if (e_.size() != u.e_.size())
        throw DimensionError("Exponent::lcm: size mismatch");
    std::vector<int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
        r[i] = std::max(e_[i], u.e_[i]);
    return Exponent(std::move(r));
}

Exponent Exponent::plus(const Exponent& u) const {
    if (e_.size() != u.e_.size())
        throw DimensionError("Exponent::plus: size mismatch");
    std::vector<int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
        r[i] = checked_add(e_[i], u.e_[i]);
    return Exponent(std::move(r));
}

Exponent Exponent::colon_by(const Exponent& u) const {
    if (e_.size() != u.e_.size())
        throw DimensionError("Exponent::colon_by: size mismatch");
    std::vector<int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
        r[i] = std::max(e_[i] - u.e_[i], 0);
    return Exponent(std::move(r));
}

std::string Exponent::str() const {
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'z';
        out += std::to_string(i + 1);
        if (e_[i] > 1) {
            out += '^';
            out += std::to_string(e_[i]);
        }
    }
    return out.empty() ? "1" : out;
}

bool canonical_less(const Exponent& x, const Exponent& y) {
    int dx = x.degree(), dy = y.degree();
    if (dx != dy)
        return dx < dy;
    return x.entries() > y.entries();
}

MonomialIdeal MonomialIdeal::zero(int s) { return MonomialIdeal(s, {}); }

MonomialIdeal MonomialIdeal::unit(int s) { return MonomialIdeal(s, {Exponent::zero(s)}); }

MonomialIdeal MonomialIdeal::make(int s, std::vector<Exponent> gens) {
    return minimalize(s, std::move(gens));
}

bool MonomialIdeal::is_unit() const {
    return !gens_.empty() && gens_.front().degree() == 0;
}

bool MonomialIdeal::member(const Exponent& u) const {
    if (u.size() != s_)
        throw DimensionError("MonomialIdeal::member: size mismatch");
    int du = u.degree();
    for (const Exponent& g : gens_) {
        if (g.degree() > du)
            break; // gens sorted by degree
        if (g.divides(u))
            return true;
    }
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    if (other.s_ != s_)
        throw DimensionError("MonomialIdeal::contains: variable count mismatch");
    for (const Exponent& g : other.gens_)
        if (!member(g))
            return false;
    return true;
}

MonomialIdeal minimalize(int s, std::vector<Exponent> gens) {
    for (const Exponent& g : gens)
        if (g.size() != s)
            throw DimensionError("minimalize: generator size mismatch");
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<Exponent> kept;
    std::vector<int> kept_deg;
    kept.reserve(gens.size());
    for (const Exponent& g : gens) {
        int dg = g.degree();
        bool dominated = false;
        // Same-degree generators never strictly divide each other, so only
        // strictly smaller degrees need checking.
        for (std::size_t i = 0; i < kept.size() && kept_deg[i] < dg; ++i) {
            if (kept[i].divides(g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            kept.push_back(g);
            kept_deg.push_back(dg);
        }
    }
    return MonomialIdeal(s, std::move(kept));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J, std::size_t pair_cap) {
    if (I.vars() != J.vars())
        throw DimensionError("intersect: variable count mismatch");
    int s = I.vars();
    if (I.is_zero() || J.is_zero())
        return MonomialIdeal::zero(s);
    if (I.is_unit())
        return J;
    if (J.is_unit())
        return I;
    if (I.contains(J))
        return J;
    if (J.contains(I))
        return I;
    std::size_t pairs = I.gens().size() * J.gens().size();
    if (pairs > pair_cap)
        throw ResourceError("intersect: intermediate generator cap exceeded");
    std::vector<Exponent> lcms;
    lcms.reserve(pairs);
    for (const Exponent& g : I.gens())
        for (const Exponent& h : J.gens())
            lcms.push_back(g.lcm(h));
    return minimalize(s, std::move(lcms));
}

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.vars() != J.vars())
        throw DimensionError("multiply: variable count mismatch");
    int s = I.vars();
    if (I.is_zero() || J.is_zero())
        return MonomialIdeal::zero(s);
    std::vector<Exponent> prods;
    prods.reserve(I.gens().size() * J.gens().size());
    for (const Exponent& g : I.gens())
        for (const Exponent& h : J.gens())
            prods.push_back(g.plus(h));
    return minimalize(s, std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& I, int r) {
    if (r < 0)
        throw ParameterError("power: negative exponent");
    if (r == 0)
        return MonomialIdeal::unit(I.vars());
    MonomialIdeal acc = I;
    for (int k = 1; k < r; ++k)
        acc = multiply(acc, I);
    return acc;
}

MonomialIdeal colon(const MonomialIdeal& I, const Exponent& u) {
    if (u.size() != I.vars())
        throw DimensionError("colon: size mismatch");
    std::vector<Exponent> quot;
    quot.reserve(I.gens().size());
    for (const Exponent& g : I.gens())
        quot.push_back(g.colon_by(u));
    return minimalize(I.vars(), std::move(quot));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.vars() != J.vars())
        throw DimensionError("colon: variable count mismatch");
    if (J.is_zero())
        throw ParameterError("colon: colon by the zero ideal");
    bool first = true;
    MonomialIdeal acc = MonomialIdeal::unit(I.vars());
    for (const Exponent& u : J.gens()) {
        MonomialIdeal q = colon(I, u);
        acc = first ? q : intersect(acc, q);
        first = false;
    }
    return acc;
}

MonomialIdeal saturate(const MonomialIdeal& I) {
    int s = I.vars();
    if (s == 0 || I.is_zero() || I.is_unit())
        return I;
    std::vector<Exponent> vars;
    for (int i = 0; i < s; ++i)
        vars.push_back(Exponent::unit(s, i));
    MonomialIdeal m = MonomialIdeal::make(s, std::move(vars));
    MonomialIdeal cur = I;
    for (;;) {
        MonomialIdeal next = colon(cur, m);
        if (next == cur)
            return cur;
        cur = std::move(next);
    }
}

namespace {

void compositions_rec(const std::vector<int>& support, int s, std::size_t pos, int rest,
                      std::vector<int>& cur, std::vector<Exponent>& out) {
    if (pos + 1 == support.size()) {
        cur[static_cast<std::size_t>(support[pos])] = rest;
        out.emplace_back(cur);
        cur[static_cast<std::size_t>(support[pos])] = 0;
        return;
    }
    for (int v = 0; v <= rest; ++v) {
        cur[static_cast<std::size_t>(support[pos])] = v;
        compositions_rec(support, s, pos + 1, rest - v, cur, out);
    }
    cur[static_cast<std::size_t>(support[pos])] = 0;
}

} // namespace

MonomialIdeal var_power_ideal(const std::vector<int>& support, int t, int s) {
    for (int i : support)
        if (i < 0 || i >= s)
            throw ParameterError("var_power_ideal: support index out of range");
    if (t <= 0)
        return MonomialIdeal::unit(s);
    if (support.empty())
        return MonomialIdeal::zero(s);
    std::vector<int> sup = support;
    std::sort(sup.begin(), sup.end());
    if (std::adjacent_find(sup.begin(), sup.end()) != sup.end())
        throw ParameterError("var_power_ideal: repeated support index");
    std::vector<Exponent> gens;
    std::vector<int> cur(static_cast<std::size_t>(s), 0);
    compositions_rec(sup, s, 0, t, cur, gens);
    // All generators share degree t, so they already form an antichain.
    return MonomialIdeal::make(s, std::move(gens));
}

bool var_power_member(const std::vector<int>& support, int t, const Exponent& u) {
    long long sum = 0;
    for (int i : support) {
        if (i < 0 || i >= u.size())
            throw ParameterError("var_power_member: support index out of range");
        sum += u[i];
    }
    return sum >= t;
}

} // namespace starfold

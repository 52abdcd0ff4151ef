#include "starfold/fold_product.hpp"

#include <algorithm>

#include "starfold/numeric.hpp"

namespace starfold {

Multiplicities::Multiplicities(std::vector<int> m_, int a_) : m(std::move(m_)), a(a_) {
    if (m.empty())
        throw ParameterError("Multiplicities: no variables");
    for (int mi : m)
        if (mi < 1)
            throw ParameterError("Multiplicities: entries must be positive");
    if (a < 1 || a > total())
        throw ParameterError("Multiplicities: need 1 <= a <= sum of multiplicities");
}

int Multiplicities::total() const {
    int t = 0;
    for (int mi : m)
        t = checked_add(t, mi);
    return t;
}

Multiplicities UniformParams::mult() const {
    return Multiplicities(std::vector<int>(static_cast<std::size_t>(s), b), a);
}

UniformParams uniform_params(int s, int a, int b) {
    if (s < 1 || b < 1)
        throw ParameterError("uniform_params: need s >= 1 and b >= 1");
    if (a < 1 || a > s * b)
        throw ParameterError("uniform_params: need 1 <= a <= s*b");
    UniformParams P;
    P.s = s;
    P.a = a;
    P.b = b;
    P.c0 = s - (a - 1) / b;
    P.mu0 = a - b * (s - P.c0);
    P.delta = a - (b - 1) * s - 1;
    return P;
}

namespace {

void fold_rec(const std::vector<int>& m, std::size_t pos, int rest, std::vector<int>& cur,
              std::vector<Exponent>& out) {
    if (pos + 1 == m.size()) {
        if (rest <= m[pos]) {
            cur[pos] = rest;
            out.emplace_back(cur);
        }
        return;
    }
    // Prune branches that cannot absorb the remaining degree.
    int tail = 0;
    for (std::size_t j = pos + 1; j < m.size(); ++j)
        tail += m[j];
    int lo = std::max(0, rest - tail);
    int hi = std::min(m[pos], rest);
    for (int v = lo; v <= hi; ++v) {
        cur[pos] = v;
        fold_rec(m, pos + 1, rest - v, cur, out);
    }
    cur[pos] = 0;
}

} // namespace

MonomialIdeal fold_generators(const Multiplicities& mult) {
    std::vector<Exponent> gens;
    std::vector<int> cur(mult.m.size(), 0);
    fold_rec(mult.m, 0, mult.a, cur, gens);
    // Equigenerated, so already an antichain.
    return MonomialIdeal::make(mult.vars(), std::move(gens));
}

MonomialIdeal fold_generators(int s, int a, int b) {
    return fold_generators(uniform_params(s, a, b).mult());
}

SymmetricIdeal fold_symmetric(const UniformParams& P) {
    std::vector<Partition> lambdas;
    std::vector<int> cur(static_cast<std::size_t>(P.s), 0);
    // Weakly increasing vectors with parts <= b and weight a.
    auto rec = [&](auto&& self, int pos, int low, int rest) -> void {
        if (pos == P.s) {
            if (rest == 0)
                lambdas.emplace_back(cur);
            return;
        }
        for (int v = low; v <= std::min(P.b, rest); ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v, rest - v);
        }
    };
    rec(rec, 0, 0, P.a);
    return SymmetricIdeal::from_lambdas(P.s, std::move(lambdas));
}

bool uniform_member(const Exponent& u, const UniformParams& P, int r) {
    if (u.size() != P.s)
        throw DimensionError("uniform_member: size mismatch");
    if (r < 0)
        throw ParameterError("uniform_member: negative power");
    long long cap = static_cast<long long>(P.b) * r;
    long long sum = 0;
    for (int i = 0; i < P.s; ++i)
        sum += std::min(static_cast<long long>(u[i]), cap);
    return sum >= static_cast<long long>(P.a) * r;
}

bool uniform_member(const Partition& lam, const UniformParams& P, int r) {
    return uniform_member(lam.as_exponent(), P, r);
}

MonomialIdeal fold_power(const Multiplicities& mult, int r) {
    if (r < 0)
        throw ParameterError("fold_power: negative power");
    if (r == 0)
        return MonomialIdeal::unit(mult.vars());
    std::vector<int> rm(mult.m.size());
    for (std::size_t i = 0; i < mult.m.size(); ++i)
        rm[i] = checked_mul(mult.m[i], r);
    return fold_generators(Multiplicities(std::move(rm), checked_mul(mult.a, r)));
}

namespace {

// Subsets of [s] ordered by size then by lowest-index-first; fixes the
// intersection order so runs are reproducible.
std::vector<std::vector<int>> subsets_by_size(int s, int max_size) {
    std::vector<std::vector<int>> out;
    for (int c = 1; c <= max_size; ++c) {
        std::vector<int> idx(static_cast<std::size_t>(c));
        for (int i = 0; i < c; ++i)
            idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            out.push_back(idx);
            int j = c - 1;
            while (j >= 0 && idx[static_cast<std::size_t>(j)] == s - c + j)
                --j;
            if (j < 0)
                break;
            ++idx[static_cast<std::size_t>(j)];
            for (int k = j + 1; k < c; ++k)
                idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
        }
    }
    return out;
}

MonomialIdeal decomposition(const Multiplicities& mult, int max_size) {
    int s = mult.vars();
    int total = mult.total();
    MonomialIdeal acc = MonomialIdeal::unit(s);
    for (const std::vector<int>& S : subsets_by_size(s, max_size)) {
        int outside = total;
        for (int i : S)
            outside -= mult.m[static_cast<std::size_t>(i)];
        int mu = mult.a - outside;
        if (mu <= 0)
            continue; // unit component
        acc = intersect(acc, var_power_ideal(S, mu, s));
    }
    return acc;
}

} // namespace

MonomialIdeal regular_decomposition(const Multiplicities& mult) {
    return decomposition(mult, mult.vars());
}

MonomialIdeal saturation_decomposition(const Multiplicities& mult) {
    return decomposition(mult, mult.vars() - 1);
}

bool colon_step_check(const Multiplicities& mult, int i) {
    if (i < 0 || i >= mult.vars())
        throw ParameterError("colon_step_check: index out of range");
    std::vector<int> up = mult.m;
    ++up[static_cast<std::size_t>(i)];
    MonomialIdeal big = fold_generators(Multiplicities(std::move(up), mult.a + 1));
    MonomialIdeal quotient = colon(big, Exponent::unit(mult.vars(), i));
    return quotient == fold_generators(mult);
}

bool saturation_decomposition_check(const Multiplicities& mult) {
    return saturate(fold_generators(mult)) == saturation_decomposition(mult);
}

} // namespace starfold

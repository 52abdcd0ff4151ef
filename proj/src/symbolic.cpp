#include "starfold/symbolic.hpp"

#include <algorithm>

namespace starfold {

void SymbolicSpec::validate() const {
    if (m < 1)
        throw ParameterError("SymbolicSpec: m must be positive");
    if (ambient != -1 && ambient < 1)
        throw ParameterError("SymbolicSpec: ambient dimension must be positive");
    if (!params.in_range())
        throw RegimeError("SymbolicSpec: needs b <= a <= s*b");
    if (flavor == Flavor::ordinary) {
        if (!params.saturated_regime())
            throw RegimeError(
                "SymbolicSpec: ordinary flavor needs the saturated regime a > (b-1)s + 1");
        int n = ambient == -1 ? params.s - 1 : ambient;
        if (params.delta < params.s - n)
            throw RegimeError(
                "SymbolicSpec: ordinary flavor needs delta >= s - n for ambient n");
    }
}

SymmetricIdeal star_config_symbolic(int s, int c, int m) {
    if (s < 1 || c < 1 || c > s)
        throw ParameterError("star_config_symbolic: need 1 <= c <= s");
    if (m < 1)
        throw ParameterError("star_config_symbolic: m must be positive");
    auto pred = [c, m](const Partition& lam) { return lam.prefix_sum(c) >= m; };
    std::vector<Partition> lams = minimal_partitions(pred, Partition::constant(s, m));
    return SymmetricIdeal::from_lambdas(s, std::move(lams));
}

SymmetricIdeal uniform_symbolic_power(const SymbolicSpec& spec) {
    if (spec.flavor != Flavor::ordinary)
        throw ParameterError("uniform_symbolic_power: spec flavor must be ordinary");
    spec.validate();
    const UniformParams& P = spec.params;
    int m = spec.m;
    // Thresholds climb by b per level; any minimal solution keeps its parts
    // at or below m*b, so that box bounds the search.
    auto pred = [&P, m](const Partition& lam) {
        for (int c = P.c0; c <= P.s - P.delta; ++c)
            if (lam.prefix_sum(c) < m * (P.mu0 + P.b * (c - P.c0)))
                return false;
        return true;
    };
    std::vector<Partition> lams =
        minimal_partitions(pred, Partition::constant(P.s, checked_mul(m, P.b)));
    return SymmetricIdeal::from_lambdas(P.s, std::move(lams));
}

SymmetricIdeal star_symbolic_power(const SymbolicSpec& spec) {
    if (spec.flavor != Flavor::star)
        throw ParameterError("star_symbolic_power: spec flavor must be star");
    spec.validate();
    return star_config_symbolic(spec.params.s, spec.params.c0,
                                checked_mul(spec.m, spec.params.mu0));
}

SymmetricIdeal symbolic_ideal(const SymbolicSpec& spec) {
    return spec.flavor == Flavor::ordinary ? uniform_symbolic_power(spec)
                                           : star_symbolic_power(spec);
}

int alpha_symbolic_closed(const UniformParams& P, int m) {
    if (m < 1)
        throw ParameterError("alpha_symbolic_closed: m must be positive");
    if (!P.saturated_regime())
        throw RegimeError("alpha_symbolic_closed: requires a > (b-1)s + 1");
    long long W = P.mu0 + static_cast<long long>(P.b) * (P.s - P.delta - P.c0);
    long long mW = m * W;
    long long alpha = mW + ceil_div(mW, P.s - P.delta) * P.delta;
    if (alpha > INT32_MAX)
        throw ParameterError("alpha_symbolic_closed: overflow");
    return static_cast<int>(alpha);
}

Rational waldschmidt(const UniformParams& P, Flavor flavor) {
    if (!P.in_range())
        throw RegimeError("waldschmidt: needs b <= a <= s*b");
    if (flavor == Flavor::star)
        return Rational(static_cast<long long>(P.mu0) * P.s, P.c0);
    if (!P.saturated_regime())
        throw RegimeError("waldschmidt: ordinary flavor requires a > (b-1)s + 1");
    long long W = P.mu0 + static_cast<long long>(P.b) * (P.s - P.delta - P.c0);
    return Rational(W * P.s, P.s - P.delta);
}

bool containment(const SymbolicSpec& spec, int r) {
    if (r < 1)
        throw ParameterError("containment: r must be positive");
    SymmetricIdeal J = symbolic_ideal(spec);
    for (const Partition& lam : J.lambdas())
        if (!uniform_member(lam, spec.params, r))
            return false;
    return true;
}

Rational resurgence_closed(const UniformParams& P, Flavor flavor) {
    if (!P.in_range())
        throw RegimeError("resurgence_closed: needs b <= a <= s*b");
    if (flavor == Flavor::star)
        return Rational(static_cast<long long>(P.a) * P.c0,
                        static_cast<long long>(P.mu0) * P.s);
    if (!P.saturated_regime())
        throw RegimeError("resurgence_closed: ordinary flavor requires a > (b-1)s + 1");
    long long W = P.mu0 + static_cast<long long>(P.b) * (P.s - P.delta - P.c0);
    return Rational(static_cast<long long>(P.a) * (P.s - P.delta), P.s * W);
}

ResurgenceSearch resurgence_search(const UniformParams& P, Flavor flavor, int m_max,
                                   int r_max) {
    if (m_max < 1 || r_max < 1)
        throw ParameterError("resurgence_search: bounds must be positive");
    ResurgenceSearch rep;
    rep.closed = resurgence_closed(P, flavor);
    for (int m = 1; m <= m_max; ++m) {
        SymbolicSpec spec{P, m, flavor, -1};
        SymmetricIdeal J = symbolic_ideal(spec);
        for (int r = 1; r <= r_max; ++r) {
            bool contained = true;
            for (const Partition& lam : J.lambdas())
                if (!uniform_member(lam, P, r)) {
                    contained = false;
                    break;
                }
            if (!contained)
                rep.witnesses.push_back({m, r});
        }
    }
    rep.max_ratio = 0;
    rep.sound = true;
    for (const NonContainment& w : rep.witnesses) {
        rep.max_ratio = std::max(rep.max_ratio, w.ratio());
        if (w.ratio() >= rep.closed)
            rep.sound = false;
    }
    return rep;
}

BigInt diophantine_count(const std::vector<int>& B, int target) {
    if (B.empty())
        throw ParameterError("diophantine_count: B must be nonempty");
    for (std::size_t i = 0; i < B.size(); ++i)
        if (B[i] < 1 || (i > 0 && B[i] <= B[i - 1]))
            throw ParameterError("diophantine_count: B must be strictly increasing, >= 1");
    // Positive solutions force at least sum(B); recurse on the first weight.
    auto rec = [&B](auto&& self, std::size_t idx, int rem) -> BigInt {
        if (idx + 1 == B.size())
            return rem >= B[idx] && rem % B[idx] == 0 ? 1 : 0;
        BigInt n = 0;
        int tail_min = 0;
        for (std::size_t j = idx + 1; j < B.size(); ++j)
            tail_min += B[j];
        for (int used = B[idx]; used + tail_min <= rem; used += B[idx])
            n += self(self, idx + 1, rem - used);
        return n;
    };
    return rec(rec, 0, target);
}

std::vector<Partition> sdefect_witnesses(const SymbolicSpec& spec) {
    SymmetricIdeal J = symbolic_ideal(spec);
    std::vector<Partition> out;
    for (const Partition& lam : J.lambdas())
        if (!uniform_member(lam, spec.params, spec.m))
            out.push_back(lam);
    return out;
}

BigInt sdefect_oracle(const SymbolicSpec& spec) {
    BigInt n = 0;
    for (const Partition& lam : sdefect_witnesses(spec))
        n += orbit_size(lam);
    return n;
}

namespace {

// Ascending prefixes of length `len` with parts <= cap summing to `target`,
// extended by the constant tail and accumulated by orbit size.
void constant_tail_orbits(int s, int len, int cap, int target, int tail_value,
                          std::vector<int>& cur, BigInt& acc) {
    if (static_cast<int>(cur.size()) == len) {
        if (target != 0)
            return;
        std::vector<int> lam = cur;
        lam.resize(static_cast<std::size_t>(s), tail_value);
        acc += orbit_size(Partition(std::move(lam)));
        return;
    }
    int low = cur.empty() ? 0 : cur.back();
    for (int v = low; v <= std::min(cap, target); ++v) {
        cur.push_back(v);
        constant_tail_orbits(s, len, cap, target - v, tail_value, cur, acc);
        cur.pop_back();
    }
}

BigInt sdefect_formula_ordinary(const UniformParams& P, int m) {
    long long W = P.mu0 + static_cast<long long>(P.b) * (P.s - P.delta - P.c0);
    int mW = checked_mul(m, static_cast<int>(W));
    int sd = P.s - P.delta;
    BigInt total = 0;
    // Partitions with |lambda_{<= s-delta}| = mW whose last delta+1 parts sit
    // at a common value below m*b.
    for (int t = 0; t < checked_mul(m, P.b); ++t) {
        if (mW - t < 0 || mW - t > static_cast<long long>(t) * (sd - 1))
            continue;
        std::vector<int> cur;
        constant_tail_orbits(P.s, sd - 1, t, mW - t, t, cur, total);
    }
    return total;
}

BigInt sdefect_formula_star(const UniformParams& P, int m) {
    int target = checked_mul(m, P.mu0);
    BigInt total = 0;
    // Nonempty subsets B = {b_1 < ... < b_h} of [c0] as bitmasks.
    for (unsigned mask = 1; mask < (1u << P.c0); ++mask) {
        std::vector<int> B;
        for (int v = 1; v <= P.c0; ++v)
            if (mask & (1u << (v - 1)))
                B.push_back(v);
        BigInt n = diophantine_count(B, target);
        if (n == 0)
            continue;
        BigInt term = n * binomial(P.s, P.c0 - B.back());
        for (std::size_t t = 1; t < B.size(); ++t)
            term *= binomial(P.s - P.c0 + B[t], B[t] - B[t - 1]);
        total += term;
    }
    if (P.a % P.b == 0)
        total -= binomial(P.s, P.c0 - 1);
    return total;
}

} // namespace

BigInt sdefect_formula(const SymbolicSpec& spec) {
    spec.validate();
    return spec.flavor == Flavor::ordinary
               ? sdefect_formula_ordinary(spec.params, spec.m)
               : sdefect_formula_star(spec.params, spec.m);
}

bool power_vs_star_check(const UniformParams& P, int m) {
    SymbolicSpec spec{P, m, Flavor::star, -1};
    SymmetricIdeal J = star_symbolic_power(spec);
    SymmetricIdeal Pm = fold_symmetric(
        uniform_params(P.s, checked_mul(m, P.a), checked_mul(m, P.b)));
    for (const Partition& lam : Pm.lambdas()) {
        bool in_mJ = false;
        for (int i = 0; i < P.s && !in_mJ; ++i) {
            if (lam[i] < 1 || (i > 0 && lam[i] == lam[i - 1]))
                continue; // equal parts give the same monomial after division
            std::vector<int> v = lam.parts();
            --v[static_cast<std::size_t>(i)];
            std::sort(v.begin(), v.end());
            in_mJ = J.member(Partition(std::move(v)));
        }
        if (!in_mJ)
            return true;
    }
    return false;
}

} // namespace starfold

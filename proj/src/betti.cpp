#include "starfold/betti.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace starfold {

void BettiTable::add(int i, int j, const BigInt& v) {
    if (v == 0)
        return;
    if (v < 0)
        throw ParameterError("BettiTable::add: negative entry");
    entries_[{i, j}] += v;
}

BigInt BettiTable::beta(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt BettiTable::total(int i) const {
    BigInt t = 0;
    for (const auto& [ij, v] : entries_)
        if (ij.first == i)
            t += v;
    return t;
}

int BettiTable::max_index() const {
    int m = -1;
    for (const auto& [ij, v] : entries_)
        m = std::max(m, ij.first);
    return m;
}

int BettiTable::max_shift_gap() const {
    int m = -1;
    for (const auto& [ij, v] : entries_)
        m = std::max(m, ij.second - ij.first);
    return m;
}

BettiTable BettiTable::to_quotient() const {
    if (of_ == Of::quotient)
        return *this;
    BettiTable B(Of::quotient);
    B.add(0, 0, 1);
    for (const auto& [ij, v] : entries_)
        B.add(ij.first + 1, ij.second, v);
    return B;
}

BettiTable BettiTable::to_ideal() const {
    if (of_ == Of::ideal)
        return *this;
    BettiTable B(Of::ideal);
    for (const auto& [ij, v] : entries_) {
        if (ij == std::pair<int, int>{0, 0})
            continue;
        B.add(ij.first - 1, ij.second, v);
    }
    return B;
}

int projdim(const BettiTable& B) { return B.max_index(); }

int regularity(const BettiTable& B) { return B.max_shift_gap(); }

bool is_symmetric_shifted(const SymmetricIdeal& I) {
    int s = I.vars();
    for (const Partition& lam : I.lambdas()) {
        for (int k = 0; k < s - 1; ++k) {
            if (lam[k] >= lam[s - 1])
                continue;
            std::vector<int> v = lam.parts();
            ++v[static_cast<std::size_t>(k)];
            --v[static_cast<std::size_t>(s - 1)];
            std::sort(v.begin(), v.end());
            if (!I.member(Partition(std::move(v))))
                return false;
        }
    }
    return true;
}

BettiTable betti_closed(const SymmetricIdeal& I) {
    if (!is_symmetric_shifted(I))
        throw SymmetryError("betti_closed: ideal is not symmetric shifted");
    int s = I.vars();
    BettiTable B(BettiTable::Of::ideal);
    for (const Partition& lam : I.lambdas()) {
        PartitionStats st = partition_stats(lam);
        int d = lam.weight();
        BigInt head = factorial(st.p) / type_factorial_prefix(lam, st.p) * binomial(s, st.p);
        for (int i = 0; i <= s; ++i) {
            BigInt beta = 0;
            for (int k = 0; k <= i; ++k) {
                int l = i - k;
                beta += head * binomial(s - st.p, st.r + k) * binomial(st.r + k - 1, k) *
                        binomial(st.p, l);
            }
            B.add(i, i + d, beta);
        }
    }
    return B;
}

namespace {

// Colon by each generator against its predecessors; stop at the first step
// whose colon is not variable-generated.
QuotientOrder quotients_for(int s, std::vector<Exponent> ordered) {
    QuotientOrder q;
    q.order = std::move(ordered);
    q.verified = true;
    for (std::size_t k = 0; k < q.order.size(); ++k) {
        std::vector<char> var_seen(static_cast<std::size_t>(s), 0);
        std::vector<Exponent> rest;
        for (std::size_t j = 0; j < k; ++j) {
            Exponent d = q.order[j].colon_by(q.order[k]);
            if (d.degree() == 1) {
                for (int i = 0; i < s; ++i)
                    if (d[i] == 1)
                        var_seen[static_cast<std::size_t>(i)] = 1;
            } else {
                rest.push_back(std::move(d));
            }
        }
        bool linear = true;
        for (const Exponent& d : rest) {
            bool covered = false;
            for (int i = 0; i < s && !covered; ++i)
                covered = var_seen[static_cast<std::size_t>(i)] && d[i] >= 1;
            if (!covered) {
                linear = false;
                break;
            }
        }
        if (!linear) {
            q.verified = false;
            return q;
        }
        int nv = 0;
        for (char c : var_seen)
            nv += c;
        q.r.push_back(nv);
    }
    return q;
}

} // namespace

QuotientOrder linear_quotients(const MonomialIdeal& I) {
    return quotients_for(I.vars(), I.gens());
}

std::optional<QuotientOrder> linear_quotients_search(const MonomialIdeal& I) {
    std::size_t n = I.gens().size();
    if (static_cast<std::size_t>(I.vars()) * n > 12)
        throw ResourceError("linear_quotients_search: instance too large");
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;
    do {
        std::vector<Exponent> ordered;
        ordered.reserve(n);
        for (std::size_t i : perm)
            ordered.push_back(I.gens()[i]);
        QuotientOrder q = quotients_for(I.vars(), std::move(ordered));
        if (q.verified)
            return q;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

BettiTable betti_from_quotients(const QuotientOrder& q) {
    if (!q.verified)
        throw ParameterError("betti_from_quotients: order is not a linear-quotients witness");
    BettiTable B(BettiTable::Of::quotient);
    if (!q.order.empty() && q.order.front().degree() == 0)
        return B; // unit ideal: the quotient is the zero module
    B.add(0, 0, 1);
    for (std::size_t k = 0; k < q.order.size(); ++k) {
        int deg = q.order[k].degree();
        for (int i = 1; i <= q.r[k] + 1; ++i)
            B.add(i, deg + i - 1, binomial(q.r[k], i - 1));
    }
    return B;
}

namespace {

// One-step fraction-free elimination; exact over the integers.
template <typename Int> int rank_bareiss(std::vector<std::vector<Int>>& m) {
    if (m.empty() || m.front().empty())
        return 0;
    std::size_t rows = m.size(), cols = m.front().size();
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return static_cast<int>(rank);
}

struct StrandBasis {
    std::vector<unsigned> masks; // sorted ascending
};

int sign_at(unsigned mask, int bit) {
    int below = __builtin_popcount(mask & ((1u << bit) - 1u));
    return below % 2 == 0 ? 1 : -1;
}

// Rank of the Koszul differential from `src` (subsets of size i) into `dst`
// (size i-1) within one multidegree strand.
int strand_rank(const StrandBasis& src, const StrandBasis& dst, const KoszulCaps& caps) {
    if (src.masks.empty() || dst.masks.empty())
        return 0;
    std::size_t rows = dst.masks.size(), cols = src.masks.size();
    if (rows * cols > caps.max_matrix_entries)
        throw ResourceError("betti_koszul: strand matrix cap exceeded");
    // Dimensions stay tiny in practice; 128-bit entries keep the elimination
    // exact up to dimension ~24, bignum beyond that.
    if (rows <= 24 && cols <= 24) {
        std::vector<std::vector<__int128>> m(rows, std::vector<__int128>(cols, 0));
        for (std::size_t ccol = 0; ccol < cols; ++ccol) {
            unsigned S = src.masks[ccol];
            for (unsigned rest = S; rest;) {
                int bit = __builtin_ctz(rest);
                rest &= rest - 1;
                unsigned T = S & ~(1u << bit);
                auto it = std::lower_bound(dst.masks.begin(), dst.masks.end(), T);
                if (it != dst.masks.end() && *it == T)
                    m[static_cast<std::size_t>(it - dst.masks.begin())][ccol] =
                        sign_at(S, bit);
            }
        }
        return rank_bareiss(m);
    }
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols, 0));
    for (std::size_t ccol = 0; ccol < cols; ++ccol) {
        unsigned S = src.masks[ccol];
        for (unsigned rest = S; rest;) {
            int bit = __builtin_ctz(rest);
            rest &= rest - 1;
            unsigned T = S & ~(1u << bit);
            auto it = std::lower_bound(dst.masks.begin(), dst.masks.end(), T);
            if (it != dst.masks.end() && *it == T)
                m[static_cast<std::size_t>(it - dst.masks.begin())][ccol] = sign_at(S, bit);
        }
    }
    return rank_bareiss(m);
}

} // namespace

BettiTable betti_koszul(const MonomialIdeal& I, int max_i, const KoszulCaps& caps) {
    BettiTable B(BettiTable::Of::quotient);
    if (I.is_unit())
        return B;
    B.add(0, 0, 1);
    if (I.is_zero())
        return B;

    int s = I.vars();
    // Variables absent from every generator split off as a free polynomial
    // factor and do not change Betti numbers; drop them.
    std::vector<int> umax_all(static_cast<std::size_t>(s), 0);
    for (const Exponent& g : I.gens())
        for (int i = 0; i < s; ++i)
            umax_all[static_cast<std::size_t>(i)] =
                std::max(umax_all[static_cast<std::size_t>(i)], g[i]);
    std::vector<int> eff;
    for (int i = 0; i < s; ++i)
        if (umax_all[static_cast<std::size_t>(i)] > 0)
            eff.push_back(i);
    int se = static_cast<int>(eff.size());

    std::vector<int> umax(eff.size());
    std::vector<long long> stride(eff.size() + 1);
    stride[0] = 1;
    for (std::size_t i = 0; i < eff.size(); ++i) {
        umax[i] = umax_all[static_cast<std::size_t>(eff[i])];
        stride[i + 1] = stride[i] * (umax[i] + 1);
        if (stride[i + 1] > static_cast<long long>(caps.max_strands))
            throw ResourceError("betti_koszul: strand cap exceeded");
    }
    long long total = stride[eff.size()];

    // Multidegrees strictly above some generator are members; fill by the
    // one-step recursion along each axis.
    std::vector<char> member(static_cast<std::size_t>(total), 0);
    for (const Exponent& g : I.gens()) {
        long long idx = 0;
        for (std::size_t i = 0; i < eff.size(); ++i)
            idx += stride[i] * g[eff[i]];
        member[static_cast<std::size_t>(idx)] = 1;
    }
    {
        std::vector<int> u(eff.size(), 0);
        for (long long idx = 0; idx < total; ++idx) {
            if (!member[static_cast<std::size_t>(idx)]) {
                for (std::size_t i = 0; i < eff.size(); ++i)
                    if (u[i] > 0 && member[static_cast<std::size_t>(idx - stride[i])]) {
                        member[static_cast<std::size_t>(idx)] = 1;
                        break;
                    }
            }
            std::size_t i = 0;
            while (i < eff.size() && u[i] == umax[i])
                u[i++] = 0;
            if (i == eff.size())
                break;
            ++u[i];
        }
    }

    std::vector<StrandBasis> basis(static_cast<std::size_t>(se) + 1);
    std::vector<int> ranks(static_cast<std::size_t>(se) + 2, 0);
    std::vector<int> u(eff.size(), 0);
    int udeg = 0;
    for (long long idx = 0; idx < total; ++idx) {
        // A strand outside the ideal is the chain complex of a full simplex:
        // no homology except the unit already recorded at multidegree zero.
        if (member[static_cast<std::size_t>(idx)]) {
            unsigned full = 0;
            long long full_off = 0;
            for (std::size_t i = 0; i < eff.size(); ++i)
                if (u[i] > 0) {
                    full |= 1u << i;
                    full_off += stride[i];
                }
            // If even dropping one of every present variable stays inside,
            // the whole strand of the quotient vanishes.
            if (!member[static_cast<std::size_t>(idx - full_off)]) {
                for (auto& b : basis)
                    b.masks.clear();
                for (unsigned sub = full;;) {
                    long long off = 0;
                    for (unsigned rest = sub; rest;) {
                        int bit = __builtin_ctz(rest);
                        rest &= rest - 1;
                        off += stride[static_cast<std::size_t>(bit)];
                    }
                    if (!member[static_cast<std::size_t>(idx - off)])
                        basis[static_cast<std::size_t>(__builtin_popcount(sub))]
                            .masks.push_back(sub);
                    if (sub == 0)
                        break;
                    sub = (sub - 1) & full;
                }
                for (auto& b : basis)
                    std::sort(b.masks.begin(), b.masks.end());
                int top = __builtin_popcount(full);
                for (int i = 1; i <= top; ++i)
                    ranks[static_cast<std::size_t>(i)] = strand_rank(
                        basis[static_cast<std::size_t>(i)],
                        basis[static_cast<std::size_t>(i - 1)], caps);
                ranks[static_cast<std::size_t>(top) + 1] = 0;
                for (int i = 1; i <= top && i <= max_i; ++i) {
                    long long h =
                        static_cast<long long>(basis[static_cast<std::size_t>(i)].masks.size()) -
                        ranks[static_cast<std::size_t>(i)] -
                        ranks[static_cast<std::size_t>(i) + 1];
                    if (h > 0)
                        B.add(i, udeg, h);
                }
            }
        }
        std::size_t i = 0;
        while (i < eff.size() && u[i] == umax[i]) {
            udeg -= u[i];
            u[i++] = 0;
        }
        if (i == eff.size())
            break;
        ++u[i];
        ++udeg;
    }
    return B;
}

HomologicalInvariants symbolic_power_invariants(const UniformParams& P, int m) {
    if (m < 1)
        throw ParameterError("symbolic_power_invariants: m must be positive");
    if (!P.saturated_regime())
        throw RegimeError("symbolic_power_invariants: requires a > (b-1)s + 1");
    HomologicalInvariants inv;
    inv.projdim_quotient = P.s - P.delta;
    inv.reg_quotient = checked_mul(m, P.mu0 + P.b * (P.s - P.c0)) - 1;
    return inv;
}

ScaledBettiReport koszul_scale_report(const BettiTable& B, int d, int a) {
    if (d < 1)
        throw ParameterError("koszul_scale_report: d must be positive");
    int gen_row = B.convention() == BettiTable::Of::ideal ? 0 : 1;
    for (const auto& [ij, v] : B.entries())
        if (ij.first == gen_row && ij.second != a)
            throw ParameterError("koszul_scale_report: table is not equigenerated in degree a");
    ScaledBettiReport rep{BettiTable(B.convention()), 0, 0, true};
    for (const auto& [ij, v] : B.entries())
        rep.table.add(ij.first, checked_mul(d, ij.second), v);
    int p = B.convention() == BettiTable::Of::ideal ? B.max_index() : B.max_index() - 1;
    rep.projdim_bound = B.convention() == BettiTable::Of::ideal ? p : p + 1;
    rep.reg_bound = d * (a + p - 1) - p;
    return rep;
}

std::string render_betti_text(const BettiTable& B) {
    if (B.empty())
        return "(empty Betti table)\n";
    int imax = B.max_index();
    int gmin = INT32_MAX, gmax = -1;
    for (const auto& [ij, v] : B.entries()) {
        gmin = std::min(gmin, ij.second - ij.first);
        gmax = std::max(gmax, ij.second - ij.first);
    }
    auto cell = [&](int i, int g) {
        BigInt v = B.beta(i, i + g);
        return v == 0 ? std::string(".") : v.str();
    };
    std::vector<std::size_t> width(static_cast<std::size_t>(imax) + 1);
    for (int i = 0; i <= imax; ++i) {
        std::size_t w = std::to_string(i).size();
        w = std::max(w, B.total(i).str().size());
        for (int g = gmin; g <= gmax; ++g)
            w = std::max(w, cell(i, g).size());
        width[static_cast<std::size_t>(i)] = w;
    }
    std::size_t label = std::max<std::size_t>(5, std::to_string(gmax).size()) + 1;
    std::ostringstream out;
    auto pad = [&](const std::string& sgn, std::size_t w) {
        return std::string(w > sgn.size() ? w - sgn.size() : 0, ' ') + sgn;
    };
    out << std::string(label + 1, ' ');
    for (int i = 0; i <= imax; ++i)
        out << ' ' << pad(std::to_string(i), width[static_cast<std::size_t>(i)]);
    out << '\n' << pad("total", label) << ':';
    for (int i = 0; i <= imax; ++i)
        out << ' ' << pad(B.total(i).str(), width[static_cast<std::size_t>(i)]);
    out << '\n';
    for (int g = gmin; g <= gmax; ++g) {
        out << pad(std::to_string(g), label) << ':';
        for (int i = 0; i <= imax; ++i)
            out << ' ' << pad(cell(i, g), width[static_cast<std::size_t>(i)]);
        out << '\n';
    }
    return out.str();
}

} // namespace starfold

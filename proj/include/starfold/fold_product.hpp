#pragma once

#include <vector>

#include "starfold/monomial.hpp"
#include "starfold/partition.hpp"

namespace starfold {

// Data of I_a(z_1^{m_1} ... z_s^{m_s}): the ideal generated by all monomials
// z^n with n <= m componentwise and |n| = a.
struct Multiplicities {
    std::vector<int> m; // each >= 1
    int a;              // 1 <= a <= sum m_i

    Multiplicities(std::vector<int> m_, int a_);
    int vars() const { return static_cast<int>(m.size()); }
    int total() const; // sum m_i
};

// Derived parameters for the uniform case m = (b, ..., b).  Writing
// a = b(s - c0) + mu0 with 1 <= mu0 <= b pins c0 and mu0; delta measures how
// far a sits above the threshold (b-1)s + 1.
struct UniformParams {
    int s = 0, a = 0, b = 0;
    int c0 = 0, mu0 = 0, delta = 0;

    bool in_range() const { return b <= a && a <= s * b; }
    bool saturated_regime() const { return delta >= 1; }
    // The ideal of the n-dimensional model has positive-dimensional locus
    // exactly when c0 <= n.
    bool positive_dim(int n) const { return c0 <= n; }

    Multiplicities mult() const;
};

UniformParams uniform_params(int s, int a, int b);

MonomialIdeal fold_generators(const Multiplicities& mult);
MonomialIdeal fold_generators(int s, int a, int b);

// Partition form of the uniform ideal: all partitions of a with parts <= b.
SymmetricIdeal fold_symmetric(const UniformParams& P);

// Membership of z^u in the r-th power of the uniform ideal:
// sum_i min(u_i, b r) >= a r.
bool uniform_member(const Exponent& u, const UniformParams& P, int r);
bool uniform_member(const Partition& lam, const UniformParams& P, int r);

// Closed form I_a(z^m)^r = I_{ar}(z^{rm}).
MonomialIdeal fold_power(const Multiplicities& mult, int r);

// Intersection of <z_i : i in S>^{mu_a(S)} over all nonempty S subset [s],
// where mu_a(S) = a - sum_{j not in S} m_j and non-positive exponents drop
// the component.  Equals fold_generators(mult).
MonomialIdeal regular_decomposition(const Multiplicities& mult);

// The same intersection restricted to |S| <= s-1; an empty component list
// gives the unit ideal.  Equals the saturation of the fold product.
MonomialIdeal saturation_decomposition(const Multiplicities& mult);

// fold_generators(a+1, m+e_i) : z_i == fold_generators(a, m), the one-step
// colon identity behind the decomposition.
bool colon_step_check(const Multiplicities& mult, int i);

// saturate(fold_generators(mult)) == saturation_decomposition(mult).
bool saturation_decomposition_check(const Multiplicities& mult);

} // namespace starfold

#pragma once

#include <vector>

#include "starfold/fold_product.hpp"
#include "starfold/numeric.hpp"
#include "starfold/partition.hpp"

namespace starfold {

// Which primes the power is intersected over: `ordinary` contracts I^m over
// every associated prime (the symbolic power proper), `star` over the minimal
// primes only.
enum class Flavor { ordinary, star };

// A requested (star-)symbolic power of the uniform fold product.  The
// ordinary flavor needs the saturated regime delta >= 1 and delta >= s - n
// for the ambient dimension n (default n = s - 1, which folds both into
// delta >= 1).
struct SymbolicSpec {
    UniformParams params;
    int m = 1;
    Flavor flavor = Flavor::ordinary;
    int ambient = -1; // -1 means s - 1

    void validate() const; // ParameterError / RegimeError naming the hypothesis
};

// Minimal partitions lambda with |lambda_{<=c}| >= m: the intersection of
// <z_i : i in S>^m over all c-subsets S.
SymmetricIdeal star_config_symbolic(int s, int c, int m);

// Ordinary flavor: minimal lambda with |lambda_{<=c}| >= m(mu0 + b(c - c0))
// for every c0 <= c <= s - delta.
SymmetricIdeal uniform_symbolic_power(const SymbolicSpec& spec);

// Star flavor: the single threshold at c0, i.e. star_config_symbolic with
// exponent m * mu0.
SymmetricIdeal star_symbolic_power(const SymbolicSpec& spec);

// Dispatch on spec.flavor.
SymmetricIdeal symbolic_ideal(const SymbolicSpec& spec);

// alpha(I^(m)) for the ordinary flavor without enumerating: with
// W = mu0 + b(s - delta - c0), the minimum degree is
// m W + ceil(m W / (s - delta)) * delta.
int alpha_symbolic_closed(const UniformParams& P, int m);

// Limit of alpha(I^(m))/m: ordinary (mu0 + b(s - delta - c0)) s / (s - delta),
// star mu0 s / c0.
Rational waldschmidt(const UniformParams& P, Flavor flavor);

// Whether the (star-)symbolic power lies in I^r: every generator lambda must
// satisfy sum_i min(lambda_i, b r) >= a r.
bool containment(const SymbolicSpec& spec, int r);

// sup m/r over non-containments: ordinary a(s - delta)/(s W), star
// a c0 / (mu0 s).  Every finite search ratio sits strictly below it.
Rational resurgence_closed(const UniformParams& P, Flavor flavor);

struct NonContainment {
    int m = 0, r = 0;
    Rational ratio() const { return Rational(m, r); }
};

struct ResurgenceSearch {
    std::vector<NonContainment> witnesses; // every non-containment found
    Rational max_ratio;                    // 0 when no witness
    Rational closed;
    bool sound = false; // every witness ratio < closed
};

ResurgenceSearch resurgence_search(const UniformParams& P, Flavor flavor, int m_max,
                                   int r_max);

// Number of positive solutions of b_1 x_1 + ... + b_h x_h = target.
BigInt diophantine_count(const std::vector<int>& B, int target);

// Generators of the (star-)symbolic power that survive in the quotient by
// I^m; their count is the number of generators of I^(m)/I^m.
std::vector<Partition> sdefect_witnesses(const SymbolicSpec& spec);
BigInt sdefect_oracle(const SymbolicSpec& spec);

// Closed forms: ordinary sums s!/type(lambda)! over the partitions with
// |lambda_{<= s-delta}| = m W and constant tail below m b; star sums
// Diophantine solution counts against binomial towers over nonempty subsets
// B of [c0], minus binom(s, c0 - 1) exactly when b divides a.
BigInt sdefect_formula(const SymbolicSpec& spec);

// Whether I^m is NOT contained in <z_1..z_s> * (star-symbolic power);
// equivalent to b | a, independent of m.
bool power_vs_star_check(const UniformParams& P, int m);

} // namespace starfold

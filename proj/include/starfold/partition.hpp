#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "starfold/monomial.hpp"
#include "starfold/numeric.hpp"

namespace starfold {

// Weakly increasing non-negative integer vector; the canonical representative
// of the orbit of a monomial under permuting the variables.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition of(const Exponent& u); // sort ascending
    static Partition constant(int s, int v);

    int size() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }

    int weight() const; // sum of all parts
    int last() const { return parts_.back(); }
    // Sum of the c smallest parts, 1 <= c <= size.
    int prefix_sum(int c) const;

    bool leq(const Partition& o) const; // componentwise

    Exponent as_exponent() const { return Exponent(parts_); }
    std::string str() const; // "(0,1,2)"

    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    std::vector<int> parts_;
};

bool canonical_less(const Partition& x, const Partition& y); // weight asc, lex desc

struct PartitionStats {
    int p = 0; // parts strictly smaller than (largest part) - 1
    int r = 0; // parts equal to the largest part
    std::vector<std::pair<int, int>> type; // (value, multiplicity), zeros included
    BigInt type_factorial;                 // product of multiplicity factorials
};

PartitionStats partition_stats(const Partition& lam);

// type(first p parts)!; p = 0 gives 1.
BigInt type_factorial_prefix(const Partition& lam, int p);

// Number of distinct rearrangements: size! / type!.
BigInt orbit_size(const Partition& lam);

// All distinct rearrangements, each once.
std::vector<Exponent> expand_orbit(const Partition& lam);

inline constexpr std::size_t kMinimalPartitionsVisitCap = 10'000'000;

// Minimal elements, under componentwise order, of {lam <= bound : pred(lam)}.
// pred must be upward closed within the box and bound must dominate every
// minimal element; both are the caller's responsibility.  Walks downward from
// the bound, memoizing visited partitions; raises ResourceError past the cap.
std::vector<Partition>
minimal_partitions(const std::function<bool(const Partition&)>& pred, const Partition& bound,
                   std::size_t visit_cap = kMinimalPartitionsVisitCap);

// A monomial ideal fixed by all permutations of the variables, stored as the
// antichain of partitions of its minimal generators.
class SymmetricIdeal {
  public:
    SymmetricIdeal() = default;

    static SymmetricIdeal from_lambdas(int s, std::vector<Partition> lambdas);
    // Raises SymmetryError when the ideal is not permutation-fixed.
    static SymmetricIdeal from_ideal(const MonomialIdeal& I);

    int vars() const { return s_; }
    const std::vector<Partition>& lambdas() const { return lambdas_; }
    bool is_zero() const { return lambdas_.empty(); }

    // mu lies in the ideal iff some lambda is componentwise below it.
    bool member(const Partition& mu) const;
    bool contains(const SymmetricIdeal& other) const;

    MonomialIdeal expand() const;
    BigInt min_gen_count() const; // sum of orbit sizes
    int alpha() const;            // least generator degree; ParameterError on zero ideal
    int max_gen_degree() const;

    friend bool operator==(const SymmetricIdeal&, const SymmetricIdeal&) = default;

  private:
    int s_ = 0;
    std::vector<Partition> lambdas_;
};

} // namespace starfold

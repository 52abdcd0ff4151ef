#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "starfold/errors.hpp"

namespace starfold {

// Exponent vector of a monomial in s variables.  Entries are non-negative and
// small; arithmetic is overflow-checked.
class Exponent {
  public:
    Exponent() = default;
    explicit Exponent(std::vector<int> entries);

    static Exponent zero(int s);
    static Exponent unit(int s, int i); // e_i, 0-based

    int size() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return e_; }
    int degree() const;

    bool divides(const Exponent& u) const; // componentwise <=
    Exponent lcm(const Exponent& u) const; // componentwise max
    Exponent plus(const Exponent& u) const;
    Exponent colon_by(const Exponent& u) const; // max(this - u, 0) componentwise

    // Display form, e.g. "z1^2*z3"; the zero vector prints as "1".
    std::string str() const;

    friend bool operator==(const Exponent&, const Exponent&) = default;

  private:
    std::vector<int> e_;
};

// Generator order used everywhere: degree ascending, then lexicographically
// descending on the exponent vector.  Ideal equality is equality of the
// canonically sorted minimal generating sets.
bool canonical_less(const Exponent& x, const Exponent& y);

// A monomial ideal, held as its unique minimal monomial generating set in
// canonical order.  The zero ideal has no generators; the unit ideal is
// generated by the zero exponent.
class MonomialIdeal {
  public:
    static MonomialIdeal zero(int s);
    static MonomialIdeal unit(int s);
    // Minimalizes and sorts; gens may contain duplicates and non-minimal elements.
    static MonomialIdeal make(int s, std::vector<Exponent> gens);

    int vars() const { return s_; }
    const std::vector<Exponent>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;

    bool member(const Exponent& u) const;          // some generator divides u
    bool contains(const MonomialIdeal& other) const; // other subset of this

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
    friend MonomialIdeal minimalize(int s, std::vector<Exponent> gens);

  private:
    MonomialIdeal(int s, std::vector<Exponent> sorted_antichain)
        : s_(s), gens_(std::move(sorted_antichain)) {}

    int s_ = 0;
    std::vector<Exponent> gens_;
};

inline constexpr std::size_t kIntersectPairCap = 1'000'000;

// Antichain of the divisibility order: drops every generator some other
// generator divides.
MonomialIdeal minimalize(int s, std::vector<Exponent> gens);

// Raises ResourceError if |I| * |J| intermediate products would exceed the cap.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J,
                        std::size_t pair_cap = kIntersectPairCap);

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J);

// power(I, 0) is the unit ideal by convention.
MonomialIdeal power(const MonomialIdeal& I, int r);

MonomialIdeal colon(const MonomialIdeal& I, const Exponent& u);

// Colon by an ideal; J must be nonzero.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

// I : m^infinity where m = <z_1, ..., z_s>, by iterating the colon by m until
// it stabilizes.  Strips the m-primary component and nothing else.
MonomialIdeal saturate(const MonomialIdeal& I);

// <z_i : i in support>^t in s variables; t <= 0 gives the unit ideal.
// Membership shortcut: u lies in it iff sum of u_i over the support >= t.
MonomialIdeal var_power_ideal(const std::vector<int>& support, int t, int s);
bool var_power_member(const std::vector<int>& support, int t, const Exponent& u);

} // namespace starfold

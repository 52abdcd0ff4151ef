#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starfold/fold_product.hpp"
#include "starfold/monomial.hpp"
#include "starfold/numeric.hpp"
#include "starfold/partition.hpp"

namespace starfold {

// Graded Betti numbers, sparse.  `quotient` tables describe T/I (so they
// carry the unit in position (0,0)); `ideal` tables describe I itself.
class BettiTable {
  public:
    enum class Of { ideal, quotient };

    explicit BettiTable(Of convention) : of_(convention) {}

    Of convention() const { return of_; }
    const std::map<std::pair<int, int>, BigInt>& entries() const { return entries_; }

    void add(int i, int j, const BigInt& v);
    BigInt beta(int i, int j) const;
    BigInt total(int i) const; // sum over j

    bool empty() const { return entries_.empty(); }
    int max_index() const;    // largest homological degree i present
    int max_shift_gap() const; // largest j - i

    BettiTable to_quotient() const; // shift i by one, prepend the unit
    BettiTable to_ideal() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

  private:
    Of of_;
    std::map<std::pair<int, int>, BigInt> entries_;
};

// projdim and regularity of the module the table resolves.
int projdim(const BettiTable& B);
int regularity(const BettiTable& B);

// An ideal is symmetric shifted when trading one copy of the largest variable
// in a generator for any variable with a smaller exponent stays inside the
// ideal.  Checking the generators suffices.
bool is_symmetric_shifted(const SymmetricIdeal& I);

// Graded Betti numbers of a symmetric shifted ideal straight from its
// partition antichain; table convention is `ideal`.  For each lambda the
// strand (i, i+|lambda|) picks up
//   sum_{k+l=i} p!/type(lambda_{<=p})! C(s,p) C(s-p,r+k) C(r+k-1,k) C(p,l)
// where p and r are the partition statistics.  Raises SymmetryError when the
// input is not symmetric shifted.
BettiTable betti_closed(const SymmetricIdeal& I);

// Witness that successive colon ideals are variable-generated when the
// generators are taken in canonical order.  r[k] counts the variables at
// step k; on the first failure `verified` is false and r stops there.
struct QuotientOrder {
    std::vector<Exponent> order;
    std::vector<int> r;
    bool verified = false;
};

QuotientOrder linear_quotients(const MonomialIdeal& I);

// Try every generator order; only for s * gens <= 12.  Deterministic: first
// verified order in lexicographic permutation order.
std::optional<QuotientOrder> linear_quotients_search(const MonomialIdeal& I);

// beta_{i, deg(g_k)+i-1}(T/I) = sum_k binom(r_k, i-1); needs a verified order.
BettiTable betti_from_quotients(const QuotientOrder& q);

struct KoszulCaps {
    std::size_t max_matrix_entries = 40'000;
    std::size_t max_strands = 20'000'000;
};

// Independent route: Betti numbers of T/I as ranks of Koszul homology, strand
// by multidegree strand, with exact integer elimination.  No assumptions on
// the ideal beyond being monomial.
BettiTable betti_koszul(const MonomialIdeal& I, int max_i = 1 << 20,
                        const KoszulCaps& caps = {});

struct HomologicalInvariants {
    int projdim_quotient; // of T/I
    int reg_quotient;     // of T/I
};

// Closed forms for the m-th symbolic power of the uniform fold product:
// projdim(T/I^{(m)}) = s - delta, reg(T/I^{(m)}) = m(mu0 + b(s - c0)) - 1.
// Requires the saturated regime.
HomologicalInvariants symbolic_power_invariants(const UniformParams& P, int m);

// Transport along the degree-d Veronese-type substitution: strand degrees
// scale by d, homological degrees stay.  The scaled values bound the Betti
// numbers of the substituted ideal from above; reg_bound = d(a+p-1) - p with
// p the projective dimension of the (equigenerated, degree a) input ideal.
struct ScaledBettiReport {
    BettiTable table; // same convention as the input
    int projdim_bound;
    int reg_bound;
    bool upper_bounds_only = true;
};

ScaledBettiReport koszul_scale_report(const BettiTable& B, int d, int a);

// Fixed-width layout with a header row of homological degrees, a total row,
// and one row per shift gap j - i; zeros print as dots.
std::string render_betti_text(const BettiTable& B);

} // namespace starfold

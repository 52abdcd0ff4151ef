#include "starfold/partition.hpp"

#include <algorithm>
#include <unordered_set>

namespace starfold {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw ParameterError("Partition: empty");
    int prev = 0;
    for (int x : parts_) {
        if (x < prev)
            throw ParameterError("Partition: parts must be weakly increasing");
        prev = x;
    }
    if (parts_.front() < 0)
        throw ParameterError("Partition: negative part");
}

Partition Partition::of(const Exponent& u) {
    std::vector<int> v = u.entries();
    std::sort(v.begin(), v.end());
    return Partition(std::move(v));
}

Partition Partition::constant(int s, int v) {
    if (s <= 0)
        throw ParameterError("Partition::constant: s must be positive");
    return Partition(std::vector<int>(static_cast<std::size_t>(s), v));
}

int Partition::weight() const {
    int w = 0;
    for (int x : parts_)
        w = checked_add(w, x);
    return w;
}

int Partition::prefix_sum(int c) const {
    if (c < 1 || c > size())
        throw ParameterError("Partition::prefix_sum: index out of range");
    int w = 0;
    for (int i = 0; i < c; ++i)
        w = checked_add(w, parts_[static_cast<std::size_t>(i)]);
    return w;
}

bool Partition::leq(const Partition& o) const {
    if (o.size() != size())
        throw DimensionError("Partition::leq: size mismatch");
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (parts_[i] > o.parts_[i])
            return false;
    return true;
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

bool canonical_less(const Partition& x, const Partition& y) {
    int wx = x.weight(), wy = y.weight();
    if (wx != wy)
        return wx < wy;
    return x.parts() > y.parts();
}

PartitionStats partition_stats(const Partition& lam) {
    PartitionStats st;
    int top = lam.last();
    for (int i = 0; i < lam.size(); ++i) {
        if (lam[i] < top - 1)
            ++st.p;
        if (lam[i] == top)
            ++st.r;
    }
    st.type_factorial = 1;
    int i = 0;
    while (i < lam.size()) {
        int j = i;
        while (j < lam.size() && lam[j] == lam[i])
            ++j;
        st.type.emplace_back(lam[i], j - i);
        st.type_factorial *= factorial(j - i);
        i = j;
    }
    return st;
}

BigInt type_factorial_prefix(const Partition& lam, int p) {
    if (p < 0 || p > lam.size())
        throw ParameterError("type_factorial_prefix: p out of range");
    BigInt f = 1;
    int i = 0;
    while (i < p) {
        int j = i;
        while (j < p && lam[j] == lam[i])
            ++j;
        f *= factorial(j - i);
        i = j;
    }
    return f;
}

BigInt orbit_size(const Partition& lam) {
    return factorial(lam.size()) / partition_stats(lam).type_factorial;
}

std::vector<Exponent> expand_orbit(const Partition& lam) {
    std::vector<int> v = lam.parts(); // sorted ascending: next_permutation covers the orbit
    std::vector<Exponent> out;
    do {
        out.push_back(Exponent(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct MinimalSearch {
    const std::function<bool(const Partition&)>& pred;
    std::size_t cap;
    std::unordered_set<std::vector<int>, VecHash> visited;
    std::vector<std::vector<int>> found;

    void walk(std::vector<int>& lam) {
        if (visited.count(lam))
            return;
        if (visited.size() >= cap)
            throw ResourceError("minimal_partitions: visit cap exceeded");
        visited.insert(lam);
        bool any_child = false;
        for (std::size_t j = 0; j < lam.size(); ++j) {
            // Decrementing position j keeps weak monotonicity iff the left
            // neighbour is already strictly smaller.
            if (lam[j] == 0 || (j > 0 && lam[j - 1] == lam[j]))
                continue;
            --lam[j];
            if (pred(Partition(lam))) {
                any_child = true;
                walk(lam);
            }
            ++lam[j];
        }
        if (!any_child)
            found.push_back(lam);
    }
};

} // namespace

std::vector<Partition> minimal_partitions(const std::function<bool(const Partition&)>& pred,
                                          const Partition& bound, std::size_t visit_cap) {
    if (!pred(bound))
        return {};
    MinimalSearch search{pred, visit_cap, {}, {}};
    std::vector<int> start = bound.parts();
    search.walk(start);
    std::sort(search.found.begin(), search.found.end());
    search.found.erase(std::unique(search.found.begin(), search.found.end()),
                       search.found.end());
    std::vector<Partition> out;
    out.reserve(search.found.size());
    for (auto& v : search.found)
        out.emplace_back(std::move(v));
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return canonical_less(a, b); });
    return out;
}

SymmetricIdeal SymmetricIdeal::from_lambdas(int s, std::vector<Partition> lambdas) {
    for (const Partition& lam : lambdas)
        if (lam.size() != s)
            throw DimensionError("SymmetricIdeal: partition size mismatch");
    std::sort(lambdas.begin(), lambdas.end(),
              [](const Partition& a, const Partition& b) { return canonical_less(a, b); });
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
    std::vector<Partition> kept;
    for (const Partition& lam : lambdas) {
        bool dominated = false;
        for (const Partition& mu : kept)
            if (mu.weight() < lam.weight() && mu.leq(lam)) {
                dominated = true;
                break;
            }
        if (!dominated)
            kept.push_back(lam);
    }
    SymmetricIdeal ideal;
    ideal.s_ = s;
    ideal.lambdas_ = std::move(kept);
    return ideal;
}

SymmetricIdeal SymmetricIdeal::from_ideal(const MonomialIdeal& I) {
    std::vector<Partition> lambdas;
    for (const Exponent& g : I.gens())
        lambdas.push_back(Partition::of(g));
    std::sort(lambdas.begin(), lambdas.end(),
              [](const Partition& a, const Partition& b) { return canonical_less(a, b); });
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
    BigInt expected = 0;
    for (const Partition& lam : lambdas)
        expected += orbit_size(lam);
    if (expected != I.gens().size())
        throw SymmetryError("from_ideal: ideal is not fixed under permuting the variables");
    SymmetricIdeal ideal;
    ideal.s_ = I.vars();
    ideal.lambdas_ = std::move(lambdas);
    return ideal;
}

bool SymmetricIdeal::member(const Partition& mu) const {
    for (const Partition& lam : lambdas_) {
        if (lam.weight() > mu.weight())
            break; // sorted by weight
        if (lam.leq(mu))
            return true;
    }
    return false;
}

bool SymmetricIdeal::contains(const SymmetricIdeal& other) const {
    if (other.s_ != s_)
        throw DimensionError("SymmetricIdeal::contains: variable count mismatch");
    for (const Partition& lam : other.lambdas_)
        if (!member(lam))
            return false;
    return true;
}

MonomialIdeal SymmetricIdeal::expand() const {
    std::vector<Exponent> gens;
    for (const Partition& lam : lambdas_) {
        auto orbit = expand_orbit(lam);
        gens.insert(gens.end(), orbit.begin(), orbit.end());
    }
    return MonomialIdeal::make(s_, std::move(gens));
}

BigInt SymmetricIdeal::min_gen_count() const {
    BigInt n = 0;
    for (const Partition& lam : lambdas_)
        n += orbit_size(lam);
    return n;
}

int SymmetricIdeal::alpha() const {
    if (lambdas_.empty())
        throw ParameterError("SymmetricIdeal::alpha: zero ideal");
    return lambdas_.front().weight(); // canonical order puts least weight first
}

int SymmetricIdeal::max_gen_degree() const {
    if (lambdas_.empty())
        throw ParameterError("SymmetricIdeal::max_gen_degree: zero ideal");
    return lambdas_.back().weight();
}

} // namespace starfold

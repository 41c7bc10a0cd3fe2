#pragma once

#include "mipl/rational.hpp"

#include <array>
#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace mipl {

inline constexpr int kMaxDim = 4;

// Spatial multi-exponent n in N^d; entries past the configured dim stay zero.
using Vec = std::array<int, kMaxDim>;

int norm1(const Vec& n);
bool is_zero(const Vec& n);
Vec unit_vec(int i); // e_i, i is 1-based
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
bool leq(const Vec& a, const Vec& b);
mpz_class vec_factorial(const Vec& n);
mpz_class vec_binomial(const Vec& n, const Vec& k);

// All n in N^d with |n| = s, lexicographic.
std::vector<Vec> vectors_of_norm(int dim, int s);
// All n in N^d componentwise <= bound.
std::vector<Vec> vectors_below(int dim, const Vec& bound);

// Pure k (k >= 0, n = 0) or spatial n (k = -1, n != 0). Order: pure before
// spatial, pure by k, spatial lexicographically.
struct IndexSymbol {
    int k = 0;
    Vec n{};

    static IndexSymbol pure(int k) { return {k, Vec{}}; }
    static IndexSymbol spatial(const Vec& n) { return {-1, n}; }
    bool is_pure() const { return k >= 0; }

    std::strong_ordering operator<=>(const IndexSymbol& o) const
    {
        if (is_pure() != o.is_pure()) return is_pure() ? std::strong_ordering::less : std::strong_ordering::greater;
        if (auto c = k <=> o.k; c != 0) return c;
        return n <=> o.n;
    }
    bool operator==(const IndexSymbol&) const = default;
};

class MultiIndex {
public:
    using Entry = std::pair<IndexSymbol, int>;

    MultiIndex() = default;
    MultiIndex(std::initializer_list<Entry> entries);

    static MultiIndex unit(const IndexSymbol& s) { return MultiIndex{{s, 1}}; }

    const std::vector<Entry>& entries() const { return e_; }
    bool empty() const { return e_.empty(); }
    int count(const IndexSymbol& s) const;

    // Adds c copies of s; throws std::invalid_argument if a count turns negative.
    void add(const IndexSymbol& s, int c);

    int pure_count() const;
    int spatial_count() const;
    int total_count() const;
    int max_pure() const; // -1 if no pure entries
    int spatial_weight() const; // sum |n| g_n

    auto operator<=>(const MultiIndex&) const = default;
    bool operator==(const MultiIndex&) const = default;

private:
    std::vector<Entry> e_; // sorted by symbol, counts > 0
};

MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b);
// Pointwise difference; throws std::invalid_argument on a negative count.
MultiIndex mi_sub(const MultiIndex& a, const MultiIndex& b);
bool mi_leq(const MultiIndex& a, const MultiIndex& b);

Rational homogeneity(const MultiIndex& g, const Rational& alpha);

struct BarNorm {
    int value;
    bool in_M_minus;
};
BarNorm bar_norm(const MultiIndex& g);

mpz_class sigma(const MultiIndex& g);

// All g with homogeneity(g) <= cutoff and bar_norm(g) = level, optionally
// capping pure indices. Uses |g| = alpha (sum k g_k - ||g||) + sum (|n| - alpha) g_n.
std::vector<MultiIndex> enumerate_level(int dim, const Rational& alpha, const Rational& cutoff, int level,
                                        std::optional<int> max_pure_index = std::nullopt);

// All b <= g componentwise, including the empty index and g itself.
std::vector<MultiIndex> sub_indices(const MultiIndex& g);

} // namespace mipl

#include "mipl/index.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mipl {

int norm1(const Vec& n)
{
    int s = 0;
    for (int x : n) s += x;
    return s;
}

bool is_zero(const Vec& n)
{
    return std::all_of(n.begin(), n.end(), [](int x) { return x == 0; });
}

Vec unit_vec(int i)
{
    Vec v{};
    v.at(static_cast<std::size_t>(i - 1)) = 1;
    return v;
}

Vec operator+(const Vec& a, const Vec& b)
{
    Vec r{};
    for (int i = 0; i < kMaxDim; ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b)
{
    Vec r{};
    for (int i = 0; i < kMaxDim; ++i) r[i] = a[i] - b[i];
    return r;
}

bool leq(const Vec& a, const Vec& b)
{
    for (int i = 0; i < kMaxDim; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

mpz_class vec_factorial(const Vec& n)
{
    mpz_class r = 1;
    for (int x : n) r *= factorial(x);
    return r;
}

mpz_class vec_binomial(const Vec& n, const Vec& k)
{
    mpz_class r = 1;
    for (int i = 0; i < kMaxDim; ++i) r *= binomial(n[i], k[i]);
    return r;
}

std::vector<Vec> vectors_of_norm(int dim, int s)
{
    std::vector<Vec> out;
    Vec cur{};
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == dim - 1) {
            cur[i] = left;
            out.push_back(cur);
            cur[i] = 0;
            return;
        }
        for (int x = left; x >= 0; --x) {
            cur[i] = x;
            rec(i + 1, left - x);
        }
        cur[i] = 0;
    };
    if (s >= 0) rec(0, s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vec> vectors_below(int dim, const Vec& bound)
{
    std::vector<Vec> out;
    Vec cur{};
    std::function<void(int)> rec = [&](int i) {
        if (i == dim) {
            out.push_back(cur);
            return;
        }
        for (int x = 0; x <= bound[i]; ++x) {
            cur[i] = x;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    return out;
}

MultiIndex::MultiIndex(std::initializer_list<Entry> entries)
{
    for (const auto& [s, c] : entries) add(s, c);
}

int MultiIndex::count(const IndexSymbol& s) const
{
    auto it = std::lower_bound(e_.begin(), e_.end(), s, [](const Entry& e, const IndexSymbol& x) { return e.first < x; });
    return (it != e_.end() && it->first == s) ? it->second : 0;
}

void MultiIndex::add(const IndexSymbol& s, int c)
{
    if (c == 0) return;
    if (!s.is_pure() && is_zero(s.n)) throw std::invalid_argument("spatial index symbol with zero vector");
    auto it = std::lower_bound(e_.begin(), e_.end(), s, [](const Entry& e, const IndexSymbol& x) { return e.first < x; });
    if (it != e_.end() && it->first == s) {
        it->second += c;
        if (it->second < 0) throw std::invalid_argument("negative multi-index count");
        if (it->second == 0) e_.erase(it);
    } else {
        if (c < 0) throw std::invalid_argument("negative multi-index count");
        e_.insert(it, {s, c});
    }
}

int MultiIndex::pure_count() const
{
    int r = 0;
    for (const auto& [s, c] : e_)
        if (s.is_pure()) r += c;
    return r;
}

int MultiIndex::spatial_count() const
{
    return total_count() - pure_count();
}

int MultiIndex::total_count() const
{
    int r = 0;
    for (const auto& e : e_) r += e.second;
    return r;
}

int MultiIndex::spatial_weight() const
{
    int r = 0;
    for (const auto& [s, c] : e_)
        if (!s.is_pure()) r += norm1(s.n) * c;
    return r;
}

int MultiIndex::max_pure() const
{
    int r = -1;
    for (const auto& [s, c] : e_)
        if (s.is_pure()) r = std::max(r, s.k);
    return r;
}

MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b)
{
    MultiIndex r = a;
    for (const auto& [s, c] : b.entries()) r.add(s, c);
    return r;
}

MultiIndex mi_sub(const MultiIndex& a, const MultiIndex& b)
{
    MultiIndex r = a;
    for (const auto& [s, c] : b.entries()) r.add(s, -c);
    return r;
}

bool mi_leq(const MultiIndex& a, const MultiIndex& b)
{
    for (const auto& [s, c] : a.entries())
        if (b.count(s) < c) return false;
    return true;
}

Rational homogeneity(const MultiIndex& g, const Rational& alpha)
{
    Rational h = alpha * g.pure_count();
    h += g.spatial_weight();
    return h;
}

BarNorm bar_norm(const MultiIndex& g)
{
    int v = 0;
    for (const auto& [s, c] : g.entries()) v += s.is_pure() ? (s.k - 1) * c : -c;
    bool single_spatial = g.entries().size() == 1 && !g.entries()[0].first.is_pure() && g.entries()[0].second == 1;
    return {v, v == -1 && !single_spatial};
}

mpz_class sigma(const MultiIndex& g)
{
    mpz_class r = 1;
    for (const auto& [s, c] : g.entries())
        if (s.is_pure())
            for (int i = 0; i < c; ++i) r *= factorial(s.k);
    return r;
}

std::vector<MultiIndex> enumerate_level(int dim, const Rational& alpha, const Rational& cutoff, int level,
                                        std::optional<int> max_pure_index)
{
    std::vector<MultiIndex> out;
    if (cutoff < 0) return out;
    mpz_class fl = cutoff.get_num() / cutoff.get_den();
    int max_norm = static_cast<int>(fl.get_si());

    std::vector<Vec> symbols;
    for (int s = 1; s <= max_norm; ++s)
        for (const Vec& v : vectors_of_norm(dim, s)) symbols.push_back(v);

    MultiIndex spatial;
    // Pure part: multiset of P indices summing to K, appended in nonincreasing order.
    std::function<void(MultiIndex&, int, int, int)> pure_rec = [&](MultiIndex& g, int parts, int sum, int cap) {
        if (parts == 0) {
            if (sum == 0) out.push_back(g);
            return;
        }
        int hi = std::min(sum, cap);
        for (int k = hi; k >= 0; --k) {
            if (static_cast<long>(k) * parts < sum) break;
            g.add(IndexSymbol::pure(k), 1);
            pure_rec(g, parts - 1, sum - k, k);
            g.add(IndexSymbol::pure(k), -1);
        }
    };
    auto close = [&](int weight, int count) {
        for (int p = 0; alpha * p + weight <= cutoff; ++p) {
            int K = level + p + count;
            if (K < 0) continue;
            if (p == 0 && K != 0) continue;
            int cap = max_pure_index ? *max_pure_index : K;
            MultiIndex g = spatial;
            pure_rec(g, p, K, cap);
        }
    };
    std::function<void(std::size_t, int, int)> spatial_rec = [&](std::size_t from, int weight, int count) {
        close(weight, count);
        for (std::size_t i = from; i < symbols.size(); ++i) {
            int w = norm1(symbols[i]);
            if (weight + w > cutoff) continue;
            spatial.add(IndexSymbol::spatial(symbols[i]), 1);
            spatial_rec(i, weight + w, count + 1);
            spatial.add(IndexSymbol::spatial(symbols[i]), -1);
        }
    };
    spatial_rec(0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiIndex> sub_indices(const MultiIndex& g)
{
    std::vector<MultiIndex> out{MultiIndex{}};
    for (const auto& [s, c] : g.entries()) {
        std::vector<MultiIndex> next;
        for (const auto& b : out)
            for (int j = 0; j <= c; ++j) {
                MultiIndex x = b;
                x.add(s, j);
                next.push_back(std::move(x));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mipl

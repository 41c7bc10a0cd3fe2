#include "mipl/derivations.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>

namespace mipl {

void add_letter(LetterCounts& J, const DLetter& x, int c)
{
    auto it = std::lower_bound(J.begin(), J.end(), x, [](const auto& e, const DLetter& y) { return e.first < y; });
    if (it != J.end() && it->first == x) {
        it->second += c;
        if (it->second == 0) J.erase(it);
    } else if (c != 0) {
        J.insert(it, {x, c});
    }
}

int letter_count(const LetterCounts& J, const DLetter& x)
{
    auto it = std::lower_bound(J.begin(), J.end(), x, [](const auto& e, const DLetter& y) { return e.first < y; });
    return (it != J.end() && it->first == x) ? it->second : 0;
}

int total_letters(const LetterCounts& J)
{
    int r = 0;
    for (const auto& e : J) r += e.second;
    return r;
}

mpz_class counts_factorial(const LetterCounts& J)
{
    mpz_class r = 1;
    for (const auto& e : J) r *= factorial(e.second);
    return r;
}

namespace {

Polynomial tilt_monomial(const Vec& n, const MultiIndex& g)
{
    Polynomial r;
    if (is_zero(n)) {
        for (const auto& [s, c] : g.entries()) {
            if (!s.is_pure()) continue;
            MultiIndex h = g;
            h.add(s, -1);
            h.add(IndexSymbol::pure(s.k + 1), 1);
            r.add(h, Rational((s.k + 1) * c));
        }
    } else {
        auto s = IndexSymbol::spatial(n);
        int c = g.count(s);
        if (c > 0) {
            MultiIndex h = g;
            h.add(s, -1);
            r.add(h, Rational(c));
        }
    }
    return r;
}

Polynomial shift_monomial(int i, const MultiIndex& g)
{
    Polynomial r;
    Vec ei = unit_vec(i);
    for (const auto& [s, c] : g.entries()) {
        MultiIndex h = g;
        h.add(s, -1);
        if (s.is_pure()) {
            h.add(IndexSymbol::pure(s.k + 1), 1);
            h.add(IndexSymbol::spatial(ei), 1);
            r.add(h, Rational((s.k + 1) * c));
        } else {
            h.add(IndexSymbol::spatial(s.n + ei), 1);
            r.add(h, Rational((s.n[i - 1] + 1) * c));
        }
    }
    return r;
}

using WordKey = std::tuple<Vec, LetterCounts, MultiIndex>;

struct WordCache {
    std::mutex mu;
    std::map<WordKey, Polynomial> values;
};

WordCache& word_cache()
{
    static WordCache cache;
    return cache;
}

Polynomial rho_word_monomial(const Vec& m, const LetterCounts& J, const MultiIndex& g)
{
    WordKey key{m, J, g};
    auto& cache = word_cache();
    {
        std::lock_guard lock(cache.mu);
        auto it = cache.values.find(key);
        if (it != cache.values.end()) return it->second;
    }
    Polynomial p = monomial(g);
    MultiIndex prefix;
    for (const auto& [x, c] : J) {
        for (int j = 0; j < c; ++j) p = apply_tilt(x.n, p);
        for (int j = 0; j < c; ++j) prefix = mi_add(prefix, x.gamma);
    }
    for (int i = 0; i < kMaxDim; ++i)
        for (int j = 0; j < m[i]; ++j) p = apply_shift(i + 1, p);
    p = shift_by(p, prefix);
    p *= Rational(1, 1) / Rational(vec_factorial(m) * counts_factorial(J));
    std::lock_guard lock(cache.mu);
    cache.values.emplace(std::move(key), p);
    return p;
}

} // namespace

Polynomial apply_tilt(const Vec& n, const Polynomial& p)
{
    Polynomial r;
    for (const auto& [g, c] : p) r.add_scaled(tilt_monomial(n, g), c);
    return r;
}

Polynomial apply_shift(int i, const Polynomial& p)
{
    Polynomial r;
    for (const auto& [g, c] : p) r.add_scaled(shift_monomial(i, g), c);
    return r;
}

Polynomial rho_word_apply(const Vec& m, const LetterCounts& J, const Polynomial& p, bool normalized)
{
    Polynomial r;
    for (const auto& [g, c] : p) r.add_scaled(rho_word_monomial(m, J, g), c);
    if (!normalized) r *= Rational(vec_factorial(m) * counts_factorial(J));
    return r;
}

std::vector<std::vector<Vec>> vector_compositions(int dim, const Vec& m, int parts)
{
    std::vector<std::vector<Vec>> out;
    std::vector<Vec> cur;
    std::function<void(const Vec&, int)> rec = [&](const Vec& left, int k) {
        if (k == 1) {
            if (is_zero(left)) return;
            cur.push_back(left);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (const Vec& a : vectors_below(dim, left)) {
            if (is_zero(a)) continue;
            cur.push_back(a);
            rec(left - a, k - 1);
            cur.pop_back();
        }
    };
    if (parts >= 1) rec(m, parts);
    return out;
}

Polynomial closed_form_pure(int dim, int k, const Vec& m, int ell)
{
    int top = k + ell;
    Rational lead(factorial(top) / factorial(k));
    Polynomial r;
    if (is_zero(m)) {
        r.add(MultiIndex::unit(IndexSymbol::pure(top)), lead);
        return r;
    }
    for (int j = 1; j <= norm1(m); ++j) {
        Rational cj = lead * Rational(binomial(top + j, top));
        for (const auto& comp : vector_compositions(dim, m, j)) {
            MultiIndex g = MultiIndex::unit(IndexSymbol::pure(top + j));
            for (const Vec& part : comp) g.add(IndexSymbol::spatial(part), 1);
            r.add(g, cj);
        }
    }
    return r;
}

Polynomial closed_form_spatial(const Vec& n, const Vec& m)
{
    return monomial(MultiIndex::unit(IndexSymbol::spatial(n + m)), Rational(vec_binomial(n + m, n)));
}

} // namespace mipl

#pragma once

// Shared random data and independent oracles for the unit and acceptance tests.

#include "mipl/group.hpp"
#include "mipl/sampling.hpp"

#include <random>
#include <vector>

namespace mipl::testing {

inline Setting make_setting(int dim, Space space = Space::L, Rational alpha = Rational(2, 5))
{
    Setting s;
    s.dim = dim;
    s.alpha = alpha;
    s.space = space;
    return s;
}

// Every z^g with |g| <= cutoff and pure indices <= max_pure, over all levels.
inline std::vector<MultiIndex> monomials_up_to(int dim, const Rational& alpha, const Rational& cutoff,
                                               int max_pure = 4)
{
    std::vector<MultiIndex> out;
    Rational ratio = cutoff / alpha;
    mpz_class fl = ratio.get_num() / ratio.get_den();
    int count = static_cast<int>(fl.get_si());
    int spatial = static_cast<int>(cutoff.get_num().get_si() / cutoff.get_den().get_si());
    for (int level = -spatial; level <= count * max_pure; ++level)
        for (auto& g : enumerate_level(dim, alpha, cutoff, level, max_pure)) out.push_back(std::move(g));
    return out;
}

inline Rational small_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v)
{
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

inline Polynomial random_poly(std::mt19937_64& rng, const std::vector<MultiIndex>& monos, int terms)
{
    Polynomial p;
    for (int i = 0; i < terms; ++i) p.add(pick(rng, monos), small_rational(rng));
    return p;
}

inline Character random_character(const Setting& s, const std::vector<LGenerator>& pool, std::mt19937_64& rng)
{
    Character f(s);
    for (const auto& g : pool) f.set(g, small_rational(rng));
    return f;
}

// Rewrites a raw word into PBW order by repeatedly swapping a randomly chosen
// out-of-order adjacent pair, using only the defining relations
// [D{g|n}, P(i)] = n_i D{g|n-e_i} and commutation inside each family.
inline UElement rewrite_to_pbw(const Word& w, std::mt19937_64& rng)
{
    Linear<Word> todo(w);
    UElement done;
    while (!todo.is_zero()) {
        auto it = std::next(todo.begin(),
                            std::uniform_int_distribution<long>(0, static_cast<long>(todo.size()) - 1)(rng));
        Word cur = it->first;
        Rational c = it->second;
        todo.add(cur, -c);
        std::vector<std::size_t> inversions;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i)
            if (cur[i + 1] < cur[i]) inversions.push_back(i);
        if (inversions.empty()) {
            BasisWord b;
            for (const auto& g : cur) {
                if (g.is_shift())
                    b.m[g.index() - 1] += 1;
                else
                    add_letter(b.J, g.letter());
            }
            done.add(b, c * Rational(b.norm_factor()));
            continue;
        }
        std::size_t i = pick(rng, inversions);
        Word swapped = cur;
        std::swap(swapped[i], swapped[i + 1]);
        todo.add(swapped, c);
        // Only D.P is out of order with a nonzero commutator.
        if (!cur[i].is_shift() && cur[i + 1].is_shift()) {
            DLetter x = cur[i].letter();
            int k = cur[i + 1].index() - 1;
            if (x.n[k] > 0) {
                Rational f = x.n[k];
                x.n[k] -= 1;
                Word lowered(cur.begin(), cur.begin() + static_cast<long>(i));
                lowered.push_back(LGenerator::tilt(x));
                lowered.insert(lowered.end(), cur.begin() + static_cast<long>(i) + 2, cur.end());
                todo.add(lowered, c * f);
            }
        }
    }
    return done;
}

} // namespace mipl::testing

#include "mipl/sampling.hpp"

#include <algorithm>
#include <functional>

namespace mipl {

std::vector<LGenerator> generator_pool(const Setting& s, const Rational& max_hom, int max_pure)
{
    std::vector<LGenerator> pool;
    for (int i = 1; i <= s.dim; ++i) pool.push_back(LGenerator::shift(i));
    std::vector<MultiIndex> gammas;
    if (s.space == Space::L) {
        for (auto& g : enumerate_level(s.dim, s.alpha, max_hom, -1, max_pure))
            if (bar_norm(g).in_M_minus) gammas.push_back(std::move(g));
    } else {
        // ||g|| >= -(number of spatial factors) and <= sum of pure indices.
        Rational ratio = max_hom / s.alpha;
        mpz_class fl = ratio.get_num() / ratio.get_den();
        int cnt = static_cast<int>(fl.get_si()) + static_cast<int>(max_hom.get_num().get_si());
        for (int level = -cnt; level <= cnt * max_pure; ++level)
            for (auto& g : enumerate_level(s.dim, s.alpha, max_hom, level, max_pure)) gammas.push_back(std::move(g));
    }
    for (const auto& g : gammas)
        for (int k = 0; k <= max_hom; ++k)
            for (const Vec& n : vectors_of_norm(s.dim, k)) {
                DLetter x{g, n};
                if (in_space(x, s)) pool.push_back(LGenerator::tilt(x));
            }
    std::sort(pool.begin(), pool.end());
    return pool;
}

Word random_word(std::mt19937_64& rng, const std::vector<LGenerator>& pool, const Rational& alpha, int max_letters,
                 const Rational& max_grade)
{
    std::uniform_int_distribution<int> len(1, max_letters);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (;;) {
        int n = len(rng);
        Word w;
        Rational g = 0;
        for (int i = 0; i < n; ++i) {
            w.push_back(pool[pick(rng)]);
            g += w.back().grade(alpha);
        }
        if (g <= max_grade) return w;
    }
}

BasisWord random_basis_word(std::mt19937_64& rng, const std::vector<LGenerator>& pool, const Rational& alpha,
                            int max_letters, const Rational& max_grade)
{
    BasisWord b;
    for (const auto& g : random_word(rng, pool, alpha, max_letters, max_grade)) {
        if (g.is_shift())
            b.m[g.index() - 1] += 1;
        else
            add_letter(b.J, g.letter(), 1);
    }
    return b;
}

std::vector<BasisWord> basis_words_up_to(const std::vector<LGenerator>& pool, const Rational& alpha,
                                         const Rational& max_grade)
{
    std::vector<BasisWord> out;
    BasisWord cur;
    std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t from, const Rational& g) {
        out.push_back(cur);
        for (std::size_t i = from; i < pool.size(); ++i) {
            Rational gi = pool[i].grade(alpha);
            if (g + gi > max_grade) continue;
            const auto& x = pool[i];
            if (x.is_shift())
                cur.m[x.index() - 1] += 1;
            else
                add_letter(cur.J, x.letter(), 1);
            rec(i, g + gi);
            if (x.is_shift())
                cur.m[x.index() - 1] -= 1;
            else
                add_letter(cur.J, x.letter(), -1);
        }
    };
    rec(0, Rational(0));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AxiomCount> check_postlie_axioms(const Setting& s, int trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto pool = generator_pool(s);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<AxiomCount> counts{{"product-over-bracket"}, {"bracket-associator"}, {"jacobi-bracket"},
                                   {"jacobi-composition"}, {"closure"}};
    auto tally = [&](std::size_t i, bool ok) {
        counts[i].total += 1;
        counts[i].passed += ok ? 1 : 0;
    };
    auto valid = [&](const LElement& x) {
        for (const auto& [g, c] : x)
            if (!in_space(g, s)) return false;
        return true;
    };
    auto br = [](const LElement& x, const LElement& y) { return pl_bracket(x, y); };
    auto tr = [](const LElement& x, const LElement& y) { return pl_product(x, y); };
    auto cb = [](const LElement& x, const LElement& y) { return comp_bracket(x, y); };
    for (int t = 0; t < trials; ++t) {
        LElement a(pool[pick(rng)]), b(pool[pick(rng)]), c(pool[pick(rng)]);
        // a ▷ [b,c] = [a ▷ b, c] + [b, a ▷ c]
        tally(0, tr(a, br(b, c)) == br(tr(a, b), c) + br(b, tr(a, c)));
        // [a,b] ▷ c = a ▷ (b ▷ c) - (a ▷ b) ▷ c - b ▷ (a ▷ c) + (b ▷ a) ▷ c
        tally(1, tr(br(a, b), c) == tr(a, tr(b, c)) - tr(tr(a, b), c) - tr(b, tr(a, c)) + tr(tr(b, a), c));
        tally(2, (br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))).is_zero());
        tally(3, (cb(a, cb(b, c)) + cb(b, cb(c, a)) + cb(c, cb(a, b))).is_zero());
        tally(4, valid(tr(a, b)) && valid(br(a, b)) && valid(cb(a, b)));
    }
    return counts;
}

} // namespace mipl

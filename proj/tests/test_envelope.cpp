#include "mipl/envelope.hpp"
#include "mipl/sampling.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace mipl;
using namespace mipl::testing;

namespace {

const Vec n0{};
const Vec e1{1, 0, 0, 0};
const Vec e2{2, 0, 0, 0};

MultiIndex z0()
{
    return MultiIndex{{IndexSymbol::pure(0), 1}};
}

MultiIndex z0z1()
{
    return MultiIndex{{IndexSymbol::pure(0), 1}, {IndexSymbol::pure(1), 1}};
}

LGenerator tilt(const MultiIndex& g, const Vec& n)
{
    return LGenerator::tilt({g, n});
}

BasisWord E(const Vec& m)
{
    BasisWord b;
    b.m = m;
    return b;
}

BasisWord word(const Vec& m, std::initializer_list<std::pair<LGenerator, int>> letters)
{
    BasisWord b = E(m);
    for (const auto& [g, c] : letters) add_letter(b.J, g.letter(), c);
    return b;
}

UElement U(const BasisWord& b, const Rational& c = 1)
{
    return UElement(b, c);
}

Rational total_grade(const UElement& u, const Rational& alpha)
{
    Rational g = -1;
    for (const auto& [w, c] : u) {
        Rational h = grade_u(w, alpha);
        if (g >= 0 && h != g) return -2;
        g = h;
    }
    return g;
}

} // namespace

TEST(NormalForm, Examples)
{
    auto a = tilt(z0(), e1);
    UElement expected = U(word(e1, {{a, 1}})) + U(word(n0, {{tilt(z0(), n0), 1}}));
    EXPECT_EQ(normal_form({a, LGenerator::shift(1)}), expected);
    EXPECT_EQ(normal_form({LGenerator::shift(1), LGenerator::shift(1)}), U(E(e2), 2));
    EXPECT_EQ(normal_form({}), u_one());
}

// D_2 P P = P P D_2 + 4 P D_1 + 2 D_0 for D_n = z_0 (x) D^(n), d = 1. The mixed
// middle term is what the two-term displayed identity leaves out.
TEST(NormalForm, SecondOrderReorderingHasMixedTerm)
{
    auto D = [](int n) { return tilt(z0(), Vec{n, 0, 0, 0}); };
    auto P = LGenerator::shift(1);
    UElement nf = normal_form({D(2), P, P});
    UElement expected = U(word(e2, {{D(2), 1}}), 2) + U(word(e1, {{D(1), 1}}), 4) + U(word(n0, {{D(0), 1}}), 2);
    EXPECT_EQ(nf, expected);
    EXPECT_NE(nf.coeff(word(e1, {{D(1), 1}})), 0);

    LetterCounts J;
    add_letter(J, D(2).letter());
    EXPECT_EQ(reorder(J, e2), nf * Rational(1, 2));
}

TEST(NormalForm, AgreesWithRandomRewriting)
{
    std::mt19937_64 rng(51);
    for (int d : {1, 2}) {
        auto pool = generator_pool(make_setting(d, Space::L0));
        for (int i = 0; i < 100; ++i) {
            Word w = random_word(rng, pool, Rational(2, 5), 5, 100);
            EXPECT_EQ(normal_form(w), rewrite_to_pbw(w, rng));
        }
    }
}

TEST(Conc, Examples)
{
    EXPECT_EQ(conc(E(e1), E(Vec{2, 0, 0, 0})), U(E(Vec{3, 0, 0, 0}), 3));
    auto a = tilt(z0(), n0);
    EXPECT_EQ(conc(word(n0, {{a, 1}}), word(n0, {{a, 1}})), U(word(n0, {{a, 2}}), 2));
    auto b = tilt(z0(), e1);
    EXPECT_EQ(conc(word(n0, {{b, 1}}), E(e1)), normal_form({b, LGenerator::shift(1)}));
}

TEST(Conc, MatchesNormalFormOfConcatenatedWords)
{
    std::mt19937_64 rng(52);
    auto pool = generator_pool(make_setting(2, Space::L0));
    for (int i = 0; i < 100; ++i) {
        Word u = random_word(rng, pool, Rational(2, 5), 3, 100), v = random_word(rng, pool, Rational(2, 5), 3, 100);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        EXPECT_EQ(conc(normal_form(u), normal_form(v)), normal_form(uv));
    }
}

TEST(Coshuffle, AllSplits)
{
    auto a = tilt(z0(), n0);
    BasisWord w = word(e1, {{a, 1}});
    UTensor d = delta_star(w);
    EXPECT_EQ(d.size(), 4u);
    for (const auto& [pr, c] : d) EXPECT_EQ(c, 1);
    EXPECT_EQ(d.coeff({E(e1), word(n0, {{a, 1}})}), 1);
    EXPECT_EQ(counit(U(w) + U(BasisWord::unit(), 3)), 3);
    // Delta(E_2) = E_2 (x) 1 + E_1 (x) E_1 + 1 (x) E_2.
    EXPECT_EQ(delta_star(E(e2)).size(), 3u);
}

TEST(Grade, Examples)
{
    const Rational alpha(2, 5);
    EXPECT_EQ(grade_u(word(e1, {{tilt(z0(), n0), 1}}), alpha), Rational(7, 5));
    EXPECT_EQ(grade_u(BasisWord::unit(), alpha), 0);
    EXPECT_EQ(grade_u(word(n0, {{tilt(z0z1(), n0), 2}}), alpha), Rational(8, 5));
}

TEST(Extension, Examples)
{
    auto a = tilt(z0(), n0);
    auto b = tilt(z0z1(), n0);
    UElement u = U(word(e1, {{a, 2}}), 3) + U(E(e1));
    EXPECT_EQ(tri_ext(u_one(), u), u);
    EXPECT_EQ(tri_ext(u, u_one()), U(BasisWord::unit(), counit(u)));
    EXPECT_EQ(tri_ext(U(word(n0, {{a, 1}})), normal_form({a, a})), U(word(n0, {{a, 1}, {b, 1}}), 2));
    EXPECT_TRUE(tri_ext(U(word(n0, {{a, 1}})), U(E(e1))).is_zero());
}

TEST(GlProduct, Examples)
{
    auto a = tilt(z0(), n0);
    auto b = tilt(z0z1(), n0);
    BasisWord wa = word(n0, {{a, 1}});
    EXPECT_EQ(gl(wa, wa), U(word(n0, {{b, 1}})) + U(word(n0, {{a, 2}}), 2));
    EXPECT_EQ(gl(E(e1), E(e1)), U(E(e2), 2));
    EXPECT_EQ(gl_explicit(BasisWord::unit(), wa), U(wa));
    EXPECT_EQ(gl_explicit(E(e1), E(e2)), U(E(Vec{3, 0, 0, 0}), 3));
    auto s2 = E(Vec{1, 1, 0, 0});
    EXPECT_EQ(gl_explicit(E(Vec{1, 0, 0, 0}), E(Vec{0, 1, 0, 0})), U(s2));
}

TEST(GlProduct, GradingIsAdditive)
{
    std::mt19937_64 rng(53);
    Setting s = make_setting(1, Space::L);
    auto pool = generator_pool(s);
    for (int i = 0; i < 100; ++i) {
        BasisWord u = random_basis_word(rng, pool, s.alpha, 3, 2), v = random_basis_word(rng, pool, s.alpha, 3, 2);
        Rational want = grade_u(u, s.alpha) + grade_u(v, s.alpha);
        for (const UElement& r : {gl(u, v), conc(u, v), tri_ext(u, v)})
            if (!r.is_zero()) EXPECT_EQ(total_grade(r, s.alpha), want);
    }
}

TEST(GlProduct, CompatibleWithCoshuffle)
{
    std::mt19937_64 rng(54);
    Setting s = make_setting(1, Space::L0);
    auto pool = generator_pool(s);
    for (int i = 0; i < 30; ++i) {
        BasisWord u = random_basis_word(rng, pool, s.alpha, 2, 2), v = random_basis_word(rng, pool, s.alpha, 2, 2);
        UTensor lhs = delta_star(gl(u, v));
        UTensor rhs;
        for (const auto& [pu, cu] : delta_star(u))
            for (const auto& [pv, cv] : delta_star(v)) {
                UElement left = gl(pu.first, pv.first), right = gl(pu.second, pv.second);
                for (const auto& [l, cl] : left)
                    for (const auto& [r, cr] : right) rhs.add({l, r}, cu * cv * cl * cr);
            }
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(Representation, Examples)
{
    auto a = tilt(z0(), n0);
    Polynomial pz0 = monomial(z0());
    EXPECT_EQ(rho_apply(word(n0, {{a, 1}}), pz0), monomial(z0z1()));
    Polynomial p = monomial(z0z1(), 3) + monomial(MultiIndex{{IndexSymbol::spatial(e1), 2}});
    EXPECT_EQ(rho_apply(u_one(), p), p);
    EXPECT_EQ(hat_rho_apply({}, p), p);
    EXPECT_EQ(hat_rho_apply({a}, p), rho(a, p));
    auto c = LGenerator::shift(1);
    EXPECT_EQ(hat_rho_apply({a, c}, p), rho_apply(phi({a, c}), p));
    EXPECT_EQ(phi({a}), U(word(n0, {{a, 1}})));
}

TEST(Representation, MorphismOnRandomWords)
{
    std::mt19937_64 rng(55);
    Setting s = make_setting(2, Space::L0);
    auto pool = generator_pool(s);
    auto monos = monomials_up_to(2, s.alpha, Rational(8, 5));
    for (int i = 0; i < 40; ++i) {
        BasisWord u = random_basis_word(rng, pool, s.alpha, 2, 2), v = random_basis_word(rng, pool, s.alpha, 2, 2);
        Polynomial p = random_poly(rng, monos, 2);
        EXPECT_EQ(rho_apply(gl(u, v), p), rho_apply(u, rho_apply(v, p)));
        EXPECT_EQ(gl(u, v), gl_explicit(u, v));
    }
}

#include "mipl/derivations.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace mipl;
using namespace mipl::testing;

namespace {

IndexSymbol P(int k)
{
    return IndexSymbol::pure(k);
}

IndexSymbol S(int n)
{
    return IndexSymbol::spatial(Vec{n, 0, 0, 0});
}

Polynomial zm(std::initializer_list<MultiIndex::Entry> e, const Rational& c = 1)
{
    return monomial(MultiIndex(e), c);
}

const Vec kZero{};
const Vec kOne{1, 0, 0, 0};

} // namespace

TEST(Tilt, Examples)
{
    EXPECT_EQ(apply_tilt(kZero, zm({{P(1), 2}})), zm({{P(1), 1}, {P(2), 1}}, 4));
    EXPECT_EQ(apply_tilt(kOne, zm({{P(0), 1}, {S(1), 1}})), zm({{P(0), 1}}));
    EXPECT_TRUE(apply_tilt(kZero, poly_one()).is_zero());
    // D^(n) only sees z_n.
    EXPECT_TRUE(apply_tilt(kOne, zm({{P(0), 3}})).is_zero());
}

TEST(Shift, Examples)
{
    EXPECT_EQ(apply_shift(1, zm({{S(2), 1}})), zm({{S(3), 1}}, 3));
    EXPECT_EQ(apply_shift(1, zm({{P(0), 1}})), zm({{P(1), 1}, {S(1), 1}}));
    EXPECT_TRUE(apply_shift(1, poly_one()).is_zero());
}

TEST(RhoWord, Examples)
{
    LetterCounts J;
    add_letter(J, DLetter{MultiIndex{{P(0), 1}}, kZero});
    EXPECT_EQ(rho_word_apply(kZero, J, zm({{P(0), 1}})), zm({{P(0), 1}, {P(1), 1}}));
    Polynomial p = zm({{P(2), 1}, {S(1), 2}}, Rational(5, 7));
    EXPECT_EQ(rho_word_apply(kZero, {}, p), p);
    EXPECT_EQ(rho_word_apply(kOne, {}, zm({{S(1), 1}})), zm({{S(2), 1}}, 2));
}

TEST(RhoWord, NormalisationDividesByFactorials)
{
    LetterCounts J;
    add_letter(J, DLetter{MultiIndex{{P(0), 1}}, kZero}, 2);
    Vec m{2, 0, 0, 0};
    Polynomial p = zm({{P(0), 2}, {S(1), 1}});
    EXPECT_EQ(rho_word_apply(m, J, p, false), rho_word_apply(m, J, p) * Rational(4));
}

TEST(ClosedForm, DocumentedValues)
{
    EXPECT_EQ(closed_form_pure(1, 1, kZero, 2), zm({{P(3), 1}}, 6));
    EXPECT_EQ(closed_form_spatial(kOne, Vec{2, 0, 0, 0}), zm({{S(3), 1}}, 3));
    EXPECT_EQ(closed_form_pure(1, 0, Vec{2, 0, 0, 0}, 0), zm({{P(1), 1}, {S(2), 1}}) + zm({{P(2), 1}, {S(1), 2}}));
}

TEST(ClosedForm, ZeroOrderIsIdentity)
{
    EXPECT_EQ(closed_form_pure(2, 3, kZero, 0), zm({{P(3), 1}}));
    EXPECT_EQ(closed_form_spatial(Vec{1, 1, 0, 0}, kZero), monomial(MultiIndex::unit(IndexSymbol::spatial(Vec{1, 1, 0, 0}))));
}

TEST(Commutators, OnRandomMonomials)
{
    std::mt19937_64 rng(31);
    auto monos = monomials_up_to(2, Rational(2, 5), 2);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = monomial(pick(rng, monos));
        Vec n{static_cast<int>(rng() % 3), static_cast<int>(rng() % 2), 0, 0};
        int axis = static_cast<int>(rng() % 2) + 1;
        Polynomial lhs = apply_tilt(n, apply_shift(axis, p)) - apply_shift(axis, apply_tilt(n, p));
        Polynomial rhs;
        if (n[axis - 1] > 0) rhs = apply_tilt(n - unit_vec(axis), p) * Rational(n[axis - 1]);
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(Compositions, CountsOrderedSplits)
{
    // Ordered compositions of (2) into 2 nonzero parts: (1)+(1) only.
    EXPECT_EQ(vector_compositions(1, Vec{2, 0, 0, 0}, 2).size(), 1u);
    // (1,1) into 2 parts: (1,0)+(0,1) and (0,1)+(1,0).
    EXPECT_EQ(vector_compositions(2, Vec{1, 1, 0, 0}, 2).size(), 2u);
    EXPECT_EQ(vector_compositions(1, Vec{3, 0, 0, 0}, 2).size(), 2u);
}

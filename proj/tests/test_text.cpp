#include "mipl/error.hpp"
#include "mipl/text.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace mipl;
using namespace mipl::testing;

namespace {

const Setting L1 = make_setting(1, Space::L);

} // namespace

TEST(Format, Forms)
{
    MultiIndex g{{IndexSymbol::pure(1), 1}, {IndexSymbol::pure(0), 2}, {IndexSymbol::spatial(Vec{1, 0, 0, 0}), 3}};
    EXPECT_EQ(format(g, 1), "{0:2, 1:1, (1):3}");
    EXPECT_EQ(format(g, 2), "{0:2, 1:1, (1,0):3}");
    auto a = LGenerator::D(MultiIndex{{IndexSymbol::pure(0), 1}}, Vec{}, L1);
    EXPECT_EQ(format(a, 1), "D{0:1|(0)}");
    EXPECT_EQ(format(LGenerator::shift(1), 1), "P(1)");
    EXPECT_EQ(format(BasisWord::unit(), 1), "1");
    BasisWord w = BasisWord::of(a);
    w.m[0] = 1;
    EXPECT_EQ(format(w, 1), "E(1)F[({0:1}|(0)):1]");
    Polynomial p = monomial(g, Rational(-3, 2)) + poly_one();
    EXPECT_EQ(format(p, 1), "1 - 3/2*z{0:2, 1:1, (1):3}");
}

TEST(Parse, Examples)
{
    Word w = parse_word("D{0:1|(0)} . P(1)", make_setting(1, Space::L0));
    ASSERT_EQ(w.size(), 2u);
    EXPECT_TRUE(w[1].is_shift());
    EXPECT_THROW(parse_multiindex("{0:2,(1,0):1}", 1), ParseError);
    Polynomial p = parse_polynomial("3/2 * z{1:1} + z{}", 1);
    EXPECT_EQ(p.size(), 2u);
    EXPECT_EQ(p.coeff(MultiIndex{}), 1);
    EXPECT_EQ(p.coeff(MultiIndex{{IndexSymbol::pure(1), 1}}), Rational(3, 2));
    EXPECT_EQ(parse_multiindex(" { 1 : 1 , 0:2 } ", 1), (MultiIndex{{IndexSymbol::pure(0), 2}, {IndexSymbol::pure(1), 1}}));
    EXPECT_EQ(parse_generator("D{{0:1}|(0)}", L1), parse_generator("D{0:1|(0)}", L1));
    EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
}

TEST(Parse, ErrorsCarryLocation)
{
    try {
        parse_polynomial("z{0:1} +\n  * z{1:1}", 1);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
        EXPECT_EQ(e.column(), 3);
    }
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_generator("Q(1)", L1), ParseError);
    EXPECT_THROW(parse_generator("D{0:1,1:1|(1)}", L1), ConfigError);
    EXPECT_THROW(parse_uelement("E(1)F[", L1), ParseError);
}

TEST(Parse, UElementNormalisesWords)
{
    Setting s = make_setting(1, Space::L0);
    UElement u = parse_uelement("D{0:1|(1)} . P(1)", s);
    EXPECT_EQ(u, normal_form({LGenerator::tilt({MultiIndex{{IndexSymbol::pure(0), 1}}, Vec{1, 0, 0, 0}}),
                              LGenerator::shift(1)}));
    EXPECT_EQ(parse_uelement("2*1 - 1/2*E(2)", s).coeff(BasisWord::unit()), 2);
}

TEST(RoundTrip, RandomValues)
{
    std::mt19937_64 rng(71);
    for (int d : {1, 2})
        for (Space sp : {Space::L, Space::L0}) {
            Setting s = make_setting(d, sp);
            auto pool = generator_pool(s);
            auto monos = monomials_up_to(d, s.alpha, 2);
            for (int i = 0; i < 100; ++i) {
                const MultiIndex& g = pick(rng, monos);
                EXPECT_EQ(parse_multiindex(format(g, d), d), g);
                Polynomial p = random_poly(rng, monos, 3);
                EXPECT_EQ(parse_polynomial(format(p, d), d), p);
                const LGenerator& x = pick(rng, pool);
                EXPECT_EQ(parse_generator(format(x, d), s), x);
                LElement a = LElement(x, small_rational(rng)) + LElement(pick(rng, pool), small_rational(rng));
                EXPECT_EQ(parse_lelement(format(a, d), s), a);
                Word w = random_word(rng, pool, s.alpha, 4, 100);
                EXPECT_EQ(parse_word(format(w, d), s), w);
                BasisWord b = random_basis_word(rng, pool, s.alpha, 4, 100);
                EXPECT_EQ(parse_basis_word(format(b, d), s), b);
                UElement u = UElement(b, small_rational(rng)) + UElement(BasisWord::unit(), small_rational(rng));
                EXPECT_EQ(parse_uelement(format(u, d), s), u);
            }
        }
}

TEST(CharacterFile, ParsesAndValidates)
{
    Character f = parse_character(R"j({"dim": 1, "alpha": "2/5", "space": "L",
                                      "values": {"P(1)": "1/3", "D{0:1|(0)}": "-2"}})j",
                                  L1);
    EXPECT_EQ(f.value(LGenerator::shift(1)), Rational(1, 3));
    EXPECT_EQ(f.value(LGenerator::tilt({MultiIndex{{IndexSymbol::pure(0), 1}}, Vec{}})), -2);
    EXPECT_EQ(f.values().size(), 2u);
    const std::string wrong_dim = R"j({"dim": 2, "values": {}})j";
    const std::string outside = R"j({"values": {"D{0:1,1:1|(1)}": "1"}})j";
    const std::string bad_value = R"j({"values": {"P(1)": "x"}})j";
    EXPECT_THROW(parse_character(wrong_dim, L1), ConfigError);
    EXPECT_THROW(parse_character(outside, L1), ConfigError);
    EXPECT_THROW(parse_character(bad_value, L1), ParseError);
    EXPECT_THROW(parse_character("{", L1), ParseError);
}

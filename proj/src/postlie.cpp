#include "mipl/postlie.hpp"
#include "mipl/error.hpp"

namespace mipl {

LGenerator LGenerator::shift(int i)
{
    LGenerator g;
    g.shift_ = i;
    return g;
}

LGenerator LGenerator::tilt(DLetter x)
{
    LGenerator g;
    g.letter_ = std::move(x);
    return g;
}

LGenerator LGenerator::P(int i, const Setting& s)
{
    if (i < 1 || i > s.dim) throw ConfigError("P(" + std::to_string(i) + ") out of range for dim " + std::to_string(s.dim));
    return shift(i);
}

LGenerator LGenerator::D(const MultiIndex& gamma, const Vec& n, const Setting& s)
{
    for (int i = s.dim; i < kMaxDim; ++i)
        if (n[i] != 0) throw ConfigError("derivation order has more than dim entries");
    for (const auto& [sym, c] : gamma.entries())
        for (int i = s.dim; i < kMaxDim; ++i)
            if (sym.n[i] != 0) throw ConfigError("multi-index has a spatial symbol longer than dim");
    DLetter x{gamma, n};
    if (!in_space(x, s)) throw ConfigError("generator not in space " + std::string(space_name(s.space)));
    return tilt(std::move(x));
}

Rational LGenerator::grade(const Rational& alpha) const
{
    if (is_shift()) return 1;
    return homogeneity(letter_.gamma, alpha) - norm1(letter_.n);
}

bool in_space(const DLetter& x, const Setting& s)
{
    if (s.space == Space::L0) return true;
    return bar_norm(x.gamma).in_M_minus && homogeneity(x.gamma, s.alpha) > norm1(x.n);
}

bool in_space(const LGenerator& g, const Setting& s)
{
    if (g.is_shift()) return g.index() >= 1 && g.index() <= s.dim;
    return in_space(g.letter(), s);
}

LElement tilt_letters(const Polynomial& coeffs, const Vec& n)
{
    LElement r;
    for (const auto& [g, c] : coeffs) r.add(LGenerator::tilt({g, n}), c);
    return r;
}

Polynomial rho(const LGenerator& a, const Polynomial& p)
{
    if (a.is_shift()) return apply_shift(a.index(), p);
    return shift_by(apply_tilt(a.letter().n, p), a.letter().gamma);
}

Polynomial rho(const LElement& a, const Polynomial& p)
{
    Polynomial r;
    for (const auto& [g, c] : a) r.add_scaled(rho(g, p), c);
    return r;
}

LElement pl_product(const LGenerator& a, const LGenerator& b)
{
    if (b.is_shift()) return {};
    return tilt_letters(rho(a, monomial(b.letter().gamma)), b.letter().n);
}

LElement pl_bracket(const LGenerator& a, const LGenerator& b)
{
    // [D{g|n}, P(i)] = n_i D{g|n - e_i}; everything else commutes.
    if (a.is_shift() == b.is_shift()) return {};
    const LGenerator& d = a.is_shift() ? b : a;
    int i = a.is_shift() ? a.index() : b.index();
    int ni = d.letter().n[i - 1];
    if (ni == 0) return {};
    LElement r(LGenerator::tilt({d.letter().gamma, d.letter().n - unit_vec(i)}), Rational(ni));
    return a.is_shift() ? r * Rational(-1) : r;
}

LElement pl_product(const LElement& a, const LElement& b)
{
    LElement r;
    for (const auto& [ga, ca] : a)
        for (const auto& [gb, cb] : b) r.add_scaled(pl_product(ga, gb), ca * cb);
    return r;
}

LElement pl_bracket(const LElement& a, const LElement& b)
{
    LElement r;
    for (const auto& [ga, ca] : a)
        for (const auto& [gb, cb] : b) r.add_scaled(pl_bracket(ga, gb), ca * cb);
    return r;
}

LElement comp_bracket(const LElement& a, const LElement& b)
{
    return pl_product(a, b) - pl_product(b, a) + pl_bracket(a, b);
}

} // namespace mipl

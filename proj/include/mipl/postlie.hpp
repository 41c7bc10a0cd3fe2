#pragma once

#include "mipl/derivations.hpp"
#include "mipl/setting.hpp"

namespace mipl {

// Basis element of L0: P(i) = 1 (x) d_i, or D{gamma|n} = z^gamma (x) D^(n).
// PBW order: P(1) < ... < P(d) < every D, D's ordered by (gamma, n).
class LGenerator {
public:
    // Checked constructors: throw ConfigError for generators outside the space.
    static LGenerator P(int i, const Setting& s);
    static LGenerator D(const MultiIndex& gamma, const Vec& n, const Setting& s);

    // Unchecked; for results of closed operations.
    static LGenerator shift(int i);
    static LGenerator tilt(DLetter x);

    bool is_shift() const { return shift_ != 0; }
    int index() const { return shift_; }
    const DLetter& letter() const { return letter_; }

    Rational grade(const Rational& alpha) const;

    auto operator<=>(const LGenerator& o) const
    {
        if (is_shift() != o.is_shift()) return is_shift() ? std::strong_ordering::less : std::strong_ordering::greater;
        if (is_shift()) return shift_ <=> o.shift_;
        return letter_ <=> o.letter_;
    }
    bool operator==(const LGenerator&) const = default;

private:
    int shift_ = 0;
    DLetter letter_;
};

// Membership in L (gamma in M^-, |gamma| > |n|) or L0 (everything).
bool in_space(const LGenerator& g, const Setting& s);
bool in_space(const DLetter& x, const Setting& s);

using LElement = Linear<LGenerator>;

LElement pl_product(const LElement& a, const LElement& b);
LElement pl_bracket(const LElement& a, const LElement& b);
LElement comp_bracket(const LElement& a, const LElement& b);

LElement pl_product(const LGenerator& a, const LGenerator& b);
LElement pl_bracket(const LGenerator& a, const LGenerator& b);

// rho(a (x) D) = a D as an operator on A.
Polynomial rho(const LElement& a, const Polynomial& p);
Polynomial rho(const LGenerator& a, const Polynomial& p);

// Turns z^{...} (x) D^(n) combinations into generator combinations.
LElement tilt_letters(const Polynomial& coeffs, const Vec& n);

} // namespace mipl

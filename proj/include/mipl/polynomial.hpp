#pragma once

#include "mipl/index.hpp"
#include "mipl/linear.hpp"

namespace mipl {

// Element of A = R[z_k, z_n]: multi-index -> coefficient. The empty index is 1.
using Polynomial = Linear<MultiIndex>;

inline Polynomial monomial(const MultiIndex& g, const Rational& c = 1)
{
    return Polynomial(g, c);
}

inline Polynomial poly_one()
{
    return monomial(MultiIndex{});
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

// Multiplies every monomial by z^g.
Polynomial shift_by(const Polynomial& p, const MultiIndex& g);

// Largest homogeneity among the monomials of p (0 for the zero polynomial).
Rational max_homogeneity(const Polynomial& p, const Rational& alpha);

// Formal series known exactly up to homogeneity `cutoff`.
class TruncatedSeries {
public:
    TruncatedSeries(int dim, Rational alpha, Rational cutoff);
    TruncatedSeries(int dim, Rational alpha, Rational cutoff, const Polynomial& p);

    int dim() const { return dim_; }
    const Rational& alpha() const { return alpha_; }
    const Rational& cutoff() const { return cutoff_; }
    const Polynomial& terms() const { return terms_; }

    // Adds c z^g; terms beyond the cutoff are dropped.
    void add(const MultiIndex& g, const Rational& c);

    // Coefficient of z^g; throws BudgetError if |g| exceeds the cutoff.
    Rational coeff(const MultiIndex& g) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& s);

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a.dim_ == b.dim_ && a.alpha_ == b.alpha_ && a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
    }

private:
    int dim_;
    Rational alpha_;
    Rational cutoff_;
    Polynomial terms_;
};

// Product in the series algebra; the result cutoff is the smaller one.
// Throws ConfigError on mismatched dim or alpha.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// <s, p> = sum s_g p_g. Throws BudgetError if p has a monomial above the cutoff.
Rational pairing(const TruncatedSeries& s, const Polynomial& p);

} // namespace mipl

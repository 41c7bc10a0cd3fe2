#include "mipl/polynomial.hpp"
#include "mipl/error.hpp"

#include <algorithm>

namespace mipl {

Polynomial poly_mul(const Polynomial& a, const Polynomial& b)
{
    Polynomial r;
    for (const auto& [ga, ca] : a)
        for (const auto& [gb, cb] : b) r.add(mi_add(ga, gb), ca * cb);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    return poly_mul(a, b);
}

Polynomial shift_by(const Polynomial& p, const MultiIndex& g)
{
    Polynomial r;
    for (const auto& [h, c] : p) r.add(mi_add(h, g), c);
    return r;
}

Rational max_homogeneity(const Polynomial& p, const Rational& alpha)
{
    Rational m = 0;
    for (const auto& [g, c] : p) m = std::max(m, homogeneity(g, alpha));
    return m;
}

TruncatedSeries::TruncatedSeries(int dim, Rational alpha, Rational cutoff)
    : dim_(dim), alpha_(std::move(alpha)), cutoff_(std::move(cutoff))
{
}

TruncatedSeries::TruncatedSeries(int dim, Rational alpha, Rational cutoff, const Polynomial& p)
    : TruncatedSeries(dim, std::move(alpha), std::move(cutoff))
{
    for (const auto& [g, c] : p) add(g, c);
}

void TruncatedSeries::add(const MultiIndex& g, const Rational& c)
{
    if (homogeneity(g, alpha_) <= cutoff_) terms_.add(g, c);
}

Rational TruncatedSeries::coeff(const MultiIndex& g) const
{
    if (homogeneity(g, alpha_) > cutoff_) throw BudgetError("coefficient requested beyond series cutoff " + to_string(cutoff_));
    return terms_.coeff(g);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    if (o.dim_ != dim_ || o.alpha_ != alpha_) throw ConfigError("series with different dim/alpha");
    cutoff_ = std::min(cutoff_, o.cutoff_);
    Polynomial kept;
    for (const auto& [g, c] : terms_)
        if (homogeneity(g, alpha_) <= cutoff_) kept.add(g, c);
    for (const auto& [g, c] : o.terms_)
        if (homogeneity(g, alpha_) <= cutoff_) kept.add(g, c);
    terms_ = std::move(kept);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s)
{
    terms_ *= s;
    return *this;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.dim() != b.dim() || a.alpha() != b.alpha()) throw ConfigError("series with different dim/alpha");
    TruncatedSeries r(a.dim(), a.alpha(), std::min(a.cutoff(), b.cutoff()));
    for (const auto& [ga, ca] : a.terms()) {
        Rational ha = homogeneity(ga, a.alpha());
        if (ha > r.cutoff()) continue;
        for (const auto& [gb, cb] : b.terms()) {
            if (ha + homogeneity(gb, a.alpha()) > r.cutoff()) continue;
            r.add(mi_add(ga, gb), ca * cb);
        }
    }
    return r;
}

Rational pairing(const TruncatedSeries& s, const Polynomial& p)
{
    Rational r = 0;
    for (const auto& [g, c] : p) r += s.coeff(g) * c;
    return r;
}

} // namespace mipl

#pragma once

#include "mipl/duality.hpp"

#include <functional>
#include <map>
#include <memory>

namespace mipl {

// Linear form on U(L), given by its values f(T w) on the dual basis.
class Functional {
public:
    using Oracle = std::function<Rational(const BasisWord&)>;

    Functional(Oracle f, bool is_character = false);

    // f(T w).
    Rational operator()(const BasisWord& w) const;
    bool is_character() const { return is_character_; }

private:
    struct State;
    std::shared_ptr<State> state_;
    bool is_character_;
};

// A *-multiplicative form, stored by its values on generators (unlisted = 0).
class Character {
public:
    explicit Character(Setting s) : setting_(std::move(s)) {}

    void set(const LGenerator& g, const Rational& value);
    Rational value(const LGenerator& g) const;
    const std::map<LGenerator, Rational>& values() const { return values_; }
    const Setting& setting() const { return setting_; }

    Functional functional() const;

private:
    Setting setting_;
    std::map<LGenerator, Rational> values_;
};

// prod f(P(i))^{m_i} prod f(D)^{J(D)}.
Rational char_eval(const Character& f, const BasisWord& w);

// The counit, unit of the convolution group.
Functional unit_functional();

// (f1 ▷̄ f2)(T w) = sum <u1 ▷̄ u2, T w> f1(T u1) f2(T u2). Evaluations on words
// of grade above `budget` throw BudgetError.
Functional convolve(const Setting& s, const Functional& f1, const Functional& f2, const Rational& budget);
Rational convolve_eval(const Setting& s, const Functional& f1, const Functional& f2, const UElement& v,
                       const Rational& budget);

// g with g ▷̄ f = unit on every word of grade <= budget, by grade recursion.
Functional group_inverse(const Setting& s, const Functional& f, const Rational& budget);

// rho(f) on a truncated series: coefficient of z^b is
// sum f(T u) s_g <rho(u)(z^g), z^b>, exact up to the cutoff of s.
TruncatedSeries char_act(const Setting& s, const Functional& f, const TruncatedSeries& series);

// f^(n) = sum_m binom(n+m, n) f(T E_m) z_{n+m} + sum_{b in M^-, |b| > |n|} f(D{b|n}) z^b.
TruncatedSeries f_hash_n(const Setting& s, const Functional& f, const Vec& n, const Rational& cutoff);

// rho(f) z_n = z_n + f^(n),  rho(f) z_k = sum_l binom(k+l, k) (f^(0))^l z_{k+l}.
TruncatedSeries char_act_gen_closed(const Character& f, const IndexSymbol& gen, const Rational& cutoff);

// Lambda(f (x) s) = rho(f)(s) + <s, 1> f^(0).
TruncatedSeries lambda_act(const Setting& s, const Functional& f, const TruncatedSeries& series);

// Gamma_f z^b = sum_g <rho(f) z^g, z^b> z^g + <f^(0), z^b> 1.
Polynomial gamma_act(const Setting& s, const Functional& f, const Polynomial& p, const Rational& budget);

} // namespace mipl

#pragma once

#include "mipl/envelope.hpp"

#include <vector>

namespace mipl {

// T(E_m F_J) = m! J! E_m F_J, the passage to the dual basis Ebar_m Fbar_J.
UElement t_map(const UElement& u);

// <u, Ebar_m Fbar_J>: the coefficient of w in u.
Rational pairing_u(const UElement& u, const BasisWord& w);

// Ebar_m Fbar_J * Ebar_mbar Fbar_Jbar = Ebar_{m+mbar} Fbar_{J+Jbar}.
BasisWord star(const BasisWord& u, const BasisWord& v);
UElement star(const UElement& u, const UElement& v);
UTensor star(const UTensor& a, const UTensor& b);

// A term <rho(u)(z^source), z^target> = coeff of the inverse image of z^target.
struct Preimage {
    BasisWord u;
    MultiIndex source;
    Rational coeff;

    bool operator==(const Preimage&) const = default;
};

// Every (u, source) pair with a nonzero contribution to z^target, the pair
// (1, target) included. `bound` only widens the search for sources and must
// be at least |target|; it never changes the result. Requires space L.
std::vector<Preimage> preimages(const Setting& s, const MultiIndex& target, const Rational& bound);

// Theta(u (x) z^target) = sum_b <rho(u)(z^b), z^target> z^b.
Polynomial theta(const Setting& s, const BasisWord& u, const MultiIndex& target);

// Delta_trbar(T v) as pairs (u1, u2) meaning T u1 (x) T u2, so that the
// coefficient equals <u1 ▷̄ u2, T v>. Throws BudgetError if a word of v has
// grade above `budget`, ConfigError outside space L.
UTensor delta_gl(const Setting& s, const UElement& v, const Rational& budget);
UTensor delta_gl(const Setting& s, const BasisWord& v, const Rational& budget);

// Coaction Delta(z^a) = sum <rho(u)(z^b), z^a> T u (x) z^b.
using CoactionTerms = Linear<std::pair<BasisWord, MultiIndex>>;
CoactionTerms comodule_delta(const Setting& s, const MultiIndex& a, const Rational& budget);

} // namespace mipl

#pragma once

#include "mipl/polynomial.hpp"

#include <vector>

namespace mipl {

// The letter z^gamma (x) D^(n); n = 0 is the tilt D^(0).
struct DLetter {
    MultiIndex gamma;
    Vec n{};

    auto operator<=>(const DLetter&) const = default;
    bool operator==(const DLetter&) const = default;
};

// Multiset of D-letters, sorted, counts > 0.
using LetterCounts = std::vector<std::pair<DLetter, int>>;

void add_letter(LetterCounts& J, const DLetter& x, int c = 1);
int letter_count(const LetterCounts& J, const DLetter& x);
int total_letters(const LetterCounts& J);
mpz_class counts_factorial(const LetterCounts& J); // J!

// D^(n): (k+1) g_k z^{g+e_{k+1}-e_k} summed over k for n = 0, g_n z^{g-e_n} otherwise.
Polynomial apply_tilt(const Vec& n, const Polynomial& p);
// d_i, i 1-based.
Polynomial apply_shift(int i, const Polynomial& p);

// rho(E_m F_J)(p) = z^{sum J gamma} / (m! J!) d^m o prod (D^(n))^{J(gamma,n)} (p).
// With normalized = false the 1/(m! J!) factor is omitted (raw word in PBW order).
Polynomial rho_word_apply(const Vec& m, const LetterCounts& J, const Polynomial& p, bool normalized = true);

// Closed forms: (1/m!) d^m (D^(0))^ell z_k and (1/m!) d^m z_n.
Polynomial closed_form_pure(int dim, int k, const Vec& m, int ell);
Polynomial closed_form_spatial(const Vec& n, const Vec& m);

// Ordered compositions m = m_1 + ... + m_j into nonzero vectors.
std::vector<std::vector<Vec>> vector_compositions(int dim, const Vec& m, int parts);

} // namespace mipl

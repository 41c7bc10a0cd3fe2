#pragma once

#include "mipl/postlie.hpp"

#include <vector>

namespace mipl {

// PBW basis symbol E_m F_J = (1/m!) P^m (1/J!) prod D^J.
struct BasisWord {
    Vec m{};
    LetterCounts J;

    static BasisWord unit() { return {}; }
    static BasisWord of(const LGenerator& g);
    bool is_unit() const { return is_zero(m) && J.empty(); }
    int length() const { return norm1(m) + total_letters(J); }

    // Raw letters in PBW order (P's first), each repeated by its multiplicity.
    std::vector<LGenerator> letters() const;
    // m! J!, the factor between the raw word and E_m F_J.
    mpz_class norm_factor() const { return vec_factorial(m) * counts_factorial(J); }

    auto operator<=>(const BasisWord&) const = default;
    bool operator==(const BasisWord&) const = default;
};

using UElement = Linear<BasisWord>;
using Word = std::vector<LGenerator>;

// Coefficient list of BasisWord (x) BasisWord.
using UTensor = Linear<std::pair<BasisWord, BasisWord>>;

inline UElement u_one()
{
    return UElement(BasisWord::unit());
}

// Raw word rewritten into the PBW basis.
UElement normal_form(const Word& w);
// u . g for a single letter g, result normal-ordered.
UElement mul_letter(const UElement& u, const LGenerator& g);

// Concatenation product.
UElement conc(const UElement& u, const UElement& v);
UElement conc(const BasisWord& u, const BasisWord& v);

// F_J E_m restored to normal order with the lowering derivations
// delta_i(D{g|n}) = n_i D{g|n-e_i}:  F_J E_m = sum_{k<=m} E_k (delta^{m-k}/(m-k)!) F_J.
UElement reorder(const LetterCounts& J, const Vec& m);

Rational counit(const UElement& u);
UTensor delta_star(const UElement& u);
UTensor delta_star(const BasisWord& u);

Rational grade_u(const BasisWord& u, const Rational& alpha);

// Guin-Oudom extension of the post-Lie product to U(L).
UElement tri_ext(const UElement& u, const UElement& v);
UElement tri_ext(const BasisWord& u, const BasisWord& v);

// The associative product u ▷̄ v = u(1) (u(2) ▷ v).
UElement gl(const UElement& u, const UElement& v);
UElement gl(const BasisWord& u, const BasisWord& v);

// The same product from the explicit E_m F_J expansion.
UElement gl_explicit(const BasisWord& u, const BasisWord& v);
UElement gl_explicit(const UElement& u, const UElement& v);

// a_1 ▷̄ (a_2 ▷̄ ( ... ▷̄ a_n)).
UElement phi(const Word& w);

Polynomial rho_apply(const UElement& u, const Polynomial& p);
Polynomial rho_apply(const BasisWord& u, const Polynomial& p);
// (a_1 D_1) o ... o (a_n D_n).
Polynomial hat_rho_apply(const Word& w, const Polynomial& p);

} // namespace mipl

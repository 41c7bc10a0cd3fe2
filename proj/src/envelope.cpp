#include "mipl/envelope.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace mipl {

namespace {

// Commutative algebra spanned by the F_J.
using FElement = Linear<LetterCounts>;

// binom(J + K, J) = prod_y binom(J(y) + K(y), J(y)).
mpz_class counts_binomial(const LetterCounts& J, const LetterCounts& K)
{
    mpz_class r = 1;
    for (const auto& [x, c] : J) r *= binomial(c + letter_count(K, x), c);
    return r;
}

LetterCounts counts_sum(LetterCounts J, const LetterCounts& K)
{
    for (const auto& [x, c] : K) add_letter(J, x, c);
    return J;
}

// delta_i on the F-basis: delta_i F_J = sum_y n_i(y) (J(y')+1) F_{J - e_y + e_y'}.
FElement lower(const FElement& f, int i)
{
    FElement r;
    for (const auto& [J, c] : f)
        for (const auto& [x, cnt] : J) {
            int ni = x.n[i - 1];
            if (ni == 0) continue;
            DLetter y{x.gamma, x.n - unit_vec(i)};
            LetterCounts K = J;
            add_letter(K, x, -1);
            int before = letter_count(K, y);
            add_letter(K, y, 1);
            r.add(K, c * ni * (before + 1));
        }
    return r;
}

// (delta^r / r!) F_J with r a vector of orders.
FElement lower_by(const LetterCounts& J, const Vec& r)
{
    FElement f(J);
    for (int i = 0; i < kMaxDim; ++i) {
        for (int j = 0; j < r[i]; ++j) f = lower(f, i + 1);
        if (r[i] > 1) f *= Rational(1) / Rational(factorial(r[i]));
    }
    return f;
}

FElement f_mul(const FElement& a, const FElement& b)
{
    FElement r;
    for (const auto& [J, ca] : a)
        for (const auto& [K, cb] : b) r.add(counts_sum(J, K), ca * cb * Rational(counts_binomial(J, K)));
    return r;
}

// E_m * sum_J c_J F_J.
void add_EF(UElement& out, const Vec& m, const FElement& f, const Rational& scale)
{
    for (const auto& [J, c] : f) out.add(BasisWord{m, J}, c * scale);
}

// Letter products: a list of letter combinations, multiplied out in U(L) and
// expressed in the F basis (a product of letters with multiset K is K! F_K).
FElement letter_product(const std::vector<LElement>& factors)
{
    FElement acc(LetterCounts{});
    for (const auto& fac : factors) {
        FElement next;
        for (const auto& [K, c] : acc)
            for (const auto& [g, cg] : fac) {
                LetterCounts K2 = K;
                int before = letter_count(K2, g.letter());
                add_letter(K2, g.letter(), 1);
                // raw product K!F_K . y = K! (K(y)+1) F_{K+y}; track the raw-letter normalization
                next.add(K2, c * cg * (before + 1));
            }
        acc = std::move(next);
    }
    return acc;
}

void split_counts(const LetterCounts& J, std::size_t idx, LetterCounts& left, std::vector<std::pair<LetterCounts, LetterCounts>>& out)
{
    if (idx == J.size()) {
        LetterCounts right = J;
        for (const auto& [x, c] : left) add_letter(right, x, -c);
        out.emplace_back(left, std::move(right));
        return;
    }
    const auto& [x, c] = J[idx];
    for (int j = 0; j <= c; ++j) {
        if (j > 0) add_letter(left, x, 1);
        split_counts(J, idx + 1, left, out);
    }
    if (c > 0) add_letter(left, x, -c);
}

std::vector<std::pair<LetterCounts, LetterCounts>> splits(const LetterCounts& J)
{
    std::vector<std::pair<LetterCounts, LetterCounts>> out;
    LetterCounts left;
    split_counts(J, 0, left, out);
    return out;
}

// Memo table for a function of two basis words; behaves as the function itself.
struct PairCache {
    std::mutex mu;
    std::map<std::pair<BasisWord, BasisWord>, UElement> values;

    template <class F>
    UElement get(const BasisWord& u, const BasisWord& v, F&& compute)
    {
        std::pair<BasisWord, BasisWord> key{u, v};
        {
            std::lock_guard lock(mu);
            auto it = values.find(key);
            if (it != values.end()) return it->second;
        }
        UElement r = compute();
        std::lock_guard lock(mu);
        values.emplace(std::move(key), r);
        return r;
    }
};

} // namespace

BasisWord BasisWord::of(const LGenerator& g)
{
    BasisWord w;
    if (g.is_shift())
        w.m[g.index() - 1] = 1;
    else
        w.J.push_back({g.letter(), 1});
    return w;
}

std::vector<LGenerator> BasisWord::letters() const
{
    std::vector<LGenerator> out;
    for (int i = 0; i < kMaxDim; ++i)
        for (int j = 0; j < m[i]; ++j) out.push_back(LGenerator::shift(i + 1));
    for (const auto& [x, c] : J)
        for (int j = 0; j < c; ++j) out.push_back(LGenerator::tilt(x));
    return out;
}

UElement mul_letter(const UElement& u, const LGenerator& g)
{
    UElement r;
    for (const auto& [w, c] : u) {
        if (!g.is_shift()) {
            BasisWord v = w;
            int before = letter_count(v.J, g.letter());
            add_letter(v.J, g.letter(), 1);
            r.add(v, c * (before + 1));
            continue;
        }
        int i = g.index();
        BasisWord v = w;
        v.m[i - 1] += 1;
        r.add(v, c * v.m[i - 1]);
        add_EF(r, w.m, lower(FElement(w.J), i), c);
    }
    return r;
}

UElement normal_form(const Word& w)
{
    UElement u = u_one();
    for (const auto& g : w) u = mul_letter(u, g);
    return u;
}

UElement conc(const BasisWord& u, const BasisWord& v)
{
    if (u.J.empty() || is_zero(v.m)) {
        Rational c(vec_binomial(u.m + v.m, u.m) * counts_binomial(u.J, v.J));
        return UElement(BasisWord{u.m + v.m, counts_sum(u.J, v.J)}, c);
    }
    static PairCache cache;
    return cache.get(u, v, [&] {
        UElement r(u);
        for (const auto& g : v.letters()) r = mul_letter(r, g);
        return r * (Rational(1) / Rational(v.norm_factor()));
    });
}

UElement conc(const UElement& u, const UElement& v)
{
    UElement r;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v) r.add_scaled(conc(a, b), ca * cb);
    return r;
}

UElement reorder(const LetterCounts& J, const Vec& m)
{
    UElement r;
    // k ranges over the vectors below m, the E_k part kept to the left.
    int dim = kMaxDim;
    for (const Vec& k : vectors_below(dim, m)) add_EF(r, k, lower_by(J, m - k), 1);
    return r;
}

Rational counit(const UElement& u)
{
    return u.coeff(BasisWord::unit());
}

UTensor delta_star(const BasisWord& u)
{
    UTensor r;
    for (const Vec& a : vectors_below(kMaxDim, u.m))
        for (const auto& [J1, J2] : splits(u.J)) r.add({BasisWord{a, J1}, BasisWord{u.m - a, J2}}, 1);
    return r;
}

UTensor delta_star(const UElement& u)
{
    UTensor r;
    for (const auto& [w, c] : u) r.add_scaled(delta_star(w), c);
    return r;
}

Rational grade_u(const BasisWord& u, const Rational& alpha)
{
    long pure = 0, spatial = norm1(u.m);
    for (const auto& [x, c] : u.J) {
        pure += static_cast<long>(x.gamma.pure_count()) * c;
        spatial += (static_cast<long>(x.gamma.spatial_weight()) - norm1(x.n)) * c;
    }
    Rational g = alpha * pure;
    g += spatial;
    return g;
}

namespace {

UElement tri_ext_uncached(const BasisWord& u, const BasisWord& v);

} // namespace

UElement tri_ext(const BasisWord& u, const BasisWord& v)
{
    if (v.is_unit()) return u.is_unit() ? u_one() : UElement{};
    if (u.is_unit()) return UElement(v);
    static PairCache cache;
    return cache.get(u, v, [&] { return tri_ext_uncached(u, v); });
}

namespace {

UElement tri_ext_uncached(const BasisWord& u, const BasisWord& v)
{
    if (v.is_unit()) return u.is_unit() ? u_one() : UElement{};
    if (u.is_unit()) return UElement(v);
    std::vector<DLetter> targets;
    for (const auto& [x, c] : v.J)
        for (int j = 0; j < c; ++j) targets.push_back(x);
    if (targets.empty()) return {};

    // Every map from u's raw letters to v's D-letters; letters sent to a
    // P-letter would act on the unit and vanish. Identical block layouts are
    // evaluated once.
    std::vector<LGenerator> letters = u.letters();
    std::vector<BasisWord> blocks(targets.size());
    std::map<std::vector<BasisWord>, long> layouts;
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (i == letters.size()) {
            ++layouts[blocks];
            return;
        }
        const auto& g = letters[i];
        for (auto& b : blocks) {
            if (g.is_shift()) {
                b.m[g.index() - 1] += 1;
                assign(i + 1);
                b.m[g.index() - 1] -= 1;
            } else {
                add_letter(b.J, g.letter(), 1);
                assign(i + 1);
                add_letter(b.J, g.letter(), -1);
            }
        }
    };
    assign(0);

    FElement acc;
    for (const auto& [layout, mult] : layouts) {
        std::vector<LElement> factors;
        bool zero = false;
        for (std::size_t j = 0; j < targets.size() && !zero; ++j) {
            Polynomial p = rho_word_apply(layout[j].m, layout[j].J, monomial(targets[j].gamma), false);
            if (p.is_zero()) zero = true;
            factors.push_back(tilt_letters(p, targets[j].n));
        }
        if (zero) continue;
        acc.add_scaled(letter_product(factors), Rational(mult));
    }
    // The P-letters of v stay in front: P^mbar = mbar! E_mbar.
    UElement r;
    Rational scale = Rational(vec_factorial(v.m)) / Rational(u.norm_factor() * v.norm_factor());
    add_EF(r, v.m, acc, scale);
    return r;
}

} // namespace

UElement tri_ext(const UElement& u, const UElement& v)
{
    UElement r;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v) r.add_scaled(tri_ext(a, b), ca * cb);
    return r;
}

UElement gl(const BasisWord& u, const BasisWord& v)
{
    UElement r;
    for (const auto& [pair, c] : delta_star(u)) r.add_scaled(conc(UElement(pair.first), tri_ext(pair.second, v)), c);
    return r;
}

UElement gl(const UElement& u, const UElement& v)
{
    UElement r;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v) r.add_scaled(gl(a, b), ca * cb);
    return r;
}

namespace {

// Ordered compositions of c into `parts` nonnegative integers.
void int_compositions(int c, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (parts == 1) {
        cur.push_back(c);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int j = 0; j <= c; ++j) {
        cur.push_back(j);
        int_compositions(c - j, parts - 1, cur, out);
        cur.pop_back();
    }
}

// E_a F_B ▷ F_Jbar = (1/Jbar!) sum over ordered compositions (a_l, B_l) of
// prod_l rho(E_{a_l} F_{B_l})(z^{gamma_l}) (x) D^(n_l).
FElement eff(const Vec& a, const LetterCounts& B, const LetterCounts& Jbar)
{
    std::vector<DLetter> targets;
    for (const auto& [x, c] : Jbar)
        for (int j = 0; j < c; ++j) targets.push_back(x);
    std::size_t N = targets.size();
    if (N == 0) {
        if (is_zero(a) && B.empty()) return FElement(LetterCounts{});
        return {};
    }
    // Per coordinate and per letter type, the ways of splitting into N parts.
    std::vector<std::vector<std::vector<int>>> choices;
    for (int i = 0; i < kMaxDim; ++i) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        int_compositions(a[i], static_cast<int>(N), cur, out);
        choices.push_back(std::move(out));
    }
    for (const auto& [x, c] : B) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        int_compositions(c, static_cast<int>(N), cur, out);
        choices.push_back(std::move(out));
    }
    FElement acc;
    std::vector<std::size_t> pick(choices.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t depth) {
        if (depth < choices.size()) {
            for (std::size_t t = 0; t < choices[depth].size(); ++t) {
                pick[depth] = t;
                rec(depth + 1);
            }
            return;
        }
        std::vector<LElement> factors;
        for (std::size_t l = 0; l < N; ++l) {
            Vec ml{};
            for (int i = 0; i < kMaxDim; ++i) ml[i] = choices[i][pick[i]][l];
            LetterCounts Bl;
            for (std::size_t y = 0; y < B.size(); ++y) add_letter(Bl, B[y].first, choices[kMaxDim + y][pick[kMaxDim + y]][l]);
            Polynomial p = rho_word_apply(ml, Bl, monomial(targets[l].gamma));
            if (p.is_zero()) return;
            factors.push_back(tilt_letters(p, targets[l].n));
        }
        acc += letter_product(factors);
    };
    rec(0);
    return acc * (Rational(1) / Rational(counts_factorial(Jbar)));
}

} // namespace

UElement gl_explicit(const BasisWord& u, const BasisWord& v)
{
    UElement r;
    for (const Vec& m1 : vectors_below(kMaxDim, u.m))
        for (const auto& [J1, J2] : splits(u.J)) {
            FElement x = eff(u.m - m1, J2, v.J);
            if (x.is_zero()) continue;
            for (const auto& [w, c] : reorder(J1, v.m)) {
                FElement fw = f_mul(FElement(w.J), x);
                add_EF(r, m1 + w.m, fw, c * Rational(vec_binomial(m1 + w.m, m1)));
            }
        }
    return r;
}

UElement gl_explicit(const UElement& u, const UElement& v)
{
    UElement r;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v) r.add_scaled(gl_explicit(a, b), ca * cb);
    return r;
}

UElement phi(const Word& w)
{
    if (w.empty()) return u_one();
    UElement r(BasisWord::of(w.back()));
    for (auto it = w.rbegin() + 1; it != w.rend(); ++it) r = gl(UElement(BasisWord::of(*it)), r);
    return r;
}

Polynomial rho_apply(const BasisWord& u, const Polynomial& p)
{
    return rho_word_apply(u.m, u.J, p);
}

Polynomial rho_apply(const UElement& u, const Polynomial& p)
{
    Polynomial r;
    for (const auto& [w, c] : u) r.add_scaled(rho_apply(w, p), c);
    return r;
}

Polynomial hat_rho_apply(const Word& w, const Polynomial& p)
{
    Polynomial r = p;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = rho(*it, r);
    return r;
}

} // namespace mipl

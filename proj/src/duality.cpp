#include "mipl/duality.hpp"
#include "mipl/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>

namespace mipl {

UElement t_map(const UElement& u)
{
    UElement r;
    for (const auto& [w, c] : u) r.add(w, c * Rational(w.norm_factor()));
    return r;
}

Rational pairing_u(const UElement& u, const BasisWord& w)
{
    return u.coeff(w);
}

BasisWord star(const BasisWord& u, const BasisWord& v)
{
    BasisWord r{u.m + v.m, u.J};
    for (const auto& [x, c] : v.J) add_letter(r.J, x, c);
    return r;
}

UElement star(const UElement& u, const UElement& v)
{
    UElement r;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v) r.add(star(a, b), ca * cb);
    return r;
}

UTensor star(const UTensor& a, const UTensor& b)
{
    UTensor r;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) r.add({star(x.first, y.first), star(x.second, y.second)}, cx * cy);
    return r;
}

namespace {

void require_L(const Setting& s, const char* what)
{
    if (s.space != Space::L) throw ConfigError(std::string(what) + " needs space L (finiteness fails in L0)");
}

using Bucket = std::map<std::pair<Rational, int>, std::vector<MultiIndex>>;

// Level set {b : ||b|| = level, |b| <= bound, pure indices <= cap}, grouped
// by (|b|, pure count).
const Bucket& level_buckets(const Setting& s, const Rational& bound, int level, int cap)
{
    using Key = std::tuple<int, Rational, Rational, int, int>;
    static std::mutex mu;
    static std::map<Key, Bucket> cache;
    Key key{s.dim, s.alpha, bound, level, cap};
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Bucket b;
    for (auto& g : enumerate_level(s.dim, s.alpha, bound, level, cap))
        b[{homogeneity(g, s.alpha), g.pure_count()}].push_back(std::move(g));
    return cache.emplace(key, std::move(b)).first->second;
}

std::vector<Preimage> compute_preimages(const Setting& s, const MultiIndex& target, const Rational& bound)
{
    const Rational h = homogeneity(target, s.alpha);
    const int level = bar_norm(target).value;
    const int cap = target.max_pure();
    const Bucket& sources = level_buckets(s, bound, level, cap);

    // Letters z^g (x) D^(n) that can appear: g <= target, g in M^-, |n| < |g|.
    struct Cand {
        DLetter x;
        Rational grade;
    };
    std::vector<Cand> pool;
    for (const auto& g : sub_indices(target)) {
        if (!bar_norm(g).in_M_minus) continue;
        Rational hg = homogeneity(g, s.alpha);
        for (int k = 0; k < hg; ++k)
            for (const Vec& n : vectors_of_norm(s.dim, k)) pool.push_back({{g, n}, hg - k});
    }

    std::vector<Preimage> out;
    LetterCounts W;
    auto close = [&](const MultiIndex& rem, const Rational& dgrade) {
        int pc = rem.pure_count();
        bool has_tilt0 = false;
        for (const auto& [x, c] : W) has_tilt0 = has_tilt0 || is_zero(x.n);
        if (has_tilt0 && pc == 0) return;
        Rational left = h - dgrade;
        for (int sm = 0; sm <= left; ++sm) {
            auto it = sources.find({left - sm, pc});
            if (it == sources.end()) continue;
            for (const Vec& m : vectors_of_norm(s.dim, sm))
                for (const MultiIndex& b : it->second) {
                    bool ok = true;
                    for (const auto& [x, c] : W)
                        if (!is_zero(x.n) && b.count(IndexSymbol::spatial(x.n)) < c) ok = false;
                    if (!ok) continue;
                    Rational c = rho_word_apply(m, W, monomial(b)).coeff(target);
                    if (c != 0) out.push_back({BasisWord{m, W}, b, c});
                }
        }
    };
    std::function<void(std::size_t, const MultiIndex&, const Rational&)> rec =
        [&](std::size_t from, const MultiIndex& rem, const Rational& dgrade) {
            close(rem, dgrade);
            for (std::size_t i = from; i < pool.size(); ++i) {
                if (dgrade + pool[i].grade > h || !mi_leq(pool[i].x.gamma, rem)) continue;
                add_letter(W, pool[i].x, 1);
                rec(i, mi_sub(rem, pool[i].x.gamma), dgrade + pool[i].grade);
                add_letter(W, pool[i].x, -1);
            }
        };
    rec(0, target, Rational(0));
    std::sort(out.begin(), out.end(), [](const Preimage& a, const Preimage& b) {
        return std::tie(a.u, a.source) < std::tie(b.u, b.source);
    });
    return out;
}

} // namespace

std::vector<Preimage> preimages(const Setting& s, const MultiIndex& target, const Rational& bound)
{
    require_L(s, "inverse-image enumeration");
    if (bound < homogeneity(target, s.alpha)) throw BudgetError("search bound " + to_string(bound) + " below |target|");
    using Key = std::tuple<int, Rational, MultiIndex, Rational>;
    static std::mutex mu;
    static std::map<Key, std::vector<Preimage>> cache;
    Key key{s.dim, s.alpha, target, bound};
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto out = compute_preimages(s, target, bound);
    std::lock_guard lock(mu);
    cache.emplace(std::move(key), out);
    return out;
}

Polynomial theta(const Setting& s, const BasisWord& u, const MultiIndex& target)
{
    Polynomial r;
    for (const auto& pre : preimages(s, target, homogeneity(target, s.alpha)))
        if (pre.u == u) r.add(pre.source, pre.coeff);
    return r;
}

namespace {

UTensor delta_generator(const Setting& s, const LGenerator& g, const Rational& budget)
{
    UTensor r;
    BasisWord self = BasisWord::of(g);
    r.add({self, BasisWord::unit()}, 1);
    if (g.is_shift()) {
        r.add({BasisWord::unit(), self}, 1);
        return r;
    }
    const DLetter& x = g.letter();
    Rational hg = homogeneity(x.gamma, s.alpha);
    for (const auto& pre : preimages(s, x.gamma, budget + norm1(x.n))) {
        DLetter y{pre.source, x.n};
        if (!in_space(y, s)) continue;
        r.add({pre.u, BasisWord::of(LGenerator::tilt(y))}, pre.coeff);
    }
    // Concatenation part: D{g|n'} . E_{n'-n} contains binom(n', n'-n) D{g|n}.
    for (int k = norm1(x.n) + 1; k < hg; ++k)
        for (const Vec& np : vectors_of_norm(s.dim, k)) {
            if (!leq(x.n, np)) continue;
            BasisWord e;
            e.m = np - x.n;
            r.add({BasisWord::of(LGenerator::tilt({x.gamma, np})), e}, Rational(vec_binomial(np, np - x.n)));
        }
    return r;
}

} // namespace

UTensor delta_gl(const Setting& s, const BasisWord& v, const Rational& budget)
{
    require_L(s, "delta_gl");
    if (grade_u(v, s.alpha) > budget) throw BudgetError("budget " + to_string(budget) + " below grade of v");
    using Key = std::tuple<int, Rational, BasisWord, Rational>;
    static std::mutex mu;
    static std::map<Key, UTensor> cache;
    Key key{s.dim, s.alpha, v, budget};
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    // Multiplicative over *: T(E_m F_J) is the *-product of its letters.
    UTensor r;
    r.add({BasisWord::unit(), BasisWord::unit()}, 1);
    for (const auto& g : v.letters()) r = star(r, delta_generator(s, g, budget));
    std::lock_guard lock(mu);
    cache.emplace(std::move(key), r);
    return r;
}

UTensor delta_gl(const Setting& s, const UElement& v, const Rational& budget)
{
    UTensor r;
    for (const auto& [w, c] : v) r.add_scaled(delta_gl(s, w, budget), c);
    return r;
}

CoactionTerms comodule_delta(const Setting& s, const MultiIndex& a, const Rational& budget)
{
    require_L(s, "comodule_delta");
    CoactionTerms r;
    for (const auto& pre : preimages(s, a, budget)) r.add({pre.u, pre.source}, pre.coeff);
    return r;
}

} // namespace mipl

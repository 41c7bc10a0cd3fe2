#include "mipl/group.hpp"
#include "mipl/error.hpp"

#include <mutex>
#include <set>

namespace mipl {

struct Functional::State {
    Oracle f;
    std::mutex mu;
    std::map<BasisWord, Rational> memo;
};

Functional::Functional(Oracle f, bool is_character) : state_(std::make_shared<State>()), is_character_(is_character)
{
    state_->f = std::move(f);
}

Rational Functional::operator()(const BasisWord& w) const
{
    {
        std::lock_guard lock(state_->mu);
        auto it = state_->memo.find(w);
        if (it != state_->memo.end()) return it->second;
    }
    Rational v = state_->f(w);
    std::lock_guard lock(state_->mu);
    state_->memo.emplace(w, v);
    return v;
}

void Character::set(const LGenerator& g, const Rational& value)
{
    if (!in_space(g, setting_)) throw ConfigError("character value on a generator outside the space");
    if (value == 0)
        values_.erase(g);
    else
        values_[g] = value;
}

Rational Character::value(const LGenerator& g) const
{
    auto it = values_.find(g);
    return it == values_.end() ? Rational(0) : it->second;
}

Rational char_eval(const Character& f, const BasisWord& w)
{
    Rational r = 1;
    for (const auto& g : w.letters()) {
        r *= f.value(g);
        if (r == 0) break;
    }
    return r;
}

Functional Character::functional() const
{
    Character copy = *this;
    return Functional([copy](const BasisWord& w) { return char_eval(copy, w); }, true);
}

Functional unit_functional()
{
    return Functional([](const BasisWord& w) { return Rational(w.is_unit() ? 1 : 0); }, true);
}

Functional convolve(const Setting& s, const Functional& f1, const Functional& f2, const Rational& budget)
{
    return Functional([s, f1, f2, budget](const BasisWord& w) {
        Rational r = 0;
        for (const auto& [pair, c] : delta_gl(s, w, budget)) {
            Rational a = f1(pair.first);
            if (a == 0) continue;
            r += c * a * f2(pair.second);
        }
        return r;
    });
}

Rational convolve_eval(const Setting& s, const Functional& f1, const Functional& f2, const UElement& v,
                       const Rational& budget)
{
    Functional h = convolve(s, f1, f2, budget);
    Rational r = 0;
    for (const auto& [w, c] : v) r += c * h(w);
    return r;
}

namespace {

struct InverseEval {
    InverseEval(Setting s_, Functional f_, Rational b_) : s(std::move(s_)), f(std::move(f_)), budget(std::move(b_)) {}

    Setting s;
    Functional f;
    Rational budget;
    std::mutex mu;
    std::map<BasisWord, Rational> memo;

    Rational operator()(const BasisWord& w)
    {
        if (w.is_unit()) return 1;
        {
            std::lock_guard lock(mu);
            auto it = memo.find(w);
            if (it != memo.end()) return it->second;
        }
        // (g ▷̄ f)(T w) = g(T w) + sum over the remaining pairs, which carry
        // strictly smaller grades on the left.
        Rational acc = 0;
        for (const auto& [pair, c] : delta_gl(s, w, budget)) {
            if (pair.first == w && pair.second.is_unit()) continue;
            Rational b = f(pair.second);
            if (b == 0) continue;
            acc += c * (*this)(pair.first) * b;
        }
        Rational v = -acc;
        std::lock_guard lock(mu);
        memo.emplace(w, v);
        return v;
    }
};

Rational f0_pairing(const Setting& s, const Functional& f, const MultiIndex& b)
{
    // <f^(0), z^b>: z_(m) comes from f(T E_m), z^b with b in M^- from f(D{b|0}).
    if (b.entries().size() == 1 && !b.entries()[0].first.is_pure() && b.entries()[0].second == 1) {
        BasisWord e;
        e.m = b.entries()[0].first.n;
        return f(e);
    }
    if (bar_norm(b).in_M_minus && homogeneity(b, s.alpha) > 0) return f(BasisWord::of(LGenerator::tilt({b, Vec{}})));
    return 0;
}

} // namespace

Functional group_inverse(const Setting& s, const Functional& f, const Rational& budget)
{
    if (f(BasisWord::unit()) != 1) throw ConfigError("group_inverse needs f(1) = 1");
    auto ev = std::make_shared<InverseEval>(s, f, budget);
    return Functional([ev](const BasisWord& w) { return (*ev)(w); });
}

TruncatedSeries char_act(const Setting& s, const Functional& f, const TruncatedSeries& series)
{
    TruncatedSeries out(series.dim(), series.alpha(), series.cutoff());
    std::set<int> levels;
    for (const auto& [g, c] : series.terms()) levels.insert(bar_norm(g).value);
    for (int level : levels)
        for (const auto& target : enumerate_level(s.dim, s.alpha, series.cutoff(), level)) {
            Rational acc = 0;
            for (const auto& pre : preimages(s, target, homogeneity(target, s.alpha))) {
                Rational sc = series.terms().coeff(pre.source);
                if (sc == 0) continue;
                Rational fu = f(pre.u);
                if (fu != 0) acc += sc * pre.coeff * fu;
            }
            out.add(target, acc);
        }
    return out;
}

TruncatedSeries f_hash_n(const Setting& s, const Functional& f, const Vec& n, const Rational& cutoff)
{
    TruncatedSeries out(s.dim, s.alpha, cutoff);
    int base = norm1(n);
    for (int k = 1; base + k <= cutoff; ++k)
        for (const Vec& m : vectors_of_norm(s.dim, k)) {
            BasisWord e;
            e.m = m;
            Rational v = f(e);
            if (v != 0)
                out.add(MultiIndex::unit(IndexSymbol::spatial(n + m)), v * Rational(vec_binomial(n + m, n)));
        }
    for (const auto& b : enumerate_level(s.dim, s.alpha, cutoff, -1)) {
        if (!bar_norm(b).in_M_minus || homogeneity(b, s.alpha) <= base) continue;
        out.add(b, f(BasisWord::of(LGenerator::tilt({b, n}))));
    }
    return out;
}

TruncatedSeries char_act_gen_closed(const Character& f, const IndexSymbol& gen, const Rational& cutoff)
{
    const Setting& s = f.setting();
    Functional fn = f.functional();
    if (!gen.is_pure()) {
        TruncatedSeries out(s.dim, s.alpha, cutoff, monomial(MultiIndex::unit(gen)));
        out += f_hash_n(s, fn, gen.n, cutoff);
        return out;
    }
    TruncatedSeries f0 = f_hash_n(s, fn, Vec{}, cutoff);
    TruncatedSeries power(s.dim, s.alpha, cutoff, poly_one());
    TruncatedSeries out(s.dim, s.alpha, cutoff);
    for (int l = 0; !power.terms().is_zero(); ++l) {
        TruncatedSeries zk(s.dim, s.alpha, cutoff, monomial(MultiIndex::unit(IndexSymbol::pure(gen.k + l))));
        TruncatedSeries term = series_mul(power, zk);
        term *= Rational(binomial(gen.k + l, gen.k));
        out += term;
        power = series_mul(power, f0);
    }
    return out;
}

TruncatedSeries lambda_act(const Setting& s, const Functional& f, const TruncatedSeries& series)
{
    TruncatedSeries out = char_act(s, f, series);
    Rational c = series.terms().coeff(MultiIndex{});
    if (c != 0) {
        TruncatedSeries f0 = f_hash_n(s, f, Vec{}, series.cutoff());
        f0 *= c;
        out += f0;
    }
    return out;
}

Polynomial gamma_act(const Setting& s, const Functional& f, const Polynomial& p, const Rational& budget)
{
    if (max_homogeneity(p, s.alpha) > budget) throw BudgetError("budget below the homogeneity of the input");
    Polynomial out;
    for (const auto& [b, c] : p) {
        for (const auto& pre : preimages(s, b, budget)) {
            Rational fu = f(pre.u);
            if (fu != 0) out.add(pre.source, c * pre.coeff * fu);
        }
        out.add(MultiIndex{}, c * f0_pairing(s, f, b));
    }
    return out;
}

} // namespace mipl

#pragma once

#include "mipl/rational.hpp"

#include <map>
#include <utility>

namespace mipl {

// Finitely supported map Key -> nonzero rational; the vector space spanned by Key.
template <class Key>
class Linear {
public:
    using map_type = std::map<Key, Rational>;

    Linear() = default;
    explicit Linear(const Key& k, const Rational& c = 1) { add(k, c); }

    void add(const Key& k, const Rational& c)
    {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const map_type& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Linear& operator+=(const Linear& o)
    {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    Linear& operator-=(const Linear& o)
    {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    Linear& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& kv : terms_) kv.second *= s;
        }
        return *this;
    }
    void add_scaled(const Linear& o, const Rational& s)
    {
        if (s == 0) return;
        for (const auto& [k, c] : o.terms_) add(k, c * s);
    }

    friend Linear operator+(Linear a, const Linear& b) { return a += b; }
    friend Linear operator-(Linear a, const Linear& b) { return a -= b; }
    friend Linear operator*(Linear a, const Rational& s) { return a *= s; }
    friend Linear operator*(const Rational& s, Linear a) { return a *= s; }
    friend bool operator==(const Linear& a, const Linear& b) { return a.terms_ == b.terms_; }

private:
    map_type terms_;
};

} // namespace mipl

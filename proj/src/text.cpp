#include "mipl/text.hpp"
#include "mipl/error.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace mipl {

std::string format(const Vec& n, int dim)
{
    std::string s = "(";
    for (int i = 0; i < dim; ++i) {
        if (i) s += ",";
        s += std::to_string(n[i]);
    }
    return s + ")";
}

namespace {

std::string entries(const MultiIndex& g, int dim)
{
    std::string s;
    for (const auto& [sym, c] : g.entries()) {
        if (!s.empty()) s += ", ";
        s += sym.is_pure() ? std::to_string(sym.k) : format(sym.n, dim);
        s += ":" + std::to_string(c);
    }
    return s;
}

template <class Key, class F>
std::string format_sum(const Linear<Key>& x, F&& atom, const Key* unit)
{
    if (x.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : x) {
        Rational a = abs(c);
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        if (unit && k == *unit)
            s += to_string(a);
        else if (a == 1)
            s += atom(k);
        else
            s += to_string(a) + "*" + atom(k);
    }
    return s;
}

} // namespace

std::string format(const MultiIndex& g, int dim)
{
    return "{" + entries(g, dim) + "}";
}

std::string format(const Polynomial& p, int dim)
{
    MultiIndex one;
    return format_sum(p, [&](const MultiIndex& g) { return "z" + format(g, dim); }, &one);
}

std::string format(const LGenerator& g, int dim)
{
    if (g.is_shift()) return "P(" + std::to_string(g.index()) + ")";
    return "D{" + entries(g.letter().gamma, dim) + "|" + format(g.letter().n, dim) + "}";
}

std::string format(const LElement& a, int dim)
{
    return format_sum(a, [&](const LGenerator& g) { return format(g, dim); }, static_cast<const LGenerator*>(nullptr));
}

std::string format(const Word& w, int dim)
{
    if (w.empty()) return "1";
    std::string s;
    for (const auto& g : w) {
        if (!s.empty()) s += " . ";
        s += format(g, dim);
    }
    return s;
}

std::string format(const BasisWord& w, int dim)
{
    if (w.is_unit()) return "1";
    std::string s;
    if (!is_zero(w.m)) s += "E" + format(w.m, dim);
    if (!w.J.empty()) {
        s += "F[";
        bool first = true;
        for (const auto& [x, c] : w.J) {
            if (!first) s += ", ";
            first = false;
            s += "(" + format(x.gamma, dim) + "|" + format(x.n, dim) + "):" + std::to_string(c);
        }
        s += "]";
    }
    return s;
}

std::string format(const UElement& u, int dim)
{
    BasisWord one;
    return format_sum(u, [&](const BasisWord& w) { return format(w, dim); }, &one);
}

namespace {

class Parser {
public:
    Parser(std::string_view src, int dim) : src_(src), dim_(dim) {}

    std::pair<int, int> location() const
    {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        auto [line, col] = location();
        throw ParseError(msg, line, col);
    }

    [[noreturn]] void reject(const std::string& what, std::size_t at, Space space)
    {
        pos_ = at;
        auto [line, col] = location();
        throw ConfigError(what + " not in space " + space_name(space) + " at " + std::to_string(line) + ":" +
                          std::to_string(col));
    }

    void skip()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool at_end()
    {
        skip();
        return pos_ >= src_.size();
    }
    char peek()
    {
        skip();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    void finish()
    {
        if (!at_end()) fail("unexpected trailing input");
    }
    long integer(bool allow_sign)
    {
        skip();
        std::size_t start = pos_;
        if (allow_sign && pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected integer");
        }
        if (pos_ - digits > 9) {
            pos_ = start;
            fail("integer too large");
        }
        return std::stol(std::string(src_.substr(start, pos_ - start)));
    }

    Rational rational()
    {
        skip();
        std::size_t start = pos_;
        if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected rational");
        }
        std::string num(src_.substr(start, pos_ - start));
        if (num[0] == '+') num.erase(0, 1);
        Rational q(mpz_class(num), 1);
        if (pos_ < src_.size() && src_[pos_] == '/') {
            ++pos_;
            std::size_t d0 = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (pos_ == d0) fail("expected denominator");
            mpz_class den(std::string(src_.substr(d0, pos_ - d0)));
            if (den == 0) {
                pos_ = d0;
                fail("zero denominator");
            }
            q = Rational(mpz_class(num), den);
            q.canonicalize();
        }
        return q;
    }

    Vec vec()
    {
        expect('(');
        Vec v{};
        int i = 0;
        std::size_t start = pos_;
        do {
            long x = integer(false);
            if (i < kMaxDim) v[i] = static_cast<int>(x);
            ++i;
        } while (accept(','));
        expect(')');
        if (i != dim_) {
            pos_ = start;
            fail("vector of length " + std::to_string(i) + " but dim is " + std::to_string(dim_));
        }
        return v;
    }

    // entries := (symbol ':' count (',' symbol ':' count)*)?, stops before `close`.
    MultiIndex entries(char close)
    {
        MultiIndex g;
        if (peek() == close) return g;
        do {
            IndexSymbol sym;
            if (peek() == '(') {
                Vec n = vec();
                if (is_zero(n)) fail("spatial symbol must be nonzero");
                sym = IndexSymbol::spatial(n);
            } else {
                sym = IndexSymbol::pure(static_cast<int>(integer(false)));
            }
            expect(':');
            long c = integer(false);
            if (c <= 0) fail("count must be positive");
            if (g.count(sym) != 0) fail("repeated index symbol");
            g.add(sym, static_cast<int>(c));
        } while (accept(','));
        return g;
    }

    MultiIndex multiindex()
    {
        expect('{');
        MultiIndex g = entries('}');
        expect('}');
        return g;
    }

    // Generator letter without validation against the space.
    std::pair<LGenerator, std::size_t> generator_raw()
    {
        skip();
        std::size_t start = pos_;
        if (accept('P')) {
            expect('(');
            long i = integer(false);
            expect(')');
            if (i < 1 || i > dim_) {
                pos_ = start;
                fail("P index out of range");
            }
            return {LGenerator::shift(static_cast<int>(i)), start};
        }
        if (accept('D')) {
            expect('{');
            MultiIndex g;
            if (peek() == '{') {
                g = multiindex();
            } else {
                g = entries('|');
            }
            expect('|');
            Vec n = vec();
            expect('}');
            return {LGenerator::tilt({g, n}), start};
        }
        fail("expected generator P(i) or D{...|(...)}");
    }

    LGenerator generator(const Setting& s)
    {
        auto [g, start] = generator_raw();
        if (!in_space(g, s)) reject("generator " + format(g, dim_), start, s.space);
        return g;
    }

    Word word(const Setting& s)
    {
        Word w;
        w.push_back(generator(s));
        while (accept('.')) w.push_back(generator(s));
        return w;
    }

    BasisWord basis_word(const Setting& s)
    {
        BasisWord w;
        bool any = false;
        if (accept('E')) {
            w.m = vec();
            any = true;
        }
        if (accept('F')) {
            any = true;
            expect('[');
            if (peek() != ']') {
                do {
                    std::size_t start = pos_;
                    expect('(');
                    MultiIndex g = peek() == '{' ? multiindex() : entries('|');
                    expect('|');
                    Vec n = vec();
                    expect(')');
                    expect(':');
                    long c = integer(false);
                    if (c <= 0) fail("count must be positive");
                    DLetter x{g, n};
                    if (!in_space(x, s)) reject("letter " + format(LGenerator::tilt(x), dim_), start, s.space);
                    if (letter_count(w.J, x) != 0) fail("repeated letter");
                    add_letter(w.J, x, static_cast<int>(c));
                } while (accept(','));
            }
            expect(']');
        }
        if (!any) fail("expected basis literal E(...)F[...]");
        return w;
    }

    // term := rat | rat '*' atom | atom, terms joined by '+' or '-'.
    template <class Atom, class Acc>
    void sum(Atom&& atom, Acc& acc, bool atom_only)
    {
        Rational sign = 1;
        for (;;) {
            if (accept('-'))
                sign = -sign;
            else
                accept('+');
            Rational c = sign;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c *= rational();
                // A bare 0 is still the zero element when scalars are not allowed.
                if (accept('*'))
                    atom(c);
                else if (!atom_only)
                    acc.add_scalar(c);
                else if (c != 0)
                    fail("expected '*' after coefficient");
            } else {
                atom(c);
            }
            if (accept('+'))
                sign = 1;
            else if (accept('-'))
                sign = -1;
            else
                break;
        }
    }

    std::size_t pos_ = 0;

private:
    std::string_view src_;
    int dim_;
};

template <class Key>
struct Acc {
    Linear<Key>& target;
    Key unit;
    void add_scalar(const Rational& c) { target.add(unit, c); }
};

struct NoScalar {
    void add_scalar(const Rational&) {}
};

} // namespace

Rational parse_rational(std::string_view src)
{
    Parser p(src, 1);
    Rational q = p.rational();
    p.finish();
    return q;
}

MultiIndex parse_multiindex(std::string_view src, int dim)
{
    Parser p(src, dim);
    MultiIndex g = p.multiindex();
    p.finish();
    return g;
}

Polynomial parse_polynomial(std::string_view src, int dim)
{
    Parser p(src, dim);
    Polynomial r;
    Acc<MultiIndex> acc{r, MultiIndex{}};
    p.sum(
        [&](const Rational& c) {
            p.expect('z');
            r.add(p.multiindex(), c);
        },
        acc, false);
    p.finish();
    return r;
}

LGenerator parse_generator(std::string_view src, const Setting& s)
{
    Parser p(src, s.dim);
    LGenerator g = p.generator(s);
    p.finish();
    return g;
}

LElement parse_lelement(std::string_view src, const Setting& s)
{
    Parser p(src, s.dim);
    LElement r;
    NoScalar acc;
    p.sum([&](const Rational& c) { r.add(p.generator(s), c); }, acc, true);
    p.finish();
    return r;
}

Word parse_word(std::string_view src, const Setting& s)
{
    Parser p(src, s.dim);
    Word w = p.word(s);
    p.finish();
    return w;
}

BasisWord parse_basis_word(std::string_view src, const Setting& s)
{
    Parser p(src, s.dim);
    if (p.peek() == '1') {
        p.rational();
        p.finish();
        return BasisWord::unit();
    }
    BasisWord w = p.basis_word(s);
    p.finish();
    return w;
}

UElement parse_uelement(std::string_view src, const Setting& s)
{
    Parser p(src, s.dim);
    UElement r;
    Acc<BasisWord> acc{r, BasisWord::unit()};
    p.sum(
        [&](const Rational& c) {
            char h = p.peek();
            if (h == 'E' || h == 'F')
                r.add(p.basis_word(s), c);
            else if (p.accept('1'))
                r.add(BasisWord::unit(), c);
            else
                r.add_scaled(normal_form(p.word(s)), c);
        },
        acc, false);
    p.finish();
    return r;
}

Character parse_character(std::string_view json_text, const Setting& s)
{
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("character file: ") + e.what(), 1, static_cast<int>(e.byte));
    }
    if (!doc.is_object()) throw ParseError("character file: top level must be an object", 1, 1);
    auto text_of = [](const json& v, const std::string& key) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_integer()) return std::to_string(v.get<long>());
        throw ParseError("character file: value for key '" + key + "' must be a rational string", 1, 1);
    };
    if (doc.contains("dim") && doc["dim"] != s.dim) throw ConfigError("character file dim differs from configuration");
    if (doc.contains("alpha") && parse_rational(text_of(doc["alpha"], "alpha")) != s.alpha)
        throw ConfigError("character file alpha differs from configuration");
    if (doc.contains("space") && doc["space"] != space_name(s.space))
        throw ConfigError("character file space differs from configuration");
    Character f(s);
    if (!doc.contains("values")) return f;
    if (!doc["values"].is_object()) throw ParseError("character file: 'values' must be an object", 1, 1);
    for (const auto& [key, val] : doc["values"].items()) {
        try {
            f.set(parse_generator(key, s), parse_rational(text_of(val, key)));
        } catch (const ParseError& e) {
            throw ParseError("character file key '" + key + "': " + e.what(), 1, 1);
        } catch (const ConfigError& e) {
            throw ConfigError("character file key '" + key + "': " + e.what());
        }
    }
    return f;
}

} // namespace mipl

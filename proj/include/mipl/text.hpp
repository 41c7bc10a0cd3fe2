#pragma once

#include "mipl/group.hpp"

#include <string>
#include <string_view>

namespace mipl {

// Printing. All forms are accepted back by the parsers below.
std::string format(const Vec& n, int dim);
std::string format(const MultiIndex& g, int dim);
std::string format(const Polynomial& p, int dim);
std::string format(const LGenerator& g, int dim);
std::string format(const LElement& a, int dim);
std::string format(const Word& w, int dim);
std::string format(const BasisWord& w, int dim);
std::string format(const UElement& u, int dim);

// Parsing; syntax errors throw ParseError with line/column, wrong vector
// lengths throw ParseError, generators outside the space throw ConfigError.
Rational parse_rational(std::string_view src);
MultiIndex parse_multiindex(std::string_view src, int dim);
Polynomial parse_polynomial(std::string_view src, int dim);
LGenerator parse_generator(std::string_view src, const Setting& s);
LElement parse_lelement(std::string_view src, const Setting& s);
Word parse_word(std::string_view src, const Setting& s);
BasisWord parse_basis_word(std::string_view src, const Setting& s);
// Sum of [rat '*'] atoms, an atom being a basis literal or a word.
UElement parse_uelement(std::string_view src, const Setting& s);

// {"alpha":"2/5","dim":1,"space":"L","values":{"P(1)":"1/3", ...}}. The file's
// dim/alpha/space, when present, must agree with `s`.
Character parse_character(std::string_view json_text, const Setting& s);

} // namespace mipl

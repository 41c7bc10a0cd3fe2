#pragma once

#include "mipl/envelope.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mipl {

// P(1..d) and every D{g|n} of the space with |g| <= max_hom and pure
// indices <= max_pure. L-generators of a fixed grade are infinite in number,
// so random tests draw from such a bounded pool.
std::vector<LGenerator> generator_pool(const Setting& s, const Rational& max_hom = 2, int max_pure = 4);

// Random word of 1..max_letters letters from the pool with total grade <= max_grade.
Word random_word(std::mt19937_64& rng, const std::vector<LGenerator>& pool, const Rational& alpha,
                 int max_letters, const Rational& max_grade);
BasisWord random_basis_word(std::mt19937_64& rng, const std::vector<LGenerator>& pool, const Rational& alpha,
                            int max_letters, const Rational& max_grade);

// Every PBW basis word over the pool with grade <= max_grade (the unit included).
std::vector<BasisWord> basis_words_up_to(const std::vector<LGenerator>& pool, const Rational& alpha,
                                         const Rational& max_grade);

struct AxiomCount {
    std::string name;
    int passed = 0;
    int total = 0;
};

// Post-Lie axioms, Jacobi for both brackets and closure in the space, on
// random generator triples.
std::vector<AxiomCount> check_postlie_axioms(const Setting& s, int trials, std::uint64_t seed);

} // namespace mipl

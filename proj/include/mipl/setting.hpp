#pragma once

#include "mipl/rational.hpp"

namespace mipl {

enum class Space { L, L0 };

// Global parameters shared by every module: spatial dimension d, the
// homogeneity weight alpha of pure variables, and the generator space.
struct Setting {
    int dim = 1;
    Rational alpha{2, 5};
    Space space = Space::L;

    // Throws ConfigError unless 1 <= dim <= kMaxDim and 0 < alpha < 1.
    void validate() const;
};

const char* space_name(Space s);

} // namespace mipl

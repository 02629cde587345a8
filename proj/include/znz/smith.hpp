#pragma once

#include <optional>

#include "znz/matrix.hpp"

namespace znz {

/// Smith normal form U·A·V = D with unimodular U, V and D diagonal,
/// nonnegative, each diagonal entry dividing the next.
struct SmithDecomposition {
    IntMatrix u, d, v;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Some integer solution b of A·b = c, or nullopt when none exists.
/// Free variables are set to zero, making the returned solution
/// canonical for a fixed decomposition.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& c);

/// Same, reusing a precomputed decomposition of A.
std::optional<IntVector> solve_integer(const SmithDecomposition& s, const IntVector& c);

}  // namespace znz

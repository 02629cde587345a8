#pragma once

#include "znz/matrix.hpp"
#include "znz/polynomial.hpp"

namespace znz {

/// The monic integer polynomial m of least degree with m(A)·x = 0.
/// Degree d of the result equals the dimension of the Krylov space of
/// x, i.e. {x, Ax, ..., A^{d-1}x} is a basis of span{A^i x}.
IntPolynomial minimal_polynomial_rel(const IntMatrix& a, const IntVector& x);

/// Minimal polynomial of A itself: lcm of the relative minimal
/// polynomials over the standard basis.
IntPolynomial minimal_polynomial(const IntMatrix& a);

/// Matrix whose columns are x, Ax, ..., A^{d-1}x.
IntMatrix krylov_matrix(const IntMatrix& a, const IntVector& x, std::size_t d);

}  // namespace znz

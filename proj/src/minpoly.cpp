#include "znz/minpoly.hpp"

namespace znz {

IntMatrix krylov_matrix(const IntMatrix& a, const IntVector& x, std::size_t d) {
    IntMatrix k(x.size(), d);
    IntVector v = x;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < x.size(); ++i) k(i, j) = v[i];
        if (j + 1 < d) v = a.apply(v);
    }
    return k;
}

IntPolynomial minimal_polynomial_rel(const IntMatrix& a, const IntVector& x) {
    if (!a.is_square()) throw UsageError("minimal_polynomial_rel requires a square matrix");
    if (a.rows() != x.size()) throw UsageError("minimal_polynomial_rel dimension mismatch");
    if (x.is_zero()) throw DomainError("minimal_polynomial_rel is undefined for the zero vector");
    const std::size_t n = a.rows();
    std::vector<IntVector> krylov{x};
    IntVector v = x;
    for (std::size_t d = 1; d <= n; ++d) {
        v = a.apply(v);  // v = A^d x
        IntMatrix k(n, d);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < n; ++i) k(i, j) = krylov[j][i];
        if (auto c = solve_rational(k, v)) {
            // A^d x = sum c_i A^i x  =>  m = z^d - sum c_i z^i
            std::vector<Rat> coeffs(d + 1, Rat(0));
            for (std::size_t i = 0; i < d; ++i) coeffs[i] = -(*c)[i];
            coeffs[d] = 1;
            // relative minimal polynomials of integer matrices are integral
            return RatPolynomial(std::move(coeffs)).to_int_checked();
        }
        krylov.push_back(v);
    }
    throw std::logic_error("Krylov chain exceeded the ambient dimension");
}

IntPolynomial minimal_polynomial(const IntMatrix& a) {
    if (!a.is_square()) throw UsageError("minimal_polynomial requires a square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return IntPolynomial::constant(1);
    IntPolynomial m = IntPolynomial::constant(1);
    for (std::size_t i = 0; i < n; ++i) {
        m = poly_lcm_monic(m, minimal_polynomial_rel(a, IntVector::unit(n, i)));
        if (m.degree() == static_cast<long>(n)) break;  // cannot grow further
    }
    return m;
}

}  // namespace znz

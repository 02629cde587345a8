#pragma once

#include "znz/group.hpp"
#include "znz/matrix.hpp"
#include "znz/polynomial.hpp"

namespace znz::testutil {

// the running example group Z^2 x| Z with phi = [[2,1],[1,1]]
inline IntMatrix fib_matrix() { return IntMatrix{{2, 1}, {1, 1}}; }
inline AbcGroup fib_group() { return AbcGroup(2, fib_matrix()); }

inline IntMatrix swap_matrix() { return IntMatrix{{0, 1}, {1, 0}}; }
inline IntMatrix rotation_matrix() { return IntMatrix{{0, -1}, {1, 0}}; }
inline IntMatrix shear_matrix() { return IntMatrix{{1, 1}, {0, 1}}; }

// companion matrix of a monic polynomial (acts on column vectors)
inline IntMatrix companion(const IntPolynomial& p) {
    if (!p.is_monic() || p.degree() < 1) throw UsageError("companion needs a monic polynomial");
    const std::size_t d = static_cast<std::size_t>(p.degree());
    IntMatrix m(d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) m(i + 1, i) = 1;
    for (std::size_t i = 0; i < d; ++i) m(i, d - 1) = -p.coeff(i);
    return m;
}

inline IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

// cofactor-expansion determinant: independent oracle for the Bareiss path
inline Int det_cofactor(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = a(r, c);
            }
        }
        Int term = a(0, j) * det_cofactor(minor);
        acc += (j % 2 == 0) ? term : Int(-term);
    }
    return acc;
}

inline IntVector vec(std::initializer_list<long> xs) {
    IntVector v(xs.size());
    std::size_t i = 0;
    for (long x : xs) v[i++] = x;
    return v;
}

inline GroupElement elem(std::initializer_list<long> w, long k) {
    return GroupElement{vec(w), Int(k)};
}

}  // namespace znz::testutil

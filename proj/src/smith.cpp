#include "znz/smith.hpp"

namespace znz {

namespace {

bool divides(const Int& d, const Int& x) {
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

// Gcd-driven row/column reduction with transform accumulation.  Every
// step is one of: swap, negation, adding a multiple of a row/column, or
// a 2x2 Bezout rotation (determinant 1), so U and V stay unimodular.
SmithDecomposition smith_normal_form(const IntMatrix& input) {
    const std::size_t m = input.rows(), n = input.cols();
    IntMatrix a = input;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < m; ++c) swap(u(i, c), u(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m; ++r) swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < n; ++r) swap(v(r, i), v(r, j));
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t c = 0; c < n; ++c) a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < m; ++c) u(i, c) = -u(i, c);
    };
    auto row_submul = [&](std::size_t i, std::size_t t, const Int& q) {
        for (std::size_t c = 0; c < n; ++c) a(i, c) -= q * a(t, c);
        for (std::size_t c = 0; c < m; ++c) u(i, c) -= q * u(t, c);
    };
    auto col_submul = [&](std::size_t j, std::size_t t, const Int& q) {
        for (std::size_t r = 0; r < m; ++r) a(r, j) -= q * a(r, t);
        for (std::size_t r = 0; r < n; ++r) v(r, j) -= q * v(r, t);
    };
    auto col_add = [&](std::size_t t, std::size_t j) {
        for (std::size_t r = 0; r < m; ++r) a(r, t) += a(r, j);
        for (std::size_t r = 0; r < n; ++r) v(r, t) += v(r, j);
    };
    // Rows t and i combined so that a(t,col) becomes gcd and a(i,col) zero.
    auto bezout_rows = [&](std::size_t t, std::size_t i, std::size_t col) {
        Int g, p, q;
        mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                   a(t, col).get_mpz_t(), a(i, col).get_mpz_t());
        Int ag = a(t, col) / g, bg = a(i, col) / g;
        for (std::size_t c = 0; c < n; ++c) {
            Int x = a(t, c), y = a(i, c);
            a(t, c) = p * x + q * y;
            a(i, c) = ag * y - bg * x;
        }
        for (std::size_t c = 0; c < m; ++c) {
            Int x = u(t, c), y = u(i, c);
            u(t, c) = p * x + q * y;
            u(i, c) = ag * y - bg * x;
        }
    };
    auto bezout_cols = [&](std::size_t t, std::size_t j, std::size_t row) {
        Int g, p, q;
        mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                   a(row, t).get_mpz_t(), a(row, j).get_mpz_t());
        Int ag = a(row, t) / g, bg = a(row, j) / g;
        for (std::size_t r = 0; r < m; ++r) {
            Int x = a(r, t), y = a(r, j);
            a(r, t) = p * x + q * y;
            a(r, j) = ag * y - bg * x;
        }
        for (std::size_t r = 0; r < n; ++r) {
            Int x = v(r, t), y = v(r, j);
            v(r, t) = p * x + q * y;
            v(r, j) = ag * y - bg * x;
        }
    };

    const std::size_t rank_bound = std::min(m, n);
    for (std::size_t t = 0; t < rank_bound; ++t) {
        // pivot: nonzero entry of minimal absolute value in the submatrix
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < m; ++i) {
            for (std::size_t j = t; j < n; ++j) {
                if (a(i, j) == 0) continue;
                Int mag = abs(a(i, j));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found) break;  // submatrix is zero; trailing diagonal stays 0
        swap_rows(t, pi);
        swap_cols(t, pj);

        for (;;) {
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (a(i, t) == 0) continue;
                    if (divides(a(t, t), a(i, t))) {
                        row_submul(i, t, Int(a(i, t) / a(t, t)));
                    } else {
                        bezout_rows(t, i, t);
                    }
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (a(t, j) == 0) continue;
                    if (divides(a(t, t), a(t, j))) {
                        col_submul(j, t, Int(a(t, j) / a(t, t)));
                    } else {
                        bezout_cols(t, j, t);
                    }
                }
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (a(i, t) != 0) dirty = true;  // a column Bezout refilled it
                }
            }
            // divisibility chain: pivot must divide the whole submatrix
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i) {
                for (std::size_t j = t + 1; j < n && fixed; ++j) {
                    if (!divides(a(t, t), a(i, j))) {
                        col_add(t, j);  // pulls the offender into column t
                        fixed = false;
                    }
                }
            }
            if (fixed) break;
        }
        if (a(t, t) < 0) negate_row(t);
    }

    return SmithDecomposition{std::move(u), std::move(a), std::move(v)};
}

std::optional<IntVector> solve_integer(const SmithDecomposition& s, const IntVector& c) {
    const std::size_t m = s.d.rows(), n = s.d.cols();
    if (c.size() != m) throw UsageError("solve_integer dimension mismatch");
    IntVector uc = s.u.apply(c);
    IntVector y(n);
    for (std::size_t i = 0; i < m; ++i) {
        if (i < n && s.d(i, i) != 0) {
            if (!divides(s.d(i, i), uc[i])) return std::nullopt;
            y[i] = uc[i] / s.d(i, i);
        } else if (uc[i] != 0) {
            return std::nullopt;  // zero row with nonzero right-hand side
        }
    }
    return s.v.apply(y);
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& c) {
    if (a.rows() != c.size()) throw UsageError("solve_integer dimension mismatch");
    return solve_integer(smith_normal_form(a), c);
}

}  // namespace znz

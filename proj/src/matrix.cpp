#include "znz/matrix.hpp"

#include <utility>

namespace znz {

IntVector IntVector::unit(std::size_t n, std::size_t i) {
    if (i >= n) throw UsageError("unit vector index out of range");
    IntVector e(n);
    e[i] = 1;
    return e;
}

IntVector IntVector::operator+(const IntVector& o) const {
    if (size() != o.size()) throw UsageError("vector dimension mismatch in +");
    IntVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = v_[i] + o.v_[i];
    return r;
}

IntVector IntVector::operator-(const IntVector& o) const {
    if (size() != o.size()) throw UsageError("vector dimension mismatch in -");
    IntVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = v_[i] - o.v_[i];
    return r;
}

IntVector IntVector::operator-() const {
    IntVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = -v_[i];
    return r;
}

IntVector IntVector::operator*(const Int& s) const {
    IntVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = v_[i] * s;
    return r;
}

bool IntVector::is_zero() const {
    for (const Int& x : v_)
        if (x != 0) return false;
    return true;
}

Int IntVector::l1_norm() const {
    Int s = 0;
    for (const Int& x : v_) s += abs(x);
    return s;
}

Int IntVector::linf_norm() const {
    Int m = 0;
    for (const Int& x : v_) {
        Int a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_) throw UsageError("ragged matrix initializer");
        for (const Int& x : row) a_.push_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix dimension mismatch in +");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix dimension mismatch in -");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

IntVector IntMatrix::apply(const IntVector& v) const {
    if (v.size() != cols_) throw UsageError("matrix-vector dimension mismatch");
    IntVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
        r[i] = std::move(s);
    }
    return r;
}

bool IntMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw UsageError("matrix dimension mismatch in mat_mul");
    IntMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

IntMatrix mat_pow(const IntMatrix& a, const Int& k) {
    if (!a.is_square()) throw UsageError("mat_pow requires a square matrix");
    IntMatrix base = a;
    Int e = k;
    if (e < 0) {
        base = inverse_unimodular(a);  // throws DomainError unless |det| = 1
        e = -e;
    }
    IntMatrix result = IntMatrix::identity(a.rows());
    // square-and-multiply over the bits of e
    const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        result = mat_mul(result, result);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mat_mul(result, base);
    }
    return result;
}

Int determinant(const IntMatrix& a) {
    if (!a.is_square()) throw UsageError("determinant requires a square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix b = a;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && b(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) swap(b(k, j), b(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = b(i, j) * b(k, k) - b(i, k) * b(k, j);
                mpz_divexact(b(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            b(i, k) = 0;
        }
        prev = b(k, k);
    }
    return sign == 1 ? b(n - 1, n - 1) : Int(-b(n - 1, n - 1));
}

namespace {

// Gauss-Jordan over Q on [A | Id]; returns A^{-1} entries or nullopt if singular.
std::optional<std::vector<Rat>> rational_inverse(const IntMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(a(i, j));
        m[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        Rat inv = 1 / m[col][col];
        for (std::size_t j = col; j < 2 * n; ++j) m[col][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    std::vector<Rat> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.push_back(m[i][n + j]);
    return out;
}

}  // namespace

IntMatrix inverse_unimodular(const IntMatrix& a) {
    if (!a.is_square()) throw UsageError("inverse_unimodular requires a square matrix");
    Int det = determinant(a);
    if (det != 1 && det != -1) {
        throw DomainError("matrix is not unimodular: determinant is " + to_string(det));
    }
    auto inv = rational_inverse(a);
    // |det| = 1, so the inverse exists and is integral
    const std::size_t n = a.rows();
    IntMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& q = (*inv)[i * n + j];
            if (!is_integral(q)) throw std::logic_error("unimodular inverse not integral");
            r(i, j) = q.get_num();
        }
    }
    return r;
}

std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a, const IntVector& b) {
    if (a.rows() != b.size()) throw UsageError("solve_rational dimension mismatch");
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::vector<Rat>> w(m, std::vector<Rat>(n + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(a(i, j));
        w[i][n] = Rat(b[i]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && w[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(w[piv], w[row]);
        Rat inv = 1 / w[row][col];
        for (std::size_t j = col; j <= n; ++j) w[row][j] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || w[i][col] == 0) continue;
            Rat f = w[i][col];
            for (std::size_t j = col; j <= n; ++j) w[i][j] -= f * w[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i) {
        if (w[i][n] != 0) return std::nullopt;  // 0 = nonzero: inconsistent
    }
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = w[r][n];
    return x;
}

}  // namespace znz

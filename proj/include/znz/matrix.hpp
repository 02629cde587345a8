#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "znz/error.hpp"
#include "znz/integer.hpp"

namespace znz {

/// Dense vector of unbounded integers.
class IntVector {
public:
    IntVector() = default;
    explicit IntVector(std::size_t n) : v_(n, Int(0)) {}
    IntVector(std::initializer_list<Int> init) : v_(init) {}
    explicit IntVector(std::vector<Int> entries) : v_(std::move(entries)) {}

    static IntVector unit(std::size_t n, std::size_t i);

    std::size_t size() const { return v_.size(); }
    Int& operator[](std::size_t i) { return v_[i]; }
    const Int& operator[](std::size_t i) const { return v_[i]; }

    bool operator==(const IntVector& o) const { return v_ == o.v_; }

    IntVector operator+(const IntVector& o) const;
    IntVector operator-(const IntVector& o) const;
    IntVector operator-() const;
    IntVector operator*(const Int& s) const;

    bool is_zero() const;
    Int l1_norm() const;
    Int linf_norm() const;

    const std::vector<Int>& entries() const { return v_; }

private:
    std::vector<Int> v_;
};

/// Dense matrix of unbounded integers, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> init);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;

    /// Matrix-vector product A·v.
    IntVector apply(const IntVector& v) const;

    bool is_identity() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// Exact A^k by binary exponentiation; A^0 = Id.  Negative k requires
/// |det A| = 1.
IntMatrix mat_pow(const IntMatrix& a, const Int& k);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& a);

/// Integer inverse of a matrix with |det| = 1.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// Some rational solution of A·x = b with free variables set to zero,
/// or nullopt when the system is inconsistent.  A may be rectangular.
std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a, const IntVector& b);

}  // namespace znz

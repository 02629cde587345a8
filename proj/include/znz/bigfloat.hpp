#pragma once

#include <mpfr.h>

#include <vector>

#include "znz/integer.hpp"
#include "znz/polynomial.hpp"

namespace znz {

/// Minimal RAII wrapper over an mpfr_t at a fixed working precision.
/// Only the operations the orbit solver's candidate stage needs.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec) : prec_(prec) { mpfr_init2(f_, prec); mpfr_set_zero(f_, 1); }
    BigFloat(const BigFloat& o) : prec_(o.prec_) { mpfr_init2(f_, prec_); mpfr_set(f_, o.f_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) { mpfr_init2(f_, prec_); mpfr_swap(f_, o.f_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) mpfr_set(f_, o.f_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(f_, o.f_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(f_); }

    static BigFloat from(const Int& v, mpfr_prec_t prec);
    static BigFloat from(const Rat& v, mpfr_prec_t prec);
    static BigFloat from(double v, mpfr_prec_t prec);
    static BigFloat pi(mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }
    double to_double() const { return mpfr_get_d(f_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(f_) != 0; }
    int sign() const { return mpfr_sgn(f_); }

    BigFloat operator+(const BigFloat& o) const;
    BigFloat operator-(const BigFloat& o) const;
    BigFloat operator*(const BigFloat& o) const;
    BigFloat operator/(const BigFloat& o) const;
    BigFloat operator-() const;

    bool operator<(const BigFloat& o) const { return mpfr_cmp(f_, o.f_) < 0; }
    bool operator>(const BigFloat& o) const { return mpfr_cmp(f_, o.f_) > 0; }

    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat log() const;
    BigFloat cos() const;
    BigFloat sin() const;

    /// Nearest integer, exact.
    Int round_to_int() const;
    /// Distance to the nearest integer, in [0, 1/2].
    BigFloat dist_to_int() const;

    /// 2^e for a machine exponent; used for tolerance thresholds.
    static BigFloat pow2(long e, mpfr_prec_t prec);

private:
    mpfr_prec_t prec_;
    mpfr_t f_;
};

struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex operator/(const BigComplex& o) const;

    BigFloat abs() const;  // hypot(re, im)
};

/// All complex roots of a squarefree monic integer polynomial by
/// Aberth-Ehrlich iteration at `prec` bits.  Throws PrecisionError when
/// the iteration fails to converge or the residual check fails; the
/// results are only candidate generators, every consumer verifies
/// exactly.
std::vector<BigComplex> aberth_roots(const IntPolynomial& p, mpfr_prec_t prec);

/// Horner evaluation of a rational polynomial at a complex point.
BigComplex eval_at(const RatPolynomial& q, const BigComplex& z, mpfr_prec_t prec);

}  // namespace znz

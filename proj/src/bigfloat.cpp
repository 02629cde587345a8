#include "znz/bigfloat.hpp"

#include <algorithm>

#include "znz/error.hpp"

namespace znz {

BigFloat BigFloat::from(const Int& v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_z(r.f_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from(const Rat& v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.f_, v.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from(double v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.f_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator+(const BigFloat& o) const {
    BigFloat r(prec_);
    mpfr_add(r.f_, f_, o.f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-(const BigFloat& o) const {
    BigFloat r(prec_);
    mpfr_sub(r.f_, f_, o.f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator*(const BigFloat& o) const {
    BigFloat r(prec_);
    mpfr_mul(r.f_, f_, o.f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator/(const BigFloat& o) const {
    BigFloat r(prec_);
    mpfr_div(r.f_, f_, o.f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec_);
    mpfr_neg(r.f_, f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(prec_);
    mpfr_abs(r.f_, f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(prec_);
    mpfr_sqrt(r.f_, f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log() const {
    BigFloat r(prec_);
    mpfr_log(r.f_, f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::cos() const {
    BigFloat r(prec_);
    mpfr_cos(r.f_, f_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sin() const {
    BigFloat r(prec_);
    mpfr_sin(r.f_, f_, MPFR_RNDN);
    return r;
}

Int BigFloat::round_to_int() const {
    BigFloat r(prec_);
    mpfr_rint(r.f_, f_, MPFR_RNDN);
    Int out;
    mpfr_get_z(out.get_mpz_t(), r.f_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::dist_to_int() const {
    BigFloat nearest = BigFloat::from(round_to_int(), prec_);
    return (*this - nearest).abs();
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_ui_2exp(r.f_, 1, e, MPFR_RNDN);
    return r;
}

BigComplex BigComplex::operator/(const BigComplex& o) const {
    BigFloat n2 = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / n2, (im * o.re - re * o.im) / n2};
}

BigFloat BigComplex::abs() const {
    return (re * re + im * im).sqrt();
}

BigComplex eval_at(const RatPolynomial& q, const BigComplex& z, mpfr_prec_t prec) {
    BigComplex acc(prec);
    for (std::size_t i = q.coeffs().size(); i-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + BigFloat::from(q.coeff(i), prec);
    }
    return acc;
}

namespace {

BigComplex eval_int_poly(const IntPolynomial& p, const BigComplex& z, mpfr_prec_t prec) {
    BigComplex acc(prec);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + BigFloat::from(p.coeff(i), prec);
    }
    return acc;
}

}  // namespace

std::vector<BigComplex> aberth_roots(const IntPolynomial& p, mpfr_prec_t prec) {
    if (!p.is_monic() || p.degree() < 1) throw UsageError("aberth_roots requires a monic polynomial of degree >= 1");
    const long d = p.degree();
    const IntPolynomial dp = p.derivative();

    // Cauchy bound: all roots lie within |z| <= 1 + max |c_i|.
    Int maxc = 0;
    for (const Int& c : p.coeffs()) {
        Int a = ::abs(c);
        if (a > maxc) maxc = a;
    }
    BigFloat radius = BigFloat::from(maxc, prec) + BigFloat::from(1.0, prec);
    BigFloat two_pi = BigFloat::pi(prec) * BigFloat::from(2.0, prec);

    std::vector<BigComplex> z;
    z.reserve(static_cast<std::size_t>(d));
    for (long j = 0; j < d; ++j) {
        // staggered angles avoid symmetric stalls
        BigFloat theta = two_pi * BigFloat::from(static_cast<double>(j) + 0.3371, prec) /
                         BigFloat::from(static_cast<double>(d), prec);
        z.emplace_back(radius * theta.cos(), radius * theta.sin());
    }

    BigFloat tol = BigFloat::pow2(-(prec - 16), prec);
    const int max_iter = 500;
    bool converged = false;
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
        converged = true;
        for (long i = 0; i < d; ++i) {
            BigComplex pv = eval_int_poly(p, z[i], prec);
            BigComplex dv = eval_int_poly(dp, z[i], prec);
            if (dv.abs().is_zero()) {
                // nudge off a critical point
                z[i].re = z[i].re + BigFloat::from(1e-3, prec);
                converged = false;
                continue;
            }
            BigComplex newton = pv / dv;
            BigComplex sum(prec);
            for (long j = 0; j < d; ++j) {
                if (j == i) continue;
                BigComplex diff = z[i] - z[j];
                BigFloat d2 = diff.re * diff.re + diff.im * diff.im;
                if (d2.is_zero()) {
                    diff.re = diff.re + BigFloat::from(1e-6, prec);
                    d2 = diff.re * diff.re + diff.im * diff.im;
                }
                sum = sum + BigComplex{diff.re / d2, -diff.im / d2};  // 1/(z_i - z_j)
            }
            BigComplex denom = BigComplex{BigFloat::from(1.0, prec), BigFloat::from(0.0, prec)} -
                               newton * sum;
            BigComplex step = newton / denom;
            z[i] = z[i] - step;
            BigFloat scale = z[i].abs() + BigFloat::from(1.0, prec);
            if (step.abs() > tol * scale) converged = false;
        }
    }
    if (!converged) {
        throw PrecisionError("root isolation did not converge at " + std::to_string(prec) + " bits");
    }
    // residual sanity: |p(z_i)| must be tiny relative to the coefficient scale
    BigFloat res_tol = BigFloat::pow2(-(prec / 2), prec) *
                       (BigFloat::from(maxc, prec) + BigFloat::from(1.0, prec));
    for (long i = 0; i < d; ++i) {
        BigFloat r = eval_int_poly(p, z[i], prec).abs();
        BigFloat scale_pow = BigFloat::from(1.0, prec);
        BigFloat az = z[i].abs() + BigFloat::from(1.0, prec);
        for (long j = 0; j < d; ++j) scale_pow = scale_pow * az;
        if (r > res_tol * scale_pow) {
            throw PrecisionError("root residual check failed at " + std::to_string(prec) + " bits");
        }
    }
    return z;
}

}  // namespace znz

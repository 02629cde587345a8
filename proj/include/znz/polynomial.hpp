#pragma once

#include <string>
#include <utility>
#include <vector>

#include "znz/error.hpp"
#include "znz/integer.hpp"
#include "znz/matrix.hpp"

namespace znz {

/// Integer polynomial, coefficients stored low degree first.
/// Normalized: no trailing zero coefficients; the zero polynomial has
/// an empty coefficient list and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<Int> low_first) : c_(low_first) { normalize(); }
    explicit IntPolynomial(std::vector<Int> low_first) : c_(std::move(low_first)) { normalize(); }

    static IntPolynomial z();                       // the monomial z
    static IntPolynomial constant(const Int& c);
    static IntPolynomial z_pow_minus_one(unsigned long k);  // z^k - 1

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    /// Coefficient of z^i (zero beyond the degree).
    const Int& coeff(std::size_t i) const;
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;

    IntPolynomial derivative() const;
    Int eval(const Int& x) const;

    /// Quotient and remainder by a monic divisor; exact integer arithmetic.
    std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& den) const;

    std::string to_string() const;  // e.g. "z^2 - 3*z + 1"

private:
    void normalize();
    std::vector<Int> c_;
};

/// Rational-coefficient polynomial, same layout as IntPolynomial.
class RatPolynomial {
public:
    RatPolynomial() = default;
    RatPolynomial(std::initializer_list<Rat> low_first) : c_(low_first) { normalize(); }
    explicit RatPolynomial(std::vector<Rat> low_first) : c_(std::move(low_first)) { normalize(); }
    explicit RatPolynomial(const IntPolynomial& p);

    static RatPolynomial constant(const Rat& c);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(std::size_t i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    bool operator==(const RatPolynomial& o) const { return c_ == o.c_; }

    RatPolynomial operator+(const RatPolynomial& o) const;
    RatPolynomial operator-(const RatPolynomial& o) const;
    RatPolynomial operator*(const RatPolynomial& o) const;

    RatPolynomial derivative() const;
    RatPolynomial make_monic() const;
    std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& den) const;

    /// True when every coefficient has denominator 1.
    bool is_integral() const;
    IntPolynomial to_int_checked() const;

    /// Integer polynomial with the same roots: clear denominators,
    /// divide by content, force positive leading coefficient.
    IntPolynomial primitive_int() const;

    std::string to_string() const;

private:
    void normalize();
    std::vector<Rat> c_;
};

/// z^e reduced modulo a monic m of degree >= 1.  With an integer base
/// and monic integer modulus every remainder is integral; the rational
/// carrier matches the general reduction interface.
RatPolynomial poly_powmod(const IntPolynomial& base, const Int& e, const IntPolynomial& m);

unsigned long euler_phi(unsigned long k);

/// k-th cyclotomic polynomial, cached.
const IntPolynomial& cyclotomic(unsigned long k);

struct CyclotomicFactor {
    unsigned long index;
    unsigned long multiplicity;
    bool operator==(const CyclotomicFactor&) const = default;
};

struct CyclotomicSplit {
    std::vector<CyclotomicFactor> factors;  // sorted by index
    IntPolynomial remainder;                // no cyclotomic factor left

    bool fully_cyclotomic() const { return remainder.is_one(); }
    bool squarefree_cyclotomic() const;
};

/// Peels every cyclotomic factor off a monic m with m(0) != 0.
/// Scans indices k <= 2*deg(m)^2 + 1, which covers all k with
/// phi(k) <= deg(m); degrees beyond 64 are rejected loudly.
CyclotomicSplit cyclotomic_cofactor(const IntPolynomial& m);

/// Monic gcd over Q (Euclid); gcd(0,0) = 0.
RatPolynomial poly_gcd(const RatPolynomial& a, const RatPolynomial& b);

/// Monic lcm of two monic integer polynomials; result is integral.
IntPolynomial poly_lcm_monic(const IntPolynomial& a, const IntPolynomial& b);

/// g / gcd(g, g') for monic integer g: same roots, all simple.
IntPolynomial squarefree_radical(const IntPolynomial& g);

/// p(A)·x evaluated by Horner on the vector.
IntVector apply_poly(const IntMatrix& a, const IntPolynomial& p, const IntVector& x);

}  // namespace znz

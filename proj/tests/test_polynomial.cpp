#include <doctest.h>

#include "helpers.hpp"
#include "znz/minpoly.hpp"
#include "znz/oracle.hpp"
#include "znz/polynomial.hpp"
#include "znz/rng.hpp"

using namespace znz;
using namespace znz::testutil;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("polynomial basics") {
    IntPolynomial m{1, -3, 1};  // z^2 - 3z + 1 stored low-first... careful: {c0,c1,c2}
    // the intended polynomial is z^2 - 3z + 1: coefficients (1, -3, 1)
    CHECK(m.degree() == 2);
    CHECK(m.is_monic());
    CHECK(m.to_string() == "z^2 - 3*z + 1");
    CHECK(m.eval(Int(4)) == 5);
    CHECK(m.derivative() == IntPolynomial{-3, 2});
    CHECK((m * IntPolynomial{1}) == m);
    CHECK(IntPolynomial{}.is_zero());
    CHECK_THROWS_AS(IntPolynomial({1, 1}).divmod_monic(IntPolynomial{0, 2}), DomainError);
}

TEST_CASE("poly_powmod examples with a repeated-reduction oracle") {
    IntPolynomial m{1, -3, 1};
    CHECK(poly_powmod(IntPolynomial::z(), 0, m) == RatPolynomial{1});

    // oracle: reduce z^3 by multiplying z step by step
    IntPolynomial acc{1};
    for (int i = 0; i < 3; ++i) acc = (acc * IntPolynomial::z()).divmod_monic(m).second;
    CHECK(RatPolynomial(acc) == RatPolynomial{-3, 8});  // 8z - 3
    CHECK(poly_powmod(IntPolynomial::z(), 3, m) == RatPolynomial(acc));

    // matches phi^3 applied to (1,1): 8*(3,2) - 3*(1,1) = (21,13)
    CHECK(apply_poly(fib_matrix(), acc, vec({1, 1})) == mat_pow(fib_matrix(), 3).apply(vec({1, 1})));

    CHECK(poly_powmod(IntPolynomial::z(), 1, IntPolynomial{-1, 1}) == RatPolynomial{1});
    CHECK_THROWS_AS(poly_powmod(IntPolynomial::z(), 2, IntPolynomial{1, 2}), DomainError);
}

TEST_CASE("poly_powmod tracks matrix powers through the minimal polynomial") {
    Rng rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
        IntMatrix a = random_unimodular(n, 15, rng.next());
        IntVector x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = rng.uniform(-3, 3);
        if (x.is_zero()) x[0] = 1;
        IntPolynomial m = minimal_polynomial_rel(a, x);
        for (long e = 0; e <= 20; ++e) {
            RatPolynomial r = poly_powmod(IntPolynomial::z(), e, m);
            CHECK(apply_poly(a, r.to_int_checked(), x) == mat_pow(a, e).apply(x));
        }
    }
}

TEST_CASE("euler phi spot values") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(17) == 16);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
    CHECK(cyclotomic(4) == IntPolynomial{1, 0, 1});
    CHECK(cyclotomic(6) == IntPolynomial{1, -1, 1});
    // product of all Phi_d over d | 12 recovers z^12 - 1
    IntPolynomial prod{1};
    for (unsigned long d : {1ul, 2ul, 3ul, 4ul, 6ul, 12ul}) prod = prod * cyclotomic(d);
    CHECK(prod == IntPolynomial::z_pow_minus_one(12));
}

TEST_CASE("cyclotomic_cofactor examples") {
    auto s1 = cyclotomic_cofactor(IntPolynomial{-1, 1});
    CHECK(s1.factors == std::vector<CyclotomicFactor>{{1, 1}});
    CHECK(s1.remainder.is_one());
    CHECK(s1.squarefree_cyclotomic());

    auto s2 = cyclotomic_cofactor(IntPolynomial{1, 0, 1});
    CHECK(s2.factors == std::vector<CyclotomicFactor>{{4, 1}});
    CHECK(s2.remainder.is_one());

    IntPolynomial fib{1, -3, 1};
    auto s3 = cyclotomic_cofactor(fib);
    CHECK(s3.factors.empty());
    CHECK(s3.remainder == fib);

    // repeated factor with a leftover
    IntPolynomial m = cyclotomic(1) * cyclotomic(1) * cyclotomic(4) * fib;
    auto s4 = cyclotomic_cofactor(m);
    CHECK(s4.factors == std::vector<CyclotomicFactor>{{1, 2}, {4, 1}});
    CHECK(s4.remainder == fib);
    CHECK_FALSE(s4.squarefree_cyclotomic());

    CHECK_THROWS_AS(cyclotomic_cofactor(IntPolynomial{0, 1}), DomainError);
}

TEST_CASE("gcd, lcm, radical") {
    IntPolynomial z1 = cyclotomic(1);
    CHECK(poly_lcm_monic(z1, z1) == z1);
    IntPolynomial p = z1 * cyclotomic(4);
    CHECK(poly_lcm_monic(z1, p) == p);
    RatPolynomial g = poly_gcd(RatPolynomial(p), RatPolynomial(z1));
    CHECK(g == RatPolynomial(z1));
    CHECK(squarefree_radical(z1 * z1 * cyclotomic(4)) == z1 * cyclotomic(4));
}

TEST_CASE("minimal_polynomial_rel examples") {
    CHECK(minimal_polynomial_rel(IntMatrix::identity(3), vec({2, 0, 1})) == IntPolynomial{-1, 1});

    // Krylov oracle: (8,5) = 3*(3,2) - (1,1)
    IntVector x = vec({1, 1});
    IntVector ax = fib_matrix().apply(x);
    IntVector aax = fib_matrix().apply(ax);
    CHECK(aax == ax * Int(3) - x);
    CHECK(minimal_polynomial_rel(fib_matrix(), x) == IntPolynomial{1, -3, 1});

    CHECK(minimal_polynomial_rel(swap_matrix(), vec({1, 1})) == IntPolynomial{-1, 1});
    CHECK_THROWS_AS(minimal_polynomial_rel(fib_matrix(), IntVector(2)), DomainError);
}

TEST_CASE("minimal polynomial annihilates and is minimal") {
    Rng rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
        IntMatrix a = random_unimodular(n, 18, rng.next());
        IntVector x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = rng.uniform(-4, 4);
        if (x.is_zero()) x[0] = 1;
        IntPolynomial m = minimal_polynomial_rel(a, x);
        CHECK(apply_poly(a, m, x).is_zero());
        const long d = m.degree();
        REQUIRE(d >= 1);
        if (d >= 2) {
            // no dependency one degree lower: A^{d-1}x outside the smaller span
            IntMatrix k = krylov_matrix(a, x, static_cast<std::size_t>(d - 1));
            IntVector top = x;
            for (long i = 0; i < d - 1; ++i) top = a.apply(top);
            CHECK_FALSE(solve_rational(k, top).has_value());
        }
    }
}

TEST_CASE("global minimal polynomial") {
    CHECK(minimal_polynomial(fib_matrix()) == IntPolynomial{1, -3, 1});
    CHECK(minimal_polynomial(shear_matrix()) == IntPolynomial{1, -2, 1});  // (z-1)^2
    CHECK(minimal_polynomial(IntMatrix::identity(4)) == IntPolynomial{-1, 1});
}

TEST_SUITE_END();

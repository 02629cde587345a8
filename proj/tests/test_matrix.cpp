#include <doctest.h>

#include "helpers.hpp"
#include "znz/matrix.hpp"
#include "znz/oracle.hpp"
#include "znz/rng.hpp"

using namespace znz;
using namespace znz::testutil;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("mat_mul identity and hand products") {
    IntMatrix id2 = IntMatrix::identity(2);
    CHECK(mat_mul(id2, id2) == id2);
    CHECK(mat_mul(fib_matrix(), fib_matrix()) == IntMatrix{{5, 3}, {3, 2}});
    CHECK_THROWS_AS(mat_mul(IntMatrix(2, 3), IntMatrix(2, 3)), UsageError);
}

TEST_CASE("mat_mul by the inverse gives the identity") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        IntMatrix a = random_unimodular(3, 15, seed);
        CHECK(mat_mul(a, inverse_unimodular(a)).is_identity());
    }
}

TEST_CASE("mat_pow examples against the repeated-multiplication oracle") {
    IntMatrix a = fib_matrix();
    CHECK(mat_pow(a, 0) == IntMatrix::identity(2));

    IntMatrix by_repetition = IntMatrix::identity(2);
    for (int i = 0; i < 2; ++i) by_repetition = mat_mul(by_repetition, a);
    CHECK(mat_pow(a, 2) == by_repetition);
    CHECK(mat_pow(a, 2) == IntMatrix{{5, 3}, {3, 2}});

    IntMatrix neg = mat_pow(a, -1);
    CHECK(neg == IntMatrix{{1, -1}, {-1, 2}});
    CHECK(mat_mul(neg, a).is_identity());

    CHECK_THROWS_AS(mat_pow(IntMatrix{{2, 0}, {0, 2}}, -1), DomainError);
}

TEST_CASE("mat_pow exponent additivity on random unimodular matrices") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        IntMatrix a = random_unimodular(3, 20, seed);
        std::vector<IntMatrix> powers;
        for (long e = -10; e <= 10; ++e) powers.push_back(mat_pow(a, Int(e)));
        for (long p = -5; p <= 5; ++p) {
            for (long q = -5; q <= 5; ++q) {
                CHECK(powers[static_cast<std::size_t>(p + q + 10)] ==
                      mat_mul(powers[static_cast<std::size_t>(p + 10)],
                              powers[static_cast<std::size_t>(q + 10)]));
            }
        }
    }
}

TEST_CASE("determinant examples") {
    CHECK(determinant(IntMatrix::identity(3)) == 1);
    CHECK(determinant(fib_matrix()) == 1);
    CHECK(determinant(IntMatrix{{2, 0}, {0, 2}}) == 4);
    CHECK(determinant(IntMatrix{{2, 0}, {0, 2}}) == det_cofactor(IntMatrix{{2, 0}, {0, 2}}));
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), UsageError);
}

TEST_CASE("Bareiss determinant matches cofactor expansion") {
    Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.uniform(-9, 9);
        CHECK(determinant(a) == det_cofactor(a));
    }
}

TEST_CASE("inverse_unimodular examples") {
    CHECK(inverse_unimodular(IntMatrix::identity(3)) == IntMatrix::identity(3));
    CHECK(inverse_unimodular(fib_matrix()) == IntMatrix{{1, -1}, {-1, 2}});
    CHECK(inverse_unimodular(swap_matrix()) == swap_matrix());
    CHECK_THROWS_AS(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), DomainError);
}

TEST_CASE("inverse agrees with the adjugate/determinant oracle in 2x2") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix a = random_unimodular(2, 12, rng.next());
        Int det = determinant(a);
        // for |det| = 1, A^{-1} = adj(A) / det = adj(A) * det
        IntMatrix adj{{a(1, 1), -a(0, 1)}, {-a(1, 0), a(0, 0)}};
        IntMatrix expect(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) expect(i, j) = adj(i, j) * det;
        CHECK(inverse_unimodular(a) == expect);
    }
}

TEST_CASE("vector arithmetic basics") {
    IntVector a = vec({3, -2});
    CHECK(a.l1_norm() == 5);
    CHECK(a.linf_norm() == 3);
    CHECK((a + vec({1, 1})) == vec({4, -1}));
    CHECK((-a) == vec({-3, 2}));
    CHECK_THROWS_AS(a + IntVector(3), UsageError);
    CHECK(IntVector::unit(3, 1) == vec({0, 1, 0}));
}

TEST_SUITE_END();

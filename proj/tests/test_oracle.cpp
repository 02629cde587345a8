#include <doctest.h>

#include "helpers.hpp"
#include "znz/conjugacy.hpp"
#include "znz/oracle.hpp"
#include "znz/orbit.hpp"
#include "znz/rng.hpp"

using namespace znz;
using namespace znz::testutil;

TEST_SUITE_BEGIN("decision");

TEST_CASE("brute_conjugacy examples") {
    AbcGroup g = fib_group();

    GroupElement u = elem({2, -1}, 3);
    auto self = brute_conjugacy(g, u, u, 0, 0);
    REQUIRE(self.has_value());
    CHECK(*self == g.identity());

    auto found = brute_conjugacy(g, elem({0, 0}, 1), elem({-1, -1}, 1), 1, 0);
    REQUIRE(found.has_value());
    CHECK(*found == elem({1, 0}, 0));  // pins the enumeration order
    CHECK(conjugate(g, *found, elem({0, 0}, 1)) == elem({-1, -1}, 1));

    CHECK_FALSE(brute_conjugacy(g, elem({1, 1}, 2), elem({1, 1}, 3), 3, 3).has_value());
}

TEST_CASE("every brute conjugator verifies") {
    Rng rng(909);
    int found_count = 0;
    for (int trial = 0; trial < 30; ++trial) {
        AbcGroup g(2, random_unimodular(2, 8, rng.next()));
        GroupElement u = random_element(g, 2, 2, rng.next());
        GroupElement a = random_element(g, 2, 2, rng.next());
        GroupElement v = conjugate(g, a, u);
        auto found = brute_conjugacy(g, u, v, 2, 2);
        REQUIRE(found.has_value());  // the planted conjugator is within bounds
        CHECK(conjugate(g, *found, u) == v);
        ++found_count;
    }
    CHECK(found_count == 30);
}

TEST_CASE("brute_orbit examples") {
    CHECK(brute_orbit(IntMatrix::identity(2), vec({3, 4}), vec({3, 4}), 0) == Int(0));
    CHECK(brute_orbit(fib_matrix(), vec({1, 1}), vec({8, 5}), 5) == Int(2));
    // both -1 and 3 solve; the smallest-|e| contract picks -1
    CHECK(brute_orbit(rotation_matrix(), vec({1, 0}), vec({0, -1}), 4) == Int(-1));
    CHECK_FALSE(brute_orbit(fib_matrix(), vec({1, 1}), vec({2, 2}), 10).has_value());
    CHECK_THROWS_AS(brute_orbit(IntMatrix{{2, 0}, {0, 1}}, vec({1, 0}), vec({1, 0}), 3), DomainError);
}

TEST_CASE("brute_orbit agrees with the solver") {
    Rng rng(112);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        IntMatrix a = random_unimodular(n, 10, rng.next());
        IntVector x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = rng.uniform(-4, 4);
            y[i] = rng.uniform(-4, 4);
        }
        auto brute = brute_orbit(a, x, y, 12);
        if (brute) {
            OrbitOutcome out = orbit(a, x, y);
            REQUIRE(out.found());
            CHECK(mat_pow(a, *out.exponent).apply(x) == y);
        }
    }
}

TEST_CASE("fibonacci") {
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(5) == 5);
    CHECK(fibonacci(50) == Int("12586269025"));
    CHECK_THROWS_AS(fibonacci(0), UsageError);

    // Cassini identity guards the oracle itself
    for (long n = 2; n <= 50; ++n) {
        Int lhs = fibonacci(n + 1) * fibonacci(n - 1) - fibonacci(n) * fibonacci(n);
        CHECK(lhs == (n % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("random_conjugate_pair invariants") {
    AbcGroup g = fib_group();
    InstanceBundle b1 = random_conjugate_pair(g, 77, 10, 10);
    REQUIRE(b1.planted_conjugator.has_value());
    CHECK(conjugate(g, *b1.planted_conjugator, b1.u) == b1.v);

    InstanceBundle b2 = random_conjugate_pair(g, 77, 10, 10);
    CHECK(b1.u == b2.u);
    CHECK(b1.v == b2.v);
    CHECK(*b1.planted_conjugator == *b2.planted_conjugator);

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        InstanceBundle b = random_conjugate_pair(g, seed, 8, 8);
        ConjugacyOutcome out = conjugacy(g, b.u, b.v);
        REQUIRE(out.conjugate());
        CHECK(conjugate(g, *out.witness, b.u) == b.v);
    }
}

TEST_CASE("random_unimodular") {
    CHECK(random_unimodular(3, 0, 9) == IntMatrix::identity(3));
    bool saw_big_trace = false;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::size_t n = 2 + static_cast<std::size_t>(seed % 4);
        IntMatrix m = random_unimodular(n, 14, seed);
        CHECK(abs(determinant(m)) == 1);
        if (n == 2 && m(0, 0) + m(1, 1) >= 3) saw_big_trace = true;
    }
    CHECK(saw_big_trace);  // infinite-order samples occur
}

TEST_SUITE_END();

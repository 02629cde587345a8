#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "znz/json_io.hpp"
#include "znz/parse.hpp"
#include "znz/rng.hpp"

using namespace znz;
using namespace znz::testutil;

TEST_SUITE_BEGIN("frontend");

TEST_CASE("normal form literals") {
    AbcGroup g = fib_group();
    CHECK(realize(g, parse_element("[1,2] t^3")) == elem({1, 2}, 3));
    CHECK(realize(g, parse_element("[1,2]")) == elem({1, 2}, 0));
    CHECK(realize(g, parse_element("[1,2] t")) == elem({1, 2}, 1));
    CHECK(realize(g, parse_element(" [ 1 , -2 ] t^-5 ")) == elem({1, -2}, -5));
    CHECK(realize(g, parse_element("")) == g.identity());
}

TEST_CASE("free words") {
    AbcGroup g = fib_group();
    CHECK(realize(g, parse_element("t g1 t^-1")) == elem({2, 1}, 0));
    CHECK(realize(g, parse_element("g1 g1^-1 t^3 t^-3")) == g.identity());
    CHECK(realize(g, parse_element("g1^2 g2^-1 t^4")) == elem({2, -1}, 4));

    auto lit = parse_element("g3^-2 t^5 g1 t");
    const GroupWord& w = std::get<GroupWord>(lit);
    REQUIRE(w.letters.size() == 4);
    CHECK(w.letters[0].generator == 3);
    CHECK(w.letters[0].exponent == -2);
    CHECK(w.letters[1].generator == Letter::kT);
    CHECK(w.letters[1].exponent == 5);
    CHECK(w.letters[3].exponent == 1);
}

TEST_CASE("parse errors carry positions") {
    auto expect_error = [](const std::string& text) {
        try {
            parse_element(text);
            FAIL_CHECK("expected ParseError for: ", text);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("position") != std::string::npos);
        }
    };
    expect_error("[1,2");
    expect_error("[]");
    expect_error("g0x");
    expect_error("x1");
    expect_error("[1,2] t^");
    expect_error("[1,2] q");
    expect_error("t^^2");
    expect_error("[1,2] t^3 junk");
}

TEST_CASE("realize checks dimensions") {
    AbcGroup g = fib_group();
    CHECK_THROWS_AS(realize(g, parse_element("[1,2,3]")), UsageError);
    CHECK_THROWS_AS(realize(g, parse_element("g3")), UsageError);
}

TEST_CASE("format/parse round trip") {
    AbcGroup g = fib_group();
    CHECK(format_element(elem({2, 1}, 0)) == "[2,1] t^0");
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        GroupElement e = random_element(g, 1000, 1000, rng.next());
        CHECK(realize(g, parse_element(format_element(e))) == e);
    }
    // arbitrary precision survives the trip
    GroupElement big{IntVector{Int("123456789012345678901234567890"), Int("-9")}, Int("-10000000000000000000")};
    CHECK(realize(g, parse_element(format_element(big))) == big);
}

TEST_CASE("vector literals") {
    CHECK(parse_int_vector("[5,-3]") == std::vector<Int>{Int(5), Int(-3)});
    CHECK_THROWS_AS(parse_int_vector("[5,-3] t"), ParseError);
}

TEST_CASE("json integers switch to strings at 2^53") {
    Int safe = (Int(1) << 53) - 1;
    Int unsafe = Int(1) << 53;
    CHECK(int_to_json(safe).is_number_integer());
    CHECK(int_to_json(unsafe).is_string());
    CHECK(int_to_json(-unsafe).is_string());
    CHECK(int_to_json(Int(0)) == json(0));

    CHECK(int_from_json(json(42)) == 42);
    CHECK(int_from_json(json("42")) == 42);
    CHECK(int_from_json(json("-123456789123456789123456789")) == Int("-123456789123456789123456789"));
    CHECK(int_from_json(int_to_json(unsafe)) == unsafe);
    CHECK_THROWS_AS(int_from_json(json(1.5)), UsageError);
    CHECK_THROWS_AS(int_from_json(json("zz")), UsageError);
}

TEST_CASE("matrix, vector and element json round trips") {
    IntMatrix m = fib_matrix();
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    IntVector v = vec({1, -2, 3});
    CHECK(vector_from_json(vector_to_json(v)) == v);
    GroupElement e{IntVector{Int(1), Int(1) << 60}, Int(-7)};
    CHECK(element_from_json(element_to_json(e)) == e);
    CHECK(element_to_json(e)["w"][1].is_string());
}

TEST_CASE("outcome json shapes") {
    ConjugacyOutcome yes = ConjugacyOutcome::with_witness(elem({1, 0}, 2));
    json jy = outcome_to_json(yes);
    CHECK(jy["conjugate"] == true);
    CHECK(jy["witness"]["w"] == json::array({1, 0}));
    CHECK(jy["witness"]["k"] == 2);
    json jn = outcome_to_json(ConjugacyOutcome::not_conjugate());
    CHECK(jn == json{{"conjugate", false}});
}

TEST_CASE("group and matrix files") {
    const std::string good = "/tmp/znz_test_group.json";
    {
        std::ofstream out(good);
        out << R"({"n": 2, "phi": [[2,1],[1,1]]})";
    }
    AbcGroup g = load_group_file(good);
    CHECK(g.n() == 2);
    CHECK(g.phi() == fib_matrix());

    const std::string bare = "/tmp/znz_test_matrix.json";
    {
        std::ofstream out(bare);
        out << "[[0,1],[1,0]]";
    }
    CHECK(load_matrix_file(bare) == swap_matrix());

    const std::string bad = "/tmp/znz_test_bad.json";
    {
        std::ofstream out(bad);
        out << R"({"n": 2})";
    }
    CHECK_THROWS_AS(load_group_file(bad), UsageError);
    CHECK_THROWS_AS(load_group_file("/tmp/znz_does_not_exist.json"), UsageError);
    {
        std::ofstream out(bad);
        out << "{not json";
    }
    CHECK_THROWS_AS(load_group_file(bad), UsageError);
    std::remove(good.c_str());
    std::remove(bare.c_str());
    std::remove(bad.c_str());
}

TEST_SUITE_END();

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "ellat/scalar.hpp"

using namespace ellat;

TEST_CASE("integer scalars behave like integers") {
    Scalar a(7), b(-3);
    CHECK((a + b).integer_value() == 4);
    CHECK((a * b).integer_value() == -21);
    CHECK((a - a).is_zero());
    CHECK(Scalar(0).is_integer());
    CHECK(Scalar(0).str() == "0");
}

TEST_CASE("polynomial arithmetic is exact and canonical") {
    const Scalar c = Scalar::variable("c");
    const Scalar d = Scalar::variable("d");
    const Scalar p = Scalar(2) * c + d - Scalar(1);
    CHECK(p.str() == "2*c + d - 1");
    CHECK_FALSE(p.is_integer());

    // (c + d)^2 - (c^2 + 2cd + d^2) == 0
    const Scalar lhs = (c + d) * (c + d);
    const Scalar rhs = c * c + Scalar(2) * c * d + d * d;
    CHECK((lhs - rhs).is_zero());

    CHECK((c - c).is_zero());
    CHECK((c * Scalar(0)).is_zero());
    CHECK((-p).str() == "-2*c - d + 1");
}

TEST_CASE("printing orders monomials degree-first then lexicographically") {
    const Scalar A = Scalar::variable("A");
    const Scalar B = Scalar::variable("B");
    const Scalar p = A * A + A * B + B * B + A + Scalar(5);
    CHECK(p.str() == "A^2 + A*B + B^2 + A + 5");
}

TEST_CASE("parser round-trips canonical text") {
    for (const char* text : {"2*c + d - 1", "-2*A^2 - 4*A*B - 2*B^2 + 2*A + 2*B", "0", "-7",
                             "x^3 - x + 1", "gd"}) {
        const Scalar s = Scalar::parse(text);
        CHECK(Scalar::parse(s.str()) == s);
        CHECK(s.str() == text);
    }
    CHECK(Scalar::parse("(c + d)*(c - d)") == Scalar::parse("c^2 - d^2"));
    CHECK(Scalar::parse(" 3 * x ") == Scalar(3) * Scalar::variable("x"));
    CHECK_THROWS_AS(Scalar::parse("2 +"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("c d"), std::invalid_argument);
}

TEST_CASE("printing and parsing are mutually inverse on random polynomials") {
    std::mt19937_64 rng(97);
    const std::vector<std::string> names{"a", "b", "c", "x1"};
    for (int t = 0; t < 50; ++t) {
        Scalar p(0);
        const int terms = 1 + int(rng() % 4);
        for (int k = 0; k < terms; ++k) {
            Scalar mono(long(rng() % 19) - 9);
            const int vars = int(rng() % 3);
            for (int v = 0; v < vars; ++v) mono *= Scalar::variable(names[rng() % names.size()]);
            p += mono;
        }
        CHECK(Scalar::parse(p.str()) == p);
    }
}

TEST_CASE("evaluation substitutes every parameter") {
    const Scalar p = Scalar::parse("2*c + d - 1");
    std::map<std::string, Integer> vals{{"c", 3}, {"d", -2}};
    CHECK(p.evaluate(vals).integer_value() == 3);
    CHECK_THROWS_AS(p.evaluate({{"c", Integer(1)}}), std::invalid_argument);
    CHECK(p.parameters() == std::vector<std::string>{"c", "d"});
}

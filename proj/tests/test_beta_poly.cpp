#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wigfluct/beta_poly.hpp"
#include "wigfluct/errors.hpp"

using namespace wigfluct;

namespace {

BetaPoly randomPoly(std::mt19937& rng) {
    BetaPoly p;
    const int terms = static_cast<int>(rng() % 5);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        const int degree = static_cast<int>(rng() % 4);
        for (int k = 0; k < degree; ++k) m.push_back(2 * (1 + static_cast<int>(rng() % 4)));
        std::sort(m.begin(), m.end());
        const long long num = static_cast<long long>(rng() % 21) - 10;
        const long long den = 1 + static_cast<long long>(rng() % 4);
        p.addTerm(m, Rational(num, den));
    }
    return p;
}

}  // namespace

TEST_CASE("arithmetic examples") {
    CHECK(BetaPoly::beta(4) + BetaPoly::beta(4) == BetaPoly::monomial({4}, 2));
    CHECK(BetaPoly::monomial({4}, 2) * BetaPoly::beta(2) == BetaPoly::monomial({2, 4}, 2));
    CHECK((BetaPoly::beta(2) - BetaPoly::beta(2)).isZero());
    CHECK(scale(BetaPoly::beta(6), Rational(1, 2)).toString() == "1/2*b6");
    CHECK_THROWS(BetaPoly::beta(3));
    CHECK_THROWS(BetaPoly::beta(0));
}

TEST_CASE("rendering and parsing") {
    const BetaPoly p = BetaPoly::parse("24*b4^2 + 8*b8");
    CHECK(p.toString() == "8*b8 + 24*b4^2");
    CHECK(BetaPoly{}.toString() == "0");
    CHECK(BetaPoly::parse("0").isZero());
    CHECK(BetaPoly::parse("-2*b4").toString() == "-2*b4");
    CHECK(BetaPoly::parse("b2").toString() == "b2");
    CHECK(BetaPoly::parse("b2*b4 - 1/3").toString() == "-1/3 + b2*b4");
    CHECK(BetaPoly::parse("b2^3") == BetaPoly::monomial({2, 2, 2}));
    CHECK_THROWS(BetaPoly::parse("2*x4"));
    CHECK_THROWS(BetaPoly::parse("b3"));
    CHECK_THROWS(BetaPoly::parse("2*"));
    CHECK_THROWS(BetaPoly::parse("b2 + "));
    CHECK_THROWS(BetaPoly::parse("b2*"));
}

TEST_CASE("evaluation") {
    const BetaPoly p = BetaPoly::parse("8*b8 + 24*b4^2");
    CHECK(evaluate(p, {{4, 1.0}, {8, 0.0}}) == doctest::Approx(24.0));
    CHECK_THROWS_AS(evaluate(p, {{4, 1.0}}), UnboundSymbol);
    try {
        evaluate(p, {{4, 1.0}});
    } catch (const UnboundSymbol& e) {
        CHECK(e.index() == 8);
    }
    CHECK(evaluateExact(p, {{4, Rational(1, 2)}, {8, 1}}) == Rational(14));
}

TEST_CASE("Gaussian specialization") {
    CHECK(gueSpecialize(BetaPoly::monomial({2, 2, 2})) == 1);
    CHECK(gueSpecialize(BetaPoly::monomial({4}, 2)) == 0);
    CHECK(gueSpecialize(BetaPoly::parse("8*b8 + 24*b4^2")) == 0);
    CHECK(gueSpecialize(BetaPoly::parse("3 + 2*b2^2 + b2*b4")) == 5);
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const BetaPoly a = randomPoly(rng), b = randomPoly(rng), c = randomPoly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b - b == a);
        CHECK(BetaPoly::parse(a.toString()) == a);
        const std::map<int, double> values{{2, 0.7}, {4, -1.3}, {6, 0.4}, {8, 2.1}};
        CHECK(evaluate(add(a, b), values) == doctest::Approx(evaluate(a, values) + evaluate(b, values)));
        CHECK(evaluate(mul(a, b), values) == doctest::Approx(evaluate(a, values) * evaluate(b, values)));
    }
}

TEST_CASE("coefficients") {
    CHECK(BetaPoly::parse("2*b4 - 6").hasIntegerCoefficients());
    CHECK_FALSE(BetaPoly::parse("1/2*b4").hasIntegerCoefficients());
    BetaPoly p;
    p.addTerm({2}, 3);
    p.addTerm({2}, -3);
    CHECK(p.isZero());
    CHECK(toString(Rational(-3, 6)) == "-1/2");
}

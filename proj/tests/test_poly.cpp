#include <random>

#include "doctest.h"
#include "klms/bigint.hpp"
#include "klms/half_exp_poly.hpp"

using klms::BigInt;
using klms::HalfExpPoly;

namespace {

HalfExpPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<long long> exp(-3, 6);
    std::uniform_int_distribution<long long> coef(-5, 5);
    HalfExpPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p += HalfExpPoly::monomial(exp(rng), coef(rng));
    return p;
}

} // namespace

TEST_CASE("bigint arithmetic agrees with int64 on small values") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        long long a = d(rng), b = d(rng);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
        CHECK(BigInt(a).to_string() == std::to_string(a));
        CHECK(BigInt(a).to_int64() == a);
    }
}

TEST_CASE("bigint carries across limbs") {
    BigInt big = BigInt::from_string("999999999999999999");
    CHECK(big + BigInt(1) == BigInt::from_string("1000000000000000000"));
    CHECK((big * big).to_string() == "999999999999999998000000000000000001");
    CHECK(BigInt::from_string("-42").to_int64() == -42);
    CHECK_THROWS_AS((big * big).to_int64(), klms::invariant_violation);
}

TEST_CASE("add: spec examples") {
    HalfExpPoly one = HalfExpPoly::one();
    HalfExpPoly q = HalfExpPoly::q();
    CHECK(one + q == HalfExpPoly::parse_text("1 + q"));
    CHECK((one + q) + HalfExpPoly::monomial(2, -1) == one);
    CHECK(HalfExpPoly::q_half() + HalfExpPoly::q_half() == HalfExpPoly::monomial(1, 2));
}

TEST_CASE("mul: spec examples") {
    HalfExpPoly one = HalfExpPoly::one();
    HalfExpPoly q = HalfExpPoly::q();
    CHECK(HalfExpPoly::q_half() * HalfExpPoly::q_half() == q);
    CHECK((one + q) * one == one + q);
    CHECK((one + q) * (one + q) ==
          one + HalfExpPoly::monomial(2, 2) + HalfExpPoly::monomial(4, 1));
}

TEST_CASE("coeff reads exponent numerators") {
    HalfExpPoly p = HalfExpPoly::one() + HalfExpPoly::q();
    CHECK(p.coeff(2) == BigInt(1));
    CHECK(p.coeff(1) == BigInt(0));
    CHECK(HalfExpPoly::monomial(1, 3).coeff(1) == BigInt(3));
}

TEST_CASE("is_integral") {
    CHECK((HalfExpPoly::one() + HalfExpPoly::q()).is_integral());
    CHECK_FALSE(HalfExpPoly::q_half().is_integral());
    CHECK(HalfExpPoly::zero().is_integral());
    CHECK_FALSE(HalfExpPoly::monomial(-2, 1).is_integral());
}

TEST_CASE("ring laws on random small inputs") {
    std::mt19937 rng(987);
    for (int i = 0; i < 300; ++i) {
        HalfExpPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == HalfExpPoly::zero());
    }
}

TEST_CASE("text round-trip is the identity on canonical values") {
    std::mt19937 rng(55);
    for (int i = 0; i < 300; ++i) {
        HalfExpPoly p = random_poly(rng);
        CHECK(HalfExpPoly::parse_text(p.to_text()) == p);
    }
    CHECK(HalfExpPoly::zero().to_text() == "0");
    CHECK(HalfExpPoly::parse_text("0") == HalfExpPoly::zero());
    CHECK((HalfExpPoly::one() + HalfExpPoly::q()).to_text() == "1 + q");
    CHECK(HalfExpPoly::monomial(1, 3).to_text() == "3*q^(1/2)");
    CHECK(HalfExpPoly::monomial(4, 1).to_text() == "q^2");
    CHECK(HalfExpPoly::monomial(3, -2).to_text() == "-2*q^(3/2)");
}

TEST_CASE("json pair form") {
    HalfExpPoly p = HalfExpPoly::one() + HalfExpPoly::q();
    CHECK(p.to_json_text() == "[[0,1],[2,1]]");
    CHECK(HalfExpPoly::zero().to_json_text() == "[]");
    auto pairs = p.to_pairs();
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].first == 0);
    CHECK(pairs[1].first == 2);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lagmul/field.hpp"

using namespace lagmul;

TEST_CASE("field construction validates characteristic") {
    CHECK_NOTHROW(Field(0));
    CHECK_NOTHROW(Field(7));
    CHECK_NOTHROW(Field(32003));
    CHECK_THROWS_AS(Field(6), Error);
    CHECK_THROWS_AS(Field(1), Error);
    CHECK_THROWS_AS(Field(32004), Error);
    CHECK_THROWS_AS(Field(1ull << 62), Error);
}

TEST_CASE("primality check") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(32003));
    CHECK(is_prime_u64(2305843009213693951ull));  // 2^61 - 1
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(32005));
}

TEST_CASE("inverse in F_7 against brute force") {
    Field f7(7);
    // oracle: the unique k in 1..6 with 3k = 1 mod 7
    int expected = 0;
    for (int k = 1; k < 7; ++k)
        if (3 * k % 7 == 1) expected = k;
    CHECK(expected == 5);
    CHECK(FieldElement(f7, 3).inv() == FieldElement(f7, expected));

    for (std::uint64_t a = 1; a < 7; ++a) {
        std::uint64_t found = 0;
        for (std::uint64_t k = 1; k < 7; ++k)
            if (a * k % 7 == 1) found = k;
        CHECK(FieldElement(f7, static_cast<std::int64_t>(a)).inv().residue() ==
              found);
    }
}

TEST_CASE("rational arithmetic is exact") {
    Field q(0);
    FieldElement half(q, Rational(1, 2));
    FieldElement third(q, Rational(1, 3));
    CHECK((half + third) == FieldElement(q, Rational(5, 6)));
    CHECK((half * third) == FieldElement(q, Rational(1, 6)));
    CHECK((half - half).is_zero());
}

TEST_CASE("rational canonical form stays reduced") {
    Field q(0);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::int64_t n1 = std::int64_t(rng() % 2001) - 1000;
        std::int64_t d1 = std::int64_t(rng() % 1000) + 1;
        std::int64_t n2 = std::int64_t(rng() % 2001) - 1000;
        std::int64_t d2 = std::int64_t(rng() % 1000) + 1;
        FieldElement a(q, Rational(n1, d1));
        FieldElement b(q, Rational(n2, d2));
        for (FieldElement v : {a + b, a - b, a * b}) {
            BigInt num = boost::multiprecision::numerator(v.rational());
            BigInt den = boost::multiprecision::denominator(v.rational());
            CHECK(den > 0);
            CHECK(boost::multiprecision::gcd(abs(num), den) == 1);
        }
    }
}

TEST_CASE("additive identity on 1000 random elements of F_p") {
    Field f(32003);
    FieldElement zero(f, 0);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
        FieldElement a(f, static_cast<std::int64_t>(rng() % 32003));
        CHECK((a + zero) == a);
    }
}

TEST_CASE("a * inv(a) = 1 randomized over both field kinds") {
    std::mt19937_64 rng(2);
    Field fp(32003);
    for (int i = 0; i < 500; ++i) {
        FieldElement a(fp, static_cast<std::int64_t>(rng() % 32002) + 1);
        CHECK((a * a.inv()).is_one());
    }
    Field q(0);
    for (int i = 0; i < 200; ++i) {
        std::int64_t n = std::int64_t(rng() % 1000) + 1;
        std::int64_t d = std::int64_t(rng() % 1000) + 1;
        FieldElement a(q, Rational(n, d));
        CHECK((a * a.inv()).is_one());
    }
}

TEST_CASE("reduction mod p commutes with integer arithmetic") {
    Field fp(10007);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        std::int64_t x = std::int64_t(rng() % 1000000) - 500000;
        std::int64_t y = std::int64_t(rng() % 1000000) - 500000;
        FieldElement fx(fp, x), fy(fp, y);
        CHECK((fx + fy) == FieldElement(fp, x + y));
        CHECK((fx * fy) == FieldElement(fp, x * y));
        CHECK((fx - fy) == FieldElement(fp, x - y));
    }
}

TEST_CASE("errors") {
    Field f7(7), f5(5);
    CHECK_THROWS_AS(FieldElement(f7, 0).inv(), DivisionByZero);
    CHECK_THROWS_AS(FieldElement(f7, 3) / FieldElement(f7, 0),
                    DivisionByZero);
    CHECK_THROWS_AS(FieldElement(f7, 1) + FieldElement(f5, 1), MixedFields);
}

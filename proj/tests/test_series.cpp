#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lagmul/series.hpp"

using namespace lagmul;

namespace {

/// Independent expansion route: dense long division of numerator by the
/// fully expanded denominator, truncated.
IntSeries long_division_prefix(const RationalGF& g, std::size_t k) {
    IntSeries den{1};
    for (unsigned i = 0; i < g.one_minus_t_power; ++i)
        den = int_poly_mul(den, IntSeries{1, -1});
    for (std::uint64_t d : g.linear_factors)
        den = int_poly_mul(den, IntSeries{1, -BigInt(d)});
    IntSeries out(k + 1, 0);
    IntSeries rem = g.numerator;
    rem.resize(std::max(rem.size(), k + 1), 0);
    for (std::size_t i = 0; i <= k; ++i) {
        BigInt c = rem[i];  // den[0] == 1
        out[i] = c;
        for (std::size_t j = 0; j < den.size() && i + j < rem.size(); ++j)
            rem[i + j] -= c * den[j];
    }
    return out;
}

}  // namespace

TEST_CASE("series coefficient examples") {
    // 2(1-t)^2 / ((1-2t)(1-t)), coefficient of t^1
    RationalGF g1;
    g1.numerator = one_minus_t_pow(2);
    for (auto& c : g1.numerator) c *= 2;
    g1.linear_factors = {2, 1};
    CHECK(series_coefficient(g1, 1) == 2);

    // 3(1-t)^3 / ((1-3t)(1-t)), coefficient of t^2
    RationalGF g2;
    g2.numerator = one_minus_t_pow(3);
    for (auto& c : g2.numerator) c *= 3;
    g2.linear_factors = {3, 1};
    CHECK(series_coefficient(g2, 2) == 12);

    // k = 0 is evaluation of the numerator at t = 0
    CHECK(series_coefficient(g2, 0) == 3);
}

TEST_CASE("gf_multiply") {
    RationalGF g;
    g.numerator = {1};
    g.one_minus_t_power = 1;  // 1/(1-t)
    auto same = gf_multiply(g, {1});
    CHECK(series_prefix(same, 5) == series_prefix(g, 5));

    // (1-t)/(1-t) telescopes to the constant series 1
    auto tele = gf_multiply(g, {1, -1});
    CHECK(series_coefficient(tele, 0) == 1);
    for (std::size_t k = 1; k <= 6; ++k)
        CHECK(series_coefficient(tele, k) == 0);

    // (1-t^2)/(1-t)^2 = (1+t)/(1-t): coefficient 2 for k >= 1
    RationalGF h;
    h.numerator = {1};
    h.one_minus_t_power = 2;
    auto r = gf_multiply(h, {1, 0, -1});
    CHECK(series_coefficient(r, 0) == 1);
    for (std::size_t k = 1; k <= 6; ++k)
        CHECK(series_coefficient(r, k) == 2);
}

TEST_CASE("milnor_gf instances") {
    auto g = milnor_gf(2, {2, 1});
    CHECK(g.numerator == IntSeries{2, -4, 2});  // 2(1-t)^2
    CHECK(g.linear_factors == std::vector<std::uint64_t>{2, 1});
    CHECK(series_coefficient(g, 1) == 2);

    // all-ones degrees collapse to the constant series 1
    auto ones = milnor_gf(3, {1, 1, 1});
    CHECK(series_coefficient(ones, 0) == 1);
    CHECK(series_coefficient(ones, 1) == 0);
    CHECK(series_coefficient(ones, 2) == 0);

    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<std::uint32_t> ds(r + 1, 1);
            CHECK(series_coefficient(milnor_gf(n, ds), n - r) == 0);
        }
    }
}

TEST_CASE("two independent expansion routes agree") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        RationalGF g;
        std::size_t deg = rng() % 5;
        for (std::size_t i = 0; i <= deg; ++i)
            g.numerator.push_back(std::int64_t(rng() % 21) - 10);
        g.one_minus_t_power = unsigned(rng() % 4);
        std::size_t nf = rng() % 3;
        for (std::size_t i = 0; i < nf; ++i)
            g.linear_factors.push_back(1 + rng() % 4);
        CHECK(series_prefix(g, 10) == long_division_prefix(g, 10));
    }
}

TEST_CASE("quotient_degree_dims expands a Hilbert numerator") {
    // N = 1 - t^2 over (1-t)^1: dims 1,1,0,0,...
    auto d = quotient_degree_dims({1, 0, -1}, 1, 5);
    CHECK(d == IntSeries{1, 1, 0, 0, 0, 0});
    // zero ideal in 2 vars: dims are k+1
    auto z = quotient_degree_dims({1}, 2, 4);
    CHECK(z == IntSeries{1, 2, 3, 4, 5});
}

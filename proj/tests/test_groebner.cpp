#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "lagmul/groebner.hpp"

using namespace lagmul;

namespace {

RingPtr ring2(std::uint64_t p = 0, OrderKind k = OrderKind::degrevlex) {
    return make_ring(Field(p), {"x1", "x2"}, MonomialOrder{k});
}

Polynomial P(const RingPtr& r, const std::string& s) {
    return parse_polynomial(s, r);
}

}  // namespace

TEST_CASE("normal form examples") {
    auto r = ring2();
    IdealWithBasis i1(r, {P(r, "x1")});
    CHECK(normal_form(P(r, "x1^2"), i1).is_zero());

    IdealWithBasis i2(r, {P(r, "x2")});
    CHECK(normal_form(P(r, "x1^2+x2^2-1"), i2) == P(r, "x1^2-1"));

    IdealWithBasis i3(r, {P(r, "x1"), P(r, "x2")});
    CHECK(normal_form(P(r, "1"), i3) == P(r, "1"));
}

TEST_CASE("buchberger examples") {
    auto r = ring2();
    IdealWithBasis single(r, {P(r, "x1")});
    CHECK(single.reduced_basis() == std::vector<Polynomial>{P(r, "x1")});

    // hand Buchberger run: {x1^2+x2^2-1, x2} -> {x2, x1^2-1}
    IdealWithBasis circle(r, {P(r, "x1^2+x2^2-1"), P(r, "x2")});
    const auto& gb = circle.reduced_basis();
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == P(r, "x2"));
    CHECK(gb[1] == P(r, "x1^2-1"));

    IdealWithBasis unit(r, {P(r, "x1"), P(r, "x1+1")});
    CHECK(unit.is_unit());
    CHECK(unit.reduced_basis() == std::vector<Polynomial>{P(r, "1")});

    IdealWithBasis zero(r, {});
    CHECK(zero.is_zero_ideal());
}

TEST_CASE("every input generator reduces to zero") {
    auto r = make_ring(Field(32003), {"x1", "x2", "x3"});
    std::vector<Polynomial> gens{P(r, "x1^2*x3 - 2*x2 + 1"),
                                 P(r, "x1*x2 - x3^2"),
                                 P(r, "x2^3 + x1 - 7")};
    IdealWithBasis ideal(r, gens);
    for (const auto& g : gens) CHECK(ideal.contains(g));
    // S-polynomial closure is implied by the reduced-basis contract;
    // spot-check products stay inside
    CHECK(ideal.contains(gens[0] * gens[1] + gens[2]));
}

TEST_CASE("quotient dimension") {
    auto r = ring2();
    IdealWithBasis a(r, {P(r, "x1^2-1"), P(r, "x2")});
    CHECK(quotient_dimension(a) == 2);  // standard monomials {1, x1}
    auto sm = standard_monomials(a);
    REQUIRE(sm.size() == 2);
    CHECK(sm[0].is_one());
    CHECK(sm[1] == Monomial({1, 0}));

    IdealWithBasis b(r, {P(r, "x1"), P(r, "x2")});
    CHECK(quotient_dimension(b) == 1);

    IdealWithBasis c(r, {P(r, "x1")});
    CHECK_THROWS_AS(quotient_dimension(c), InfiniteDimensional);
}

TEST_CASE("krull dimension") {
    auto r = ring2();
    IdealWithBasis a(r, {P(r, "x1*x2")});
    CHECK(krull_dimension(a) == 1);

    auto r3 = make_ring(Field(0), {"x1", "x2", "x3"});
    IdealWithBasis zero(r3, {});
    CHECK(krull_dimension(zero) == 3);

    IdealWithBasis b(r, {P(r, "x1"), P(r, "x2")});
    CHECK(krull_dimension(b) == 0);

    IdealWithBasis unit(r, {P(r, "1")});
    CHECK(krull_dimension(unit) == -1);
}

TEST_CASE("hilbert numerator examples") {
    auto r = ring2();
    IdealWithBasis zero(r, {});
    CHECK(hilbert_numerator(zero) == std::vector<long long>{1});

    auto r1 = make_ring(Field(0), {"x1"});
    IdealWithBasis sq(r1, {P(r1, "x1^2")});
    CHECK(hilbert_numerator(sq) == std::vector<long long>{1, 0, -1});

    IdealWithBasis m(r, {P(r, "x1^2"), P(r, "x1*x2")});
    CHECK(hilbert_numerator(m) == std::vector<long long>{1, 0, -2, 1});

    IdealWithBasis inhom(r, {P(r, "x1^2-1")});
    CHECK_THROWS_AS(hilbert_numerator(inhom), NotHomogeneous);
}

TEST_CASE("hilbert numerator matches per-degree standard monomial counts") {
    std::mt19937_64 rng(23);
    auto r = make_ring(Field(7), {"x1", "x2", "x3"});
    for (int trial = 0; trial < 20; ++trial) {
        // random homogeneous monomial-and-binomial ideals
        std::vector<Polynomial> gens;
        int k = 1 + int(rng() % 3);
        for (int i = 0; i < k; ++i) {
            std::uint32_t d = 1 + rng() % 4;
            auto ms = monomials_of_degree(3, d);
            const Monomial& m1 = ms[rng() % ms.size()];
            const Monomial& m2 = ms[rng() % ms.size()];
            Polynomial g =
                Polynomial::monomial_term(r, m1, FieldElement(r->field, 1)) +
                Polynomial::monomial_term(
                    r, m2, FieldElement(r->field,
                                        std::int64_t(rng() % 7)));
            if (g.is_zero()) continue;
            gens.push_back(g);
        }
        if (gens.empty()) continue;
        IdealWithBasis ideal(r, gens);
        auto num = hilbert_numerator(ideal);
        // expand N(t)/(1-t)^3 and compare with direct counts up to degree 12
        std::vector<long long> dims(13, 0);
        for (std::size_t i = 0; i < num.size() && i < dims.size(); ++i)
            dims[i] = num[i];
        for (int pass = 0; pass < 3; ++pass) {
            long long acc = 0;
            for (auto& d : dims) {
                acc += d;
                d = acc;
            }
        }
        for (std::uint32_t d = 0; d <= 12; ++d)
            CHECK(dims[d] ==
                  (long long)standard_monomial_count(ideal, d));
    }
}

TEST_CASE("reduced basis is independent of generator order") {
    std::mt19937_64 rng(31);
    auto r = make_ring(Field(32003), {"x1", "x2", "x3"});
    std::vector<Polynomial> gens{P(r, "x1^2 + x2*x3 - 3"),
                                 P(r, "x2^2 - x1*x3 + 1"),
                                 P(r, "x3^2 + x1 - x2")};
    IdealWithBasis base(r, gens);
    auto expected = base.reduced_basis();
    for (int i = 0; i < 5; ++i) {
        std::shuffle(gens.begin(), gens.end(), rng);
        IdealWithBasis shuffled(r, gens);
        CHECK(shuffled.reduced_basis() == expected);
    }
}

TEST_CASE("quotient dimension is monomial-order invariant") {
    auto rd = ring2(0, OrderKind::degrevlex);
    auto rl = ring2(0, OrderKind::lex);
    std::vector<std::vector<std::string>> cases{
        {"x1^2-1", "x2"},
        {"x1^3+x2^3-1", "x1*x2-1"},
        {"x1^2+x2^2-1", "x1-x2"},
    };
    for (const auto& c : cases) {
        std::vector<Polynomial> gd, gl;
        for (const auto& s : c) {
            gd.push_back(P(rd, s));
            gl.push_back(P(rl, s));
        }
        CHECK(quotient_dimension(IdealWithBasis(rd, gd)) ==
              quotient_dimension(IdealWithBasis(rl, gl)));
    }
}

TEST_CASE("complete intersection hilbert numerator is prod(1 - t^d_i)") {
    auto r = make_ring(Field(32003), {"x1", "x2", "x3"});
    IdealWithBasis ci(r, {P(r, "x1^2 + x2^2 + x3^2"),
                          P(r, "x1^3 + 2*x2^3 + 5*x3^3")});
    // (1 - t^2)(1 - t^3) = 1 - t^2 - t^3 + t^5
    CHECK(hilbert_numerator(ci) ==
          std::vector<long long>{1, 0, -1, -1, 0, 1});
    CHECK(krull_dimension(ci) == 1);  // cone dimension n - r
}

TEST_CASE("krull dimension of random regular sequences is n - r") {
    std::mt19937_64 rng(41);
    auto r = make_ring(Field(32003), {"x1", "x2", "x3", "x4"});
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 2; ++i) {
            std::vector<Term> terms;
            std::uint32_t d = 2 + rng() % 2;
            for (const auto& m : monomials_of_degree(4, d))
                terms.push_back({m, FieldElement(r->field,
                                                 std::int64_t(rng() % 32003))});
            gens.push_back(Polynomial::from_terms(r, std::move(terms)));
        }
        IdealWithBasis ideal(r, gens);
        if (ideal.is_unit()) continue;
        CHECK(krull_dimension(ideal) == 2);
    }
}

TEST_CASE("resource guard fails loudly") {
    auto saved = groebner_limits();
    groebner_limits().max_basis = 1;
    auto r = make_ring(Field(7), {"x1", "x2", "x3"});
    CHECK_THROWS_AS(
        IdealWithBasis(r, {P(r, "x1^2*x2-x3"), P(r, "x1*x2^2-1")})
            .reduced_basis(),
        ResourceLimit);
    groebner_limits() = saved;
}

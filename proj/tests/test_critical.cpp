#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lagmul/critical.hpp"

using namespace lagmul;

namespace {

RingPtr ring2(std::uint64_t p = 0) {
    return make_ring(Field(p), {"x1", "x2"});
}

Polynomial P(const RingPtr& r, const std::string& s) {
    return parse_polynomial(s, r);
}

ConstrainedSystem circle_system(std::uint64_t p = 0) {
    auto r = ring2(p);
    return ConstrainedSystem::make(r, P(r, "x1"), {P(r, "x1^2+x2^2-1")});
}

ConstrainedSystem parabola_system(std::uint64_t p = 0) {
    auto r = ring2(p);
    return ConstrainedSystem::make(r, P(r, "x2"), {P(r, "x2-x1^2")});
}

ConstrainedSystem fermat_system() {
    auto r = make_ring(Field(0), {"x1", "x2", "x3"});
    return ConstrainedSystem::make(r, P(r, "x1+2*x2"),
                                   {P(r, "x1^3+x2^3+x3^3-1")});
}

}  // namespace

TEST_CASE("augmented jacobian layout") {
    auto sys = circle_system();
    auto r = sys.ring;
    auto m = augmented_jacobian(sys);
    REQUIRE(m.rows == 2);
    REQUIRE(m.cols == 2);
    CHECK(m.at(0, 0) == P(r, "2*x1"));
    CHECK(m.at(0, 1) == P(r, "2*x2"));
    CHECK(m.at(1, 0) == P(r, "1"));
    CHECK(m.at(1, 1) == P(r, "0"));

    auto par = parabola_system();
    auto mp = augmented_jacobian(par);
    CHECK(mp.at(0, 0) == P(par.ring, "-(2*x1)"));
    CHECK(mp.at(0, 1) == P(par.ring, "1"));
    CHECK(mp.at(1, 0).is_zero());
    CHECK(mp.at(1, 1) == P(par.ring, "1"));

    // char-2 derivative of squares vanishes
    auto r2 = ring2(2);
    auto sys2 = ConstrainedSystem::make(r2, P(r2, "x1"),
                                        {P(r2, "x1^2+x2^2-1")});
    auto m2 = augmented_jacobian(sys2);
    CHECK(m2.at(0, 0).is_zero());
    CHECK(m2.at(0, 1).is_zero());
}

TEST_CASE("minor ideal enumeration") {
    auto sys = circle_system();
    auto r = sys.ring;
    auto m = augmented_jacobian(sys);
    auto minors2 = minor_ideal(m, 2);
    REQUIRE(minors2.size() == 1);
    CHECK(minors2[0] == P(r, "-(2*x2)"));

    PolyMatrix id = PolyMatrix::zero(r, 2, 2);
    id.at(0, 0) = P(r, "1");
    id.at(1, 1) = P(r, "1");
    CHECK(minor_ideal(id, 2) == std::vector<Polynomial>{P(r, "1")});

    auto minors1 = minor_ideal(m, 1);
    REQUIRE(minors1.size() == 4);
    CHECK(minors1[0] == P(r, "2*x1"));
    CHECK(minors1[1] == P(r, "2*x2"));
    CHECK(minors1[2] == P(r, "1"));
    CHECK(minors1[3].is_zero());

    CHECK_THROWS_AS(minor_ideal(m, 3), KTooLarge);
}

TEST_CASE("critical ideal") {
    auto sys = circle_system();
    auto r = sys.ring;
    IdealWithBasis ideal = critical_ideal(sys);
    REQUIRE(ideal.generators().size() == 2);
    CHECK(ideal.generators()[0] == P(r, "x1^2+x2^2-1"));
    CHECK(ideal.generators()[1] == P(r, "-(2*x2)"));
    CHECK(ideal.reduced_basis() ==
          std::vector<Polynomial>{P(r, "x2"), P(r, "x1^2-1")});

    auto par = parabola_system();
    CHECK(critical_ideal(par).reduced_basis() ==
          std::vector<Polynomial>{P(par.ring, "x2"), P(par.ring, "x1")});

    // objective equal to the constraint: duplicated row kills the minors
    auto rr = ring2();
    auto dup = ConstrainedSystem::make(rr, P(rr, "x1^2+x2^2-1"),
                                       {P(rr, "x1^2+x2^2-1")});
    IdealWithBasis dupi = critical_ideal(dup);
    IdealWithBasis just_f1(rr, {P(rr, "x1^2+x2^2-1")});
    CHECK(dupi.reduced_basis() == just_f1.reduced_basis());
}

TEST_CASE("milnor sum three instances") {
    CHECK(milnor_sum(circle_system()) == 2);
    CHECK(milnor_sum(parabola_system()) == 1);
    CHECK(milnor_sum(fermat_system()) == 12);
}

TEST_CASE("non-isolated critical locus is an error") {
    auto r = ring2();
    auto dup = ConstrainedSystem::make(r, P(r, "x1^2+x2^2-1"),
                                       {P(r, "x1^2+x2^2-1")});
    CHECK_THROWS_AS(milnor_sum(dup), NonIsolatedCritical);
}

TEST_CASE("lagrange jacobian dimension") {
    CHECK(lagrange_jacobian_dimension(circle_system()) == 2);
    CHECK(lagrange_jacobian_dimension(parabola_system()) == 1);

    // n=1 is rejected (r < n required), so exercise the reduced-point case
    // via its ideal directly: (y1, x1) in K[x1, y1]
    auto r = make_ring(Field(0), {"x1", "y1"});
    IdealWithBasis pt(r, {P(r, "y1"), P(r, "x1")});
    CHECK(quotient_dimension(pt) == 1);

    CHECK(lagrange_jacobian_dimension(fermat_system()) == 12);
}

TEST_CASE("predicted milnor sum") {
    CHECK(predicted_milnor_sum(2, {2, 1}) == 2);
    CHECK(predicted_milnor_sum(3, {3, 1}) == 12);
    CHECK(predicted_milnor_sum(3, {1, 1, 1}) == 0);
}

TEST_CASE("projective emptiness") {
    auto r = ring2();
    CHECK(proj_variety_empty({P(r, "x1"), P(r, "x2")}));
    CHECK_FALSE(proj_variety_empty({P(r, "x1^2+x2^2")}));
    CHECK(proj_variety_empty({P(r, "x1^2+x2^2"), P(r, "x1")}));
    CHECK_THROWS_AS(proj_variety_empty({P(r, "x1^2-1")}), NotHomogeneous);
}

TEST_CASE("projective smooth complete intersection certificate") {
    auto r3 = make_ring(Field(0), {"x0", "x1", "x2"});
    auto conic = proj_smooth_ci({parse_polynomial("x1^2+x2^2-x0^2", r3)});
    CHECK(conic.ok);
    CHECK_FALSE(conic.empty_scheme);

    auto r = ring2();
    auto dbl = proj_smooth_ci({P(r, "x1^2")});
    CHECK_FALSE(dbl.ok);

    auto empty = proj_smooth_ci({P(r, "x1^2+x2^2"), P(r, "x1")});
    CHECK(empty.ok);
    CHECK(empty.empty_scheme);
}

TEST_CASE("hypothesis reports") {
    auto rep = check_hypotheses(circle_system());
    CHECK(rep.h1.ok);
    CHECK(rep.h2.ok);
    CHECK(rep.h3.ok);
    CHECK(rep.h4);
    CHECK(rep.all_pass());
    // the leading forms x1^2+x2^2 and then +x1 cut nothing in P^1
    CHECK(rep.h3.empty_scheme);

    auto par = check_hypotheses(parabola_system());
    CHECK_FALSE(par.h2.ok);  // leading form -x1^2 is non-reduced at (0:1)
    CHECK_FALSE(par.all_pass());
}

TEST_CASE("H4 characteristic condition") {
    // objective of degree 2 over F_2 fails H4
    auto r = ring2(2);
    auto sys = ConstrainedSystem::make(
        r, P(r, "x1^2+x1*x2"), {P(r, "x1^2+x2^2-1")});
    CHECK_FALSE(check_hypotheses(sys).h4);
    // degree coprime to char passes
    auto sys3 = ConstrainedSystem::make(r, P(r, "x1"),
                                        {P(r, "x1^2+x2^2-1")});
    CHECK(check_hypotheses(sys3).h4);
}

TEST_CASE("brute force critical points over F_7") {
    auto sys = circle_system(7);
    auto pts = brute_force_critical_points(sys);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == Point{1, 0});
    CHECK(pts[1] == Point{6, 0});

    auto par = parabola_system(7);
    auto ppts = brute_force_critical_points(par);
    REQUIRE(ppts.size() == 1);
    CHECK(ppts[0] == Point{0, 0});

    CHECK_THROWS_AS(brute_force_critical_points(circle_system(0)),
                    RationalFieldUnsupported);
}

TEST_CASE("GB zero scan agrees with brute force") {
    for (std::uint64_t p : {std::uint64_t(5), std::uint64_t(7),
                            std::uint64_t(11)}) {
        auto sys = circle_system(p);
        auto ideal = critical_ideal(sys);
        auto from_gb = scan_common_zeros(ideal.reduced_basis());
        auto brute = brute_force_critical_points(sys);
        CHECK(from_gb == brute);
    }
}

TEST_CASE("empty critical locus yields milnor sum 0") {
    // f = x1 on the line x2 = 0: no critical points, ideal contains 1
    auto r = ring2();
    auto sys = ConstrainedSystem::make(r, P(r, "x1"), {P(r, "x2")});
    IdealWithBasis ideal = critical_ideal(sys);
    CHECK(ideal.is_unit());
    CHECK(milnor_sum(sys) == 0);
    CHECK(brute_force_critical_points(
              ConstrainedSystem::make(ring2(5),
                                      parse_polynomial("x1", ring2(5)),
                                      {parse_polynomial("x2", ring2(5))}))
              .empty());
}

TEST_CASE("linear change invariance over F_32003") {
    auto sys = circle_system(32003);
    std::size_t base = milnor_sum(sys);
    std::mt19937_64 rng(99);
    auto r = sys.ring;
    for (int trial = 0; trial < 3; ++trial) {
        // random invertible 2x2 over F_p
        std::int64_t a, b, c, d;
        do {
            a = std::int64_t(rng() % 32003);
            b = std::int64_t(rng() % 32003);
            c = std::int64_t(rng() % 32003);
            d = std::int64_t(rng() % 32003);
        } while ((a * d - b * c) % 32003 == 0);
        std::vector<Polynomial> images{
            Polynomial::variable(r, 0).scaled(FieldElement(r->field, a)) +
                Polynomial::variable(r, 1).scaled(FieldElement(r->field, b)),
            Polynomial::variable(r, 0).scaled(FieldElement(r->field, c)) +
                Polynomial::variable(r, 1).scaled(FieldElement(r->field, d))};
        auto tsys = ConstrainedSystem::make(
            r, sys.objective.substitute(images),
            {sys.constraints[0].substitute(images)});
        CHECK(milnor_sum(tsys) == base);
    }
}

TEST_CASE("system validation") {
    auto r = ring2();
    CHECK_THROWS_AS(
        ConstrainedSystem::make(r, P(r, "x1"), {P(r, "x1"), P(r, "x2")}),
        TooManyConstraints);
    CHECK_THROWS_AS(ConstrainedSystem::make(r, Polynomial::zero(r),
                                            {P(r, "x1")}),
                    ZeroPolynomial);
}

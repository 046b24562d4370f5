#include <doctest.h>

#include <cmath>

#include "ptb/variety.hpp"

using namespace ptb;

TEST_SUITE("variety") {

TEST_CASE("reducible components") {
    CHECK(reducible_components(7).size() == 5);  // floor(|9|/2 + 1)
    auto r0 = reducible_components(0);
    REQUIRE(r0.size() == 2);
    CHECK(r0[0].kind == ComponentKind::reducible_line);
    CHECK(r0[1].kind == ComponentKind::reducible_line);
    auto rm2 = reducible_components(-2);
    REQUIRE(rm2.size() == 1);
    CHECK(rm2[0].kind == ComponentKind::reducible_surface);

    for (int n : {-5, -1, 0, 3, 7, 10}) {
        CAPTURE(n);
        size_t expect = root_set(RootSetLabel::R, n + 2).elements.size();
        auto comps = reducible_components(n);
        CHECK(comps.size() == expect);
        for (const auto& c : comps) CHECK(component_residual(c, n, 20) <= 1e-10);
    }
}

TEST_CASE("canonical parametrization") {
    // n = 7, y = 0: x = eps, z = (0 - f_7(0))/x = 1/x
    VarietyPoint p = canonical_param(7, ComplexVal(0.0, 0.0), 1);
    CHECK(std::abs(p.x.value - 1.0) < 1e-12);
    CHECK(std::abs(p.z.value - 1.0) < 1e-12);
    CHECK(point_residual(p, 7) <= 1e-9);

    VarietyPoint q = canonical_param(6, ComplexVal(1.0, 0.0), 1);
    CHECK(point_residual(q, 6) <= 1e-9);

    // x = 0 fiber: y a root of f_{n-1} - 1 away from l_hat zeros gives (0,y,0)
    {
        int n = 7;
        auto rts = roots_complex(fib(n - 1) - IntPoly{1}, 1e-10);
        bool found = false;
        for (auto y : rts) {
            if (std::abs(hats(n).l_hat.eval(y)) < 1e-6) continue;
            VarietyPoint v = canonical_param(n, ComplexVal(y), 1);
            CHECK(std::abs(v.x.value) < 1e-7);
            CHECK(std::abs(v.z.value) < 1e-7);
            CHECK(point_residual(v, n) <= 1e-9);
            found = true;
        }
        CHECK(found);
    }

    // excluded fiber raises
    {
        auto zl = zero_set(FamilyPoly::l, 7);
        REQUIRE(!zl.elements.empty());
        double y0 = zl.elements.begin()->value();
        CHECK_THROWS_AS(canonical_param(7, ComplexVal(y0, 0.0), 1), on_excluded_fiber);
    }
}

TEST_CASE("two z expressions agree after branch resolution") {
    for (int n = -20; n <= 20; ++n) {
        if (std::abs(n) <= 2) continue;
        HatFamily hat = hats(n);
        FactorFamily fam = family(n);
        int hits = 0;
        for (int k = 0; k < 100; ++k) {
            double th = 0.05 + 3.04 * k / 100.0;
            cdouble y = 2.0 * std::cos(cdouble(th, 0.08 * std::sin(7 * th + n)));
            VarietyPoint p;
            try {
                p = canonical_param(n, ComplexVal(y), k % 2 ? 1 : -1);
            } catch (const on_excluded_fiber&) {
                continue;
            }
            CAPTURE(n);
            CHECK(point_residual(p, n) <= 1e-9);
            // radical form of the z coordinate, reconciled against phi_2
            cdouble rad = fam.k.eval(y) * std::sqrt(-hat.h_hat.eval(y) / hat.l_hat.eval(y));
            CHECK(std::min(std::abs(p.z.value - rad), std::abs(p.z.value + rad)) <= 1e-9);
            ++hits;
        }
        CHECK(hits >= 90);
    }
}

TEST_CASE("hyperelliptic model and genus") {
    CHECK(hyperelliptic_model(6) == IntPoly{3, 0, -1});
    CHECK(genus(6) == 0);
    CHECK(genus(5) == 1);
    CHECK(genus(7) == 2);
    CHECK(hyperelliptic_model(7) == IntPoly{1} - fib(6));

    int ns[] = {3, 4, 5, 6, 7, -3, -4, -6};
    int gs[] = {0, 0, 1, 0, 2, 1, 1, 1};
    for (int i = 0; i < 8; ++i) CHECK(genus(ns[i]) == gs[i]);

    CHECK_THROWS_AS(genus(2), non_hyperbolic_n);
    CHECK_THROWS_AS(hyperelliptic_model(-2), non_hyperbolic_n);

    for (int n = -50; n <= 50; ++n) {
        if (std::abs(n) <= 2) continue;
        CAPTURE(n);
        IntPoly m = hyperelliptic_model(n);
        CHECK(m.is_squarefree());
        CHECK(genus(n) == (m.degree() - 1) / 2);
    }
}

TEST_CASE("extra line") {
    CHECK(!extra_line(7).has_value());
    CHECK(extra_line(6).has_value());
    CHECK_THROWS_AS(extra_line_meets_canonical(7), no_extra_line);

    auto [p, q] = extra_line_meets_canonical(6);
    CHECK(std::abs(p.z.value - 1.1547005383792515) < 1e-10);
    CHECK(std::abs(q.z.value + 1.1547005383792515) < 1e-10);

    auto [p10, q10] = extra_line_meets_canonical(10);
    CHECK(std::abs(p10.z.value * p10.z.value - 1.6) < 1e-12);
    CHECK(std::abs(q10.z.value * q10.z.value - 1.6) < 1e-12);

    // both meet points are on D as well: canonical_param at y = 0 recovers them
    VarietyPoint on_d = canonical_param(6, ComplexVal(0.0, 0.0), 1);
    CHECK(std::abs(std::abs(on_d.z.value) - 1.1547005383792515) < 1e-10);
}

TEST_CASE("multiplicity points") {
    CHECK(multiplicity_points(7).size() == 6);
    CHECK(multiplicity_points(1).empty());
    CHECK(multiplicity_points(-2).empty());

    auto p4 = multiplicity_points(4);
    REQUIRE(p4.size() == 2);
    for (const auto& p : p4) {
        CHECK(std::abs(p.y.value) < 1e-12);
        CHECK(std::abs(std::abs(p.x.value) - std::sqrt(2.0)) < 1e-12);
        CHECK(std::abs(p.z.value) < 1e-12);
    }

    for (int n : {-7, -4, 3, 5, 8, 11}) {
        CAPTURE(n);
        auto pts = multiplicity_points(n);
        CHECK(pts.size() == 2 * static_cast<size_t>(family(n).j.degree()));
        for (const auto& p : pts) {
            CHECK(point_residual(p, n) <= 1e-9);  // phi1, phi2, phi3' (P lies in C')
            CHECK(std::abs(eval_reducible(p.x.value, p.y.value, p.z.value)) >= 1e-3);
        }
    }
}

TEST_CASE("intersection lattice") {
    auto i7 = intersection_lattice(7);
    // two points per y in R_9^fib plus the pair over y = 2
    CHECK(i7.size() == 2 * root_set(RootSetLabel::Rfib, 9).elements.size() + 2);
    bool found_sqrt5 = false;
    for (const auto& p : i7)
        if (std::abs(p.x.value - cdouble(0, std::sqrt(5.0))) < 1e-12 &&
            std::abs(p.y.value - 2.0) < 1e-12)
            found_sqrt5 = true;
    CHECK(found_sqrt5);

    auto i6 = intersection_lattice(6);
    int extra_line_pts = 0;
    for (const auto& p : i6)
        if (p.tag == PointTag::extra_line) {
            ++extra_line_pts;
            CHECK(std::abs(p.x.value) < 1e-12);
            CHECK(std::abs(p.y.value) < 1e-12);
            CHECK(std::abs(std::abs(p.z.value) - 2.0) < 1e-12);
        }
    CHECK(extra_line_pts == 2);

    bool found_m3 = false;
    for (const auto& p : intersection_lattice(-3))
        if (std::abs(p.x.value - std::sqrt(5.0)) < 1e-12 && std::abs(p.y.value - 2.0) < 1e-12)
            found_m3 = true;
    CHECK(found_m3);

    CHECK_THROWS_AS(intersection_lattice(-2), minus_two_unsupported);

    for (int n : {-6, -3, 4, 5, 6, 7, 12}) {
        CAPTURE(n);
        for (const auto& p : intersection_lattice(n)) {
            CAPTURE(p.y.re());
            CHECK(point_residual(p, n) <= 1e-9);
        }
    }
}

TEST_CASE("non-hyperbolic table") {
    for (int n = -2; n <= 2; ++n) {
        CAPTURE(n);
        auto comps = nonhyperbolic_table(n);
        CHECK(!comps.empty());
        for (const auto& c : comps) {
            CAPTURE(c.label);
            CHECK(component_residual(c, n, 20) <= 1e-10);
        }
    }
    CHECK_THROWS_AS(nonhyperbolic_table(3), out_of_range);

    // row shapes
    CHECK(nonhyperbolic_table(-1).size() == 2);  // one reducible line, one curve
    CHECK(nonhyperbolic_table(0).size() == 4);
    CHECK(nonhyperbolic_table(2).size() == 5);
    CHECK(nonhyperbolic_table(-2).size() == 4);
}

TEST_CASE("psl quotients") {
    PslQuotient q8 = psl_quotient(8);
    CHECK(q8.nonlift_00z_line);
    PslQuotient q6 = psl_quotient(6);
    CHECK_FALSE(q6.nonlift_00z_line);
    CHECK(q6.nonlift_line_q.has_value());

    PslQuotient q7 = psl_quotient(7);
    CHECK(q7.quotient_model == hyperelliptic_model(7));
    CHECK(q7.nonlift_points.empty());

    CHECK_THROWS_AS(psl_quotient(2), non_hyperbolic_n);

    // parametric-line consistency via the psl identity at u = 1/2, n = 6
    {
        int n = 6;
        cdouble u = 0.5;
        cdouble x2 = fib(n - 1).eval(u) + 1.0;
        cdouble x = std::sqrt(x2);
        cdouble z = (fib(n).eval(u) + u) / x;
        CHECK(std::abs(x * (fib(n + 1).eval(u) + 1.0) - z * fib(n).eval(u)) <= 1e-9);
        const auto& [q1, q2, q3] = *q6.nonlift_line_q;
        CHECK(std::abs(q1.eval(u * u) - x2) <= 1e-12);
        CHECK(std::abs(q2.eval(u * u) / q3.eval(u * u) - z * z) <= 1e-9);
    }

    // q1 and q3 as stated coincide; the redundancy is the identity zbar = q2/q1
    CHECK((*q6.nonlift_line_q)[0] == (*q6.nonlift_line_q)[2]);

    // every listed non-lift point satisfies the eps = -1 system at a lift
    for (int n : {4, 6, 8, 10, 12}) {
        CAPTURE(n);
        for (const auto& p : psl_quotient(n).nonlift_points) {
            double y = p.y_lift.value();
            cdouble x = p.x_is_sqrt2 ? std::sqrt(2.0) : 0.0;
            cdouble z = p.x_is_sqrt2 ? y / std::sqrt(2.0) : 0.0;
            CHECK(std::abs(fib(n - 1).eval(y) - (x * x - 1.0)) <= 1e-9);
            CHECK(std::abs(fib(n).eval(y) - (x * z - y)) <= 1e-9);
            CHECK(std::abs(x * (fib(n + 1).eval(y) + 1.0) - z * fib(n).eval(y)) <= 1e-9);
        }
    }
}

}  // TEST_SUITE

#include <doctest.h>

#include <complex>

#include "ptb/intpoly.hpp"

using namespace ptb;

namespace {

IntPoly rand_poly(gmp_randstate_t st, int deg, int bits) {
    std::vector<bigint> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) {
        mpz_urandomb(x.get_mpz_t(), st, static_cast<mp_bitcnt_t>(bits));
        bigint flip;
        mpz_urandomb(flip.get_mpz_t(), st, 1);
        if (flip == 1) x = -x;
    }
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
}

}  // namespace

TEST_SUITE("intpoly") {

TEST_CASE("addition") {
    IntPoly u{0, 1};
    CHECK((u + (-u)).is_zero());

    // f1 + f3 = u*f2, the recursion at n=2
    IntPoly f1{1}, f2{0, 1}, f3{-1, 0, 1};
    CHECK(f1 + f3 == u * f2);

    // h7 + l7
    IntPoly h7{-1, 1, 1}, l7{1, -2, -1, 1};
    CHECK(h7 + l7 == IntPoly{0, -1, 0, 1});
}

TEST_CASE("multiplication") {
    IntPoly p{3, 0, -2, 7};
    CHECK(p * IntPoly{1} == p);

    IntPoly j7{-1, -2, 1, 1}, l7{1, -2, -1, 1}, h7{-1, 1, 1};
    IntPoly f7{-1, 0, 6, 0, -5, 0, 1};
    CHECK(j7 * l7 == f7);

    IntPoly f6{0, 3, 0, -4, 0, 1};
    CHECK(h7 * l7 == f6 - IntPoly{1});
}

TEST_CASE("exact division") {
    IntPoly pm3{6, -3, -1, 1};  // u^3-u^2-3u+6
    CHECK(IntPoly::divrem_exact(pm3, IntPoly{2, 1}) == IntPoly{3, -3, 1});

    IntPoly l6{0, -3, 0, 1};
    CHECK(IntPoly::divrem_exact(l6, IntPoly{0, 1}) == IntPoly{-3, 0, 1});

    CHECK_THROWS_AS(IntPoly::divrem_exact(IntPoly{0, 0, 1}, IntPoly{0, 0, 0, 1}),
                    nonzero_remainder);
    CHECK_THROWS_AS(IntPoly::divrem_exact(IntPoly{1, 1}, IntPoly{0, 2}), nonzero_remainder);
}

TEST_CASE("gcd") {
    IntPoly u{0, 1};
    IntPoly l6{0, -3, 0, 1};
    CHECK(IntPoly::gcd(u, l6) == u);
    CHECK(IntPoly::gcd(IntPoly(), IntPoly{-2, 0, 1}) == IntPoly{-2, 0, 1});
    CHECK(IntPoly::gcd(IntPoly(), IntPoly{2, 0, -1}) == IntPoly{-2, 0, 1});
    CHECK_THROWS_AS(IntPoly::gcd(IntPoly(), IntPoly()), both_zero);

    // coprime pair
    CHECK(IntPoly::gcd(IntPoly{-1, 1}, IntPoly{1, 1}).is_constant());

    // common factor with content
    IntPoly a = IntPoly{2} * IntPoly{-1, 1} * IntPoly{1, 0, 1};
    IntPoly b = IntPoly{3} * IntPoly{-1, 1} * IntPoly{5, 1};
    CHECK(IntPoly::gcd(a, b) == IntPoly{-1, 1});
}

TEST_CASE("derivative and squarefree") {
    IntPoly f7{-1, 0, 6, 0, -5, 0, 1};
    CHECK(f7.derivative() == IntPoly{0, 12, 0, -20, 0, 6});
    CHECK(f7.is_squarefree());
    CHECK_FALSE(IntPoly{0, 0, 1}.is_squarefree());

    // f7 - f6 and f7 + f6, built from the recursion-built factors above
    IntPoly f6{0, 3, 0, -4, 0, 1};
    CHECK((f7 - f6).is_squarefree());
    CHECK((f7 + f6).is_squarefree());
    CHECK_THROWS_AS(IntPoly().is_squarefree(), zero_polynomial);
}

TEST_CASE("complex values carry their tolerance") {
    ComplexVal a(1.0, 0.0);
    CHECK(a.tol == 1e-10);
    ComplexVal b(1.0 + 5e-11, 0.0);
    CHECK(a.close_to(b));
    CHECK_FALSE(a.close_to(ComplexVal(1.0 + 1e-9, 0.0)));
    ComplexVal wide(1.0 + 1e-9, 0.0, 1e-8);
    CHECK(a.close_to(wide));  // the larger carried tolerance wins
}

TEST_CASE("complex evaluation") {
    IntPoly f5{1, 0, -3, 0, 1};
    CHECK(f5.eval(cdouble(2, 0)) == cdouble(5, 0));
    CHECK(f5.eval_int(2) == 5);

    IntPoly f4{0, -2, 0, 1};
    CHECK(f4.eval(cdouble(0, 0)) == cdouble(0, 0));

    IntPoly f3{-1, 0, 1};
    CHECK(f3.eval(cdouble(-2, 0)) == cdouble(3, 0));
}

TEST_CASE("roots") {
    auto r = roots_complex(IntPoly{-2, 0, 1}, 1e-10);
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0] - cdouble(-1.4142135623730951, 0)) < 1e-9);
    CHECK(std::abs(r[1] - cdouble(1.4142135623730951, 0)) < 1e-9);

    r = roots_complex(IntPoly{-1, 0, 1}, 1e-10);
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0] + 1.0) < 1e-10);
    CHECK(std::abs(r[1] - 1.0) < 1e-10);

    r = roots_complex(IntPoly{3, -3, 1}, 1e-10);
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0] - cdouble(1.5, -0.8660254037844386)) < 1e-9);
    CHECK(std::abs(r[1] - cdouble(1.5, 0.8660254037844386)) < 1e-9);

    CHECK_THROWS_AS(roots_complex(IntPoly{1}), zero_polynomial);
}

TEST_CASE("cyclotomic") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(4) == IntPoly{1, 0, 1});
    CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});

    // product over divisors reassembles u^12 - 1
    IntPoly prod{1};
    for (int e : {1, 2, 3, 4, 6, 12}) prod = prod * cyclotomic(e);
    CHECK(prod == IntPoly::monomial(12) - IntPoly{1});
}

TEST_CASE("ring axioms on random inputs") {
    gmp_randstate_t st;
    gmp_randinit_default(st);
    gmp_randseed_ui(st, 20260810);
    for (int trial = 0; trial < 40; ++trial) {
        IntPoly p = rand_poly(st, 1 + trial % 6, 256);
        IntPoly q = rand_poly(st, 1 + (trial / 2) % 5, 256);
        IntPoly r = rand_poly(st, 1 + (trial / 3) % 4, 256);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        CHECK(IntPoly::divrem_exact(p * q, p) == q);
    }
    gmp_randclear(st);
}

TEST_CASE("gcd divides and detects planted common factors") {
    gmp_randstate_t st;
    gmp_randinit_default(st);
    gmp_randseed_ui(st, 31337);
    for (int trial = 0; trial < 25; ++trial) {
        IntPoly g = rand_poly(st, 1 + trial % 3, 16);
        IntPoly p = rand_poly(st, 1 + (trial / 2) % 4, 16);
        IntPoly q = rand_poly(st, 1 + (trial / 3) % 4, 16);
        IntPoly d = IntPoly::gcd(p * g, q * g);
        // primitive polynomials divide each other over Z when they do over Q
        CHECK_NOTHROW(IntPoly::divrem_exact(d, g.primitive_part()));
        CHECK_NOTHROW(IntPoly::divrem_exact((p * g).primitive_part(), d));
        CHECK_NOTHROW(IntPoly::divrem_exact((q * g).primitive_part(), d));
    }
    gmp_randclear(st);
}

TEST_CASE("squarefree agrees with clustered numeric roots") {
    gmp_randstate_t st;
    gmp_randinit_default(st);
    gmp_randseed_ui(st, 777);
    for (int trial = 0; trial < 30; ++trial) {
        IntPoly p = rand_poly(st, 2 + trial % 5, 8);
        if (trial % 3 == 0) p = p * p;           // force repeated factors sometimes
        if (p.degree() > 12) continue;
        auto rts = roots_complex(p, 1e-9);
        size_t distinct = 0;
        std::vector<cdouble> seen;
        for (auto z : rts) {
            bool dup = false;
            for (auto w : seen)
                if (std::abs(z - w) < 1e-6) dup = true;
            if (!dup) {
                seen.push_back(z);
                ++distinct;
            }
        }
        CHECK(p.is_squarefree() == (distinct == rts.size()));
    }
    gmp_randclear(st);
}

TEST_CASE("json round trip") {
    IntPoly p{-1, 0, 6, 0, -5, 0, 1};
    CHECK(p.to_json_array() == R"(["-1","0","6","0","-5","0","1"])");
    CHECK(IntPoly::from_json_array(p.to_json_array()) == p);

    bigint big("123456789012345678901234567890");
    IntPoly q(std::vector<bigint>{big, -big});
    CHECK(IntPoly::from_json_array(q.to_json_array()) == q);
}

TEST_CASE("to_string") {
    CHECK(IntPoly{-1, 0, 6, 0, -5, 0, 1}.to_string() == "u^6 - 5u^4 + 6u^2 - 1");
    CHECK(IntPoly().to_string() == "0");
    CHECK(IntPoly{0, 1}.to_string("y") == "y");
}

}  // TEST_SUITE

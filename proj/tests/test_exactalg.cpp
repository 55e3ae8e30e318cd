#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "berndt/errors.hpp"
#include "berndt/ratpoly.hpp"

using namespace berndt;

namespace {

Rational q(long n, long d = 1) { return Rational(n, static_cast<unsigned long>(d)); }

RatPoly random_poly(std::mt19937_64& eng, long max_deg) {
    std::vector<Rational> c;
    long deg = static_cast<long>(eng() % (max_deg + 1));
    for (long i = 0; i <= deg; ++i) {
        long num = static_cast<long>(eng() % 41) - 20;
        long den = 1 + static_cast<long>(eng() % 9);
        c.emplace_back(num, static_cast<unsigned long>(den));
    }
    return RatPoly(std::move(c));
}

} // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4).to_string() == "-1/2");
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).denominator().to_string() == "1");
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational("7/21") == Rational(1, 3));
}

TEST_CASE("poly_arith examples") {
    RatPoly xp1{q(1), q(1)};   // 1 + x
    RatPoly xm1{q(-1), q(1)};  // -1 + x
    CHECK(xp1 + xm1 == RatPoly{q(0), q(2)});

    RatPoly omx{q(1), q(-1)};  // 1 - x
    CHECK(omx * omx == RatPoly{q(1), q(-2), q(1)});

    RatPoly p{q(-2), q(3)};
    CHECK((p * RatPoly()).is_zero());
    CHECK(p * RatPoly() == RatPoly());
}

TEST_CASE("poly_diff examples") {
    CHECK(RatPoly{q(0), q(0), q(1)}.diff() == RatPoly{q(0), q(2)});
    CHECK(RatPoly::constant(q(5)).diff().is_zero());
    CHECK(RatPoly{q(1), q(-2), q(1)}.diff() == RatPoly{q(-2), q(2)});
}

TEST_CASE("poly_eval examples") {
    CHECK(RatPoly{q(1), q(-1)}.eval(q(1, 2)) == q(1, 2));
    CHECK(RatPoly{q(1), q(-2), q(1)}.eval(q(1)) == q(0));
}

TEST_CASE("exactness: (a+b)-b == a up to degree 40") {
    std::mt19937_64 eng(12345);
    for (int i = 0; i < 50; ++i) {
        RatPoly a = random_poly(eng, 40), b = random_poly(eng, 40);
        CHECK((a + b) - b == a);
        CHECK((a * b) == (b * a));
    }
}

TEST_CASE("poly_compose_moebius") {
    // constant c with p = 3: the (-x)^0 factor and the 2! division leave c/2
    RatPoly c = RatPoly::constant(q(7));
    CHECK(poly_compose_moebius(c, 3) == RatPoly::constant(q(7, 2)));

    CHECK_THROWS_AS(poly_compose_moebius(RatPoly{q(0), q(1)}, 3), NonPolynomialResult);
    CHECK_THROWS_AS(poly_compose_moebius(c, 4), DomainError);

    // Formal identity: the composed polynomial evaluated at x0 agrees with
    // (-x0)^{(p-3)/2} a((1-x0)/(-x0)) / (p-1)! computed in plain rational
    // arithmetic, for every admissible degree.
    std::mt19937_64 eng(99);
    for (long p : {5L, 7L, 11L}) {
        long dmax = (p - 3) / 2;
        for (int rep = 0; rep < 8; ++rep) {
            RatPoly a = random_poly(eng, dmax);
            RatPoly composed = poly_compose_moebius(a, p);
            Rational x0(3 + static_cast<long>(eng() % 5), 7);
            Rational arg = (q(1) - x0) / (-x0);
            Rational direct = (-x0).pow(dmax) * a.eval(arg) /
                              Rational(Int::factorial(static_cast<unsigned long>(p - 1)), Int(1));
            CHECK(composed.eval(x0) == direct);
        }
    }
}

TEST_CASE("series arithmetic") {
    // (1 + u^2)(1 - u^2) = 1 - u^4
    PolySeries a(6), b(6);
    a.term(0) = RatPoly::constant(q(1));
    a.term(2) = RatPoly::constant(q(1));
    b.term(0) = RatPoly::constant(q(1));
    b.term(2) = RatPoly::constant(q(-1));
    PolySeries prod = a * b;
    CHECK(prod.term(0) == RatPoly::constant(q(1)));
    CHECK(prod.term(2).is_zero());
    CHECK(prod.term(4) == RatPoly::constant(q(-1)));

    // truncation at order 4 drops the u^4 term entirely
    PolySeries a4(4), b4(4);
    a4.term(0) = RatPoly::constant(q(1));
    a4.term(2) = RatPoly::constant(q(1));
    b4.term(0) = RatPoly::constant(q(1));
    b4.term(2) = RatPoly::constant(q(-1));
    PolySeries prod4 = a4 * b4;
    CHECK(prod4.truncation_order() == 4);
    CHECK(prod4.term(0) == RatPoly::constant(q(1)));
    CHECK(prod4.term(2).is_zero());

    CHECK(a / a == PolySeries::one(6));
}

TEST_CASE("series division guards") {
    PolySeries zero_lead(4);
    zero_lead.term(1) = RatPoly::constant(q(1));
    CHECK_THROWS_AS(PolySeries::one(4) / zero_lead, DivisorNotUnit);

    PolySeries poly_lead(4);
    poly_lead.term(0) = RatPoly{q(1), q(1)};  // 1 + x is not a unit of Q[x]
    CHECK_THROWS_AS(PolySeries::one(4) / poly_lead, DivisorNotUnit);
}

TEST_CASE("series div/mul round-trip on random unit series") {
    std::mt19937_64 eng(4242);
    for (int rep = 0; rep < 20; ++rep) {
        PolySeries a(8), b(8);
        for (std::size_t i = 0; i < 8; ++i) {
            a.term(i) = random_poly(eng, 3);
            b.term(i) = random_poly(eng, 3);
        }
        b.term(0) = RatPoly::constant(q(1 + static_cast<long>(eng() % 5)));
        CHECK((a / b) * b == a);
    }
}

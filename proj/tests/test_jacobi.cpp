#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "berndt/elliptic.hpp"
#include "berndt/errors.hpp"
#include "berndt/jacobi.hpp"
#include "oracles.hpp"

using namespace berndt;
using namespace berndt::jacobi;

namespace {

Rational q(long n, long d = 1) { return Rational(n, static_cast<unsigned long>(d)); }

bool close_digits(const BigReal& a, const BigReal& b, long digits) {
    BigReal diff = abs(a - b);
    if (diff.is_zero()) return true;
    BigReal scale = max(abs(a), abs(b));
    return diff.exponent2() - scale.exponent2() < -static_cast<long>(digits * 3.3219) - 1;
}

BigReal eval_poly(const RatPoly& p, const BigReal& t) {
    BigReal acc(0, t.precision());
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * t + BigReal(*it, t.precision());
    return acc;
}

} // namespace

TEST_CASE("base series: initial conditions, parity, leading terms") {
    auto base = jacobi_base_series(10);
    CHECK(base.sn.term(0).is_zero());
    CHECK(base.cn.term(0) == RatPoly::constant(q(1)));
    CHECK(base.dn.term(0) == RatPoly::constant(q(1)));
    // sn odd, cn/dn even
    for (std::size_t i = 0; i < 10; i += 2) CHECK(base.sn.term(i).is_zero());
    for (std::size_t i = 1; i < 10; i += 2) {
        CHECK(base.cn.term(i).is_zero());
        CHECK(base.dn.term(i).is_zero());
    }
    // sn = u - (1+x) u^3/6 + ...
    CHECK(base.sn.term(1) == RatPoly::constant(q(1)));
    CHECK(base.sn.term(3) == Rational(-1, 6) * RatPoly{q(1), q(1)});
    CHECK_THROWS_AS(jacobi_base_series(1), DomainError);
}

TEST_CASE("sn u^3 coefficient against numeric inversion at x = 0.3") {
    const mpfr_prec_t prec = 200;
    BigReal x = BigReal::from_string("0.3", prec);
    // sn(h) = h + c3 h^3 + O(h^5), so f(2h) - 2 f(h) = 6 c3 h^3 + O(h^5).
    BigReal h = BigReal(1, prec).ldexp2(-24);
    BigReal f1 = oracle::numeric_sn(h, x, prec);
    BigReal f2 = oracle::numeric_sn(h.ldexp2(1), x, prec);
    BigReal c3 = (f2 - f1.ldexp2(1)) / pow_si(h, 3) / 6;
    BigReal expect = -(BigReal(1, prec) + x) / 6;
    CHECK(close_digits(c3, expect, 8));
}

TEST_CASE("degenerate modulus x = 0 gives circular functions") {
    auto base = jacobi_base_series(12);
    // sn|_{x=0} = sin: u^{2k+1} coefficients (-1)^k/(2k+1)!
    for (long k = 0; k <= 2; ++k) {
        Rational expect =
            Rational((k % 2) ? -1 : 1) /
            Rational(Int::factorial(static_cast<unsigned long>(2 * k + 1)), Int(1));
        CHECK(base.sn.term(2 * k + 1).eval(q(0)) == expect);
        Rational expect_cos =
            Rational((k % 2) ? -1 : 1) /
            Rational(Int::factorial(static_cast<unsigned long>(2 * k)), Int(1));
        CHECK(base.cn.term(2 * k).eval(q(0)) == expect_cos);
        if (k > 0) CHECK(base.dn.term(2 * k).eval(q(0)) == q(0));
    }
}

TEST_CASE("table_S") {
    auto t = table_S(8);
    CHECK(t.entries.at(0) == RatPoly::constant(q(1)));
    CHECK(t.entries.at(2) == RatPoly{q(1), q(-1)});  // S_2 = 1 - x
    for (long idx = 0; idx <= 8; idx += 2) {
        CHECK(t.entries.at(idx).is_integral());
        CHECK(t.entries.at(idx).eval(q(0)) == q(1));  // cd -> cos at x = 0
    }
}

TEST_CASE("table_S S_2 against numeric differentiation at x = 0.3") {
    const mpfr_prec_t prec = 200;
    BigReal x = BigReal::from_string("0.3", prec);
    BigReal h = BigReal(1, prec).ldexp2(-30);
    auto cd_at = [&](const BigReal& u) {
        BigReal s = oracle::numeric_sn(u, x, prec);
        BigReal cn = sqrt(BigReal(1, prec) - s * s);
        BigReal dn = sqrt(BigReal(1, prec) - x * s * s);
        return cn / dn;
    };
    // cd is even: cd(h) = 1 - S_2(x) h^2/2 + O(h^4)
    BigReal s2 = (BigReal(1, prec) - cd_at(h)).ldexp2(1) / (h * h);
    CHECK(close_digits(s2, BigReal(1, prec) - x, 8));
}

TEST_CASE("table_A") {
    auto t = table_A(8);
    CHECK(t.entries.at(0) == RatPoly::constant(q(1)));
    CHECK(t.entries.at(2) == RatPoly{q(0), q(-1)});  // A_2 = -x
    for (long idx = 2; idx <= 8; idx += 2) {
        CHECK(t.entries.at(idx).is_integral());
        CHECK(t.entries.at(idx).eval(q(0)) == q(0));  // nd = 1 at x = 0
    }
}

TEST_CASE("calibration succeeds and fixes the expected conventions") {
    CHECK_NOTHROW(ensure_calibrated());
    auto tp = table_P(3);
    CHECK(tp.entries.at(1) == RatPoly::constant(q(1)));   // sd = u + ...
    CHECK(tp.entries.at(3) == RatPoly{q(-1), q(2)});      // P_3 = 2x - 1
    auto tq = table_Q(4);
    CHECK(tq.entries.at(2) == RatPoly::constant(q(2)));   // q_2 = 2
    CHECK(tq.entries.at(4) == RatPoly{q(-8), q(-8)});     // q_4 = -8 - 8x
    // sin^2 u = u^2 - u^4/3 + ...: q_4(0) = 4! (-1/3) = -8
    CHECK(tq.entries.at(4).eval(q(0)) == q(-8));
}

TEST_CASE("P zeros used by the integral evaluation") {
    auto tp = table_P(11);
    for (long m : {1L, 2L, 3L}) {
        CHECK(tp.entries.at(4 * m - 1).eval(q(1, 2)) == q(0));
        CHECK(tp.entries.at(4 * m - 3).diff().eval(q(1, 2)) == q(0));
    }
}

TEST_CASE("table_R: polynomiality and the p = 3 base case") {
    CHECK(table_R(3) == RatPoly::constant(q(1)));
    for (long p = 3; p <= 15; p += 2) CHECK_NOTHROW(table_R(p));
    CHECK_THROWS_AS(table_R(4), DomainError);
}

TEST_CASE("sinh-sum identity at p = 5, y = pi^2/2 (50-digit direct sum)") {
    const mpfr_prec_t prec = 220;
    BigReal y = BigReal::pi(prec) * BigReal::pi(prec) / 2;
    auto mp = ell::modular_point_from_y(y, prec);
    BigReal lhs = oracle::direct_series(hyper::SeriesFamily::X, 5, 1, y, prec);
    RatPoly rho = table_R(5);  // the polynomial R_4(1-x) in x
    BigReal one(1, prec);
    BigReal rhs = -(BigReal(Rational(Int::factorial(4), Int::pow2(6)), prec) * mp.x *
                    (one - mp.x) * pow_si(mp.z, 6) * eval_poly(rho, one - mp.x));
    CHECK(close_digits(lhs, rhs, 50));
}

TEST_CASE("cd-sum identity: direct sums vs the S table at y in {pi, 2}") {
    const mpfr_prec_t prec = 220;
    auto ts = table_S(6);
    for (int which = 0; which < 2; ++which) {
        BigReal y = which ? BigReal(2, prec) : BigReal::pi(prec);
        auto mp = ell::modular_point_from_y(y, prec);
        for (long n : {1L, 2L}) {
            long p = 2 * n + 1;
            BigReal lhs = oracle::direct_series(hyper::SeriesFamily::Y, p, 1, y, prec);
            BigReal rhs =
                -(sqrt(mp.x) * pow_si(mp.z, p) * eval_poly(ts.entries.at(p - 1), mp.x)).ldexp2(-1);
            CHECK(close_digits(lhs, rhs, 40));
        }
    }
}

TEST_CASE("nd-sum identity: direct sums vs the A table at p in {3, 5}") {
    const mpfr_prec_t prec = 220;
    auto ta = table_A(6);
    BigReal y = BigReal(2, prec);
    auto mp = ell::modular_point_from_y(y, prec);
    for (long p : {3L, 5L}) {
        BigReal lhs = oracle::direct_series(hyper::SeriesFamily::B, p, 1, y, prec);
        BigReal rhs = (sqrt(BigReal(1, prec) - mp.x) * pow_si(mp.z, p) *
                       eval_poly(ta.entries.at(p - 1), mp.x))
                          .ldexp2(-p);
        CHECK(close_digits(lhs, rhs, 40));
    }
}

TEST_CASE("table export JSON") {
    std::string js = table_to_json(table_S(2));
    CHECK(js.find("\"family\": \"S\"") != std::string::npos);
    CHECK(js.find("\"coefficients\": [\"1\", \"-1\"]") != std::string::npos);
}

TEST_CASE("table preconditions") {
    CHECK_THROWS_AS(table_P(0), DomainError);
    CHECK_THROWS_AS(table_Q(1), DomainError);
    CHECK_THROWS_AS(table_S(-1), DomainError);
}

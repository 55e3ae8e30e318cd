#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "berndt/closedform.hpp"
#include "berndt/errors.hpp"
#include "berndt/hyperseries.hpp"
#include "berndt/jacobi.hpp"
#include "oracles.hpp"

using namespace berndt;
using namespace berndt::cf;

namespace {

Rational q(long n, long d = 1) { return Rational(n, static_cast<unsigned long>(d)); }

bool close_digits(const BigReal& a, const BigReal& b, long digits) {
    BigReal diff = abs(a - b);
    if (diff.is_zero()) return true;
    BigReal scale = max(abs(a), abs(b));
    return diff.exponent2() - scale.exponent2() < -static_cast<long>(digits * 3.3219) - 1;
}

} // namespace

TEST_CASE("closed form arithmetic and canonicalization") {
    ClosedForm a = ClosedForm::monomial(q(3), 4, -2, 0);
    CHECK((a - a).is_zero());
    CHECK((a - a).eval(128).is_zero());

    ClosedForm g4_over_pi = ClosedForm::monomial(q(1), 4, -2, 0);
    CHECK(g4_over_pi.scaled(q(3)) == a);

    // z(1/2)^2: (Gamma^2 pi^{-3/2}/2)^2 = Gamma^4 pi^{-3}/4
    ClosedForm z_half = ClosedForm::monomial(q(1, 2), 2, -3, 0);
    CHECK(z_half * z_half == ClosedForm::monomial(q(1, 4), 4, -6, 0));

    // shuffled construction canonicalizes to the same value (idempotent merge)
    ClosedForm s1({Term{q(1), 2, 0, 0}, Term{q(2), 0, 1, 0}, Term{q(3), 2, 0, 0}});
    ClosedForm s2({Term{q(2), 0, 1, 0}, Term{q(4), 2, 0, 0}});
    CHECK(s1 == s2);
}

TEST_CASE("closed form eval") {
    const mpfr_prec_t prec = 256;
    CHECK(ClosedForm().eval(prec).is_zero());
    // z(1/2) form equals 2K(1/2)/pi
    ClosedForm z_half = ClosedForm::monomial(q(1, 2), 2, -3, 0);
    BigReal K_half = ell::complete_elliptic_K(BigReal(q(1, 2), prec));
    CHECK(close_digits(z_half.eval(prec), K_half.ldexp2(1) / BigReal::pi(prec), 70));
}

TEST_CASE("closed form JSON round-trip and LaTeX shape") {
    ClosedForm f({Term{q(1, 16384), 12, -10, 0}, Term{q(-1, 4096), 10, -7, -1}});
    CHECK(ClosedForm::from_json(f.to_json()) == f);
    std::string latex = f.to_latex();
    CHECK(latex.find("\\Gamma^{12}") != std::string::npos);
    CHECK(latex.find("16384") != std::string::npos);
    CHECK(latex.find("\\sqrt{2}") != std::string::npos);
    CHECK(latex.find("\\pi^{7/2}") != std::string::npos);
}

TEST_CASE("z derivatives at x = 1/2") {
    CHECK(z_derivative_at_half(0) == ClosedForm::monomial(q(1, 2), 2, -3, 0));
    CHECK(z_derivative_at_half(1) == ClosedForm::monomial(q(4), -2, 1, 0));
    CHECK(z_derivative_at_half(2) == ClosedForm::monomial(q(1, 2), 2, -3, 0));
    CHECK_THROWS_AS(z_derivative_at_half(-1), DomainError);
}

TEST_CASE("elliptic expression for the sinh cosh^2 family at p = 3") {
    // (1/16) x z^4 { 6 z' x (1-x)^{3/2} - sqrt(1-x) (3x-2) z + 2(x-1) }
    EllipticExpr expr = elliptic_expr_for(SeriesClosedForm::G2, 3);
    std::vector<ETerm> expect;
    // 2(x-1) x /16 = (x^2 - x)/8
    expect.push_back({RatPoly{q(0), q(-1, 8), q(1, 8)}, 4, 0, false, false});
    // 6 x^2 (1-x) /16 with sqrt(1-x), z^4 z'
    expect.push_back({RatPoly{q(0), q(0), q(3, 8), q(-3, 8)}, 4, 1, false, true});
    // -(3x-2) x /16 z^5 sqrt(1-x)
    expect.push_back({RatPoly{q(0), q(2, 16), q(-3, 16)}, 5, 0, false, true});
    CHECK(expr.terms().size() == 3);
    EllipticExpr manual(std::move(expect));
    REQUIRE(manual.terms().size() == expr.terms().size());
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(expr.terms()[i].poly == manual.terms()[i].poly);
        CHECK(expr.terms()[i].z_exp == manual.terms()[i].z_exp);
        CHECK(expr.terms()[i].zprime_exp == manual.terms()[i].zprime_exp);
        CHECK(expr.terms()[i].sqrt_x == manual.terms()[i].sqrt_x);
        CHECK(expr.terms()[i].sqrt_1mx == manual.terms()[i].sqrt_1mx);
    }
}

TEST_CASE("elliptic expression for the half-odd family at p = 3") {
    // (1/2) z^3 sqrt(x(1-x)) { 4 z'(1-x)x + (1-2x) z - sqrt(1-x) }
    EllipticExpr expr = elliptic_expr_for(SeriesClosedForm::Gprime2, 3);
    // terms: sqrt(x) * (-(1-x)/2)  z^3 ; sqrt(x)sqrt(1-x) 2x(1-x) z^3 z';
    //        sqrt(x)sqrt(1-x) (1-2x)/2 z^4
    REQUIRE(expr.terms().size() == 3);
    for (const auto& t : expr.terms()) {
        if (t.z_exp == 3 && t.zprime_exp == 0) {
            CHECK(t.poly == RatPoly{q(-1, 2), q(1, 2)});
            CHECK(t.sqrt_x);
            CHECK(!t.sqrt_1mx);
        } else if (t.z_exp == 3 && t.zprime_exp == 1) {
            CHECK(t.poly == RatPoly{q(0), q(2), q(-2)});
            CHECK(t.sqrt_x);
            CHECK(t.sqrt_1mx);
        } else {
            CHECK(t.z_exp == 4);
            CHECK(t.poly == RatPoly{q(1, 2), q(-1)});
            CHECK(t.sqrt_x);
            CHECK(t.sqrt_1mx);
        }
    }
}

TEST_CASE("elliptic expression for the sinh^2 cosh family at p = 3") {
    // (1/2) sqrt(x) z^4 { -6 z'(x-1)^2 x - (x-1)(3x-1) z + (1-2x) sqrt(1-x) }
    EllipticExpr expr = elliptic_expr_for(SeriesClosedForm::Gbar1, 3);
    REQUIRE(expr.terms().size() == 3);
    for (const auto& t : expr.terms()) {
        if (t.zprime_exp == 1) {
            // -3 x (x-1)^2 = -3x^3 + 6x^2 - 3x
            CHECK(t.z_exp == 4);
            CHECK(t.poly == RatPoly{q(0), q(-3), q(6), q(-3)});
            CHECK(t.sqrt_x);
            CHECK(!t.sqrt_1mx);
        } else if (t.z_exp == 5) {
            // -(x-1)(3x-1)/2 = (-3x^2 + 4x - 1)/2
            CHECK(t.poly == RatPoly{q(-1, 2), q(2), q(-3, 2)});
            CHECK(t.sqrt_x);
            CHECK(!t.sqrt_1mx);
        } else {
            CHECK(t.z_exp == 4);
            CHECK(t.poly == RatPoly{q(1, 2), q(-1)});
            CHECK(t.sqrt_x);
            CHECK(t.sqrt_1mx);
        }
    }
}

TEST_CASE("expression evaluation matches the series at a generic point") {
    const mpfr_prec_t prec = 224;
    for (const auto& yv : {BigReal(2, prec), BigReal::pi(prec)}) {
        auto mp = ell::modular_point_from_y(yv, prec);
        BigReal lhs = hyper::eval_series({hyper::SeriesFamily::G, 3, 2, yv}, prec);
        BigReal rhs = elliptic_expr_eval(elliptic_expr_for(SeriesClosedForm::G2, 3), mp, prec);
        CHECK(close_digits(lhs, rhs, 45));
    }
}

TEST_CASE("closed forms at y = pi, m = 1 (printed example blocks)") {
    ClosedForm g2 = closed_form_at_pi(SeriesClosedForm::G2, 1);
    ClosedForm g2_expect({Term{q(1, 2048), 10, -15, -1}, Term{q(-1, 512), 8, -12, 0},
                          Term{q(3, 256), 6, -11, -1}});
    CHECK(g2 == g2_expect);

    ClosedForm gp2 = closed_form_at_pi(SeriesClosedForm::Gprime2, 1);
    ClosedForm gp2_expect({Term{q(1, 8), 4, -8, 0}, Term{q(-1, 32), 6, -9, -1}});
    CHECK(gp2 == gp2_expect);

    ClosedForm gb1 = closed_form_at_pi(SeriesClosedForm::Gbar1, 1);
    ClosedForm gb1_expect({Term{q(1, 256), 10, -15, -1}, Term{q(-3, 32), 6, -11, -1}});
    CHECK(gb1 == gb1_expect);
}

TEST_CASE("cosh^3 closed form") {
    const mpfr_prec_t prec = 224;
    for (long m : {1L, 2L}) {
        ClosedForm f = closed_form_cosh3(m);
        CHECK(f.terms().size() == 2);  // one pi^4-scaled and one Gamma^8-scaled group
        BigReal direct = oracle::direct_series(hyper::SeriesFamily::Xprime, 4 * m - 1, 3,
                                               BigReal::pi(prec), prec);
        CHECK(close_digits(f.eval(prec), direct, 40));
    }
}

TEST_CASE("berndt closed form m = 1 equals the printed block exactly") {
    ClosedForm b = berndt_closed_form(1);
    ClosedForm expect({Term{q(1, 16384), 12, -10, 0}, Term{q(-1, 4096), 10, -7, -1},
                       Term{q(1, 2048), 8, -4, 0}, Term{q(-3, 512), 6, -3, -1},
                       Term{q(3, 256), 4, -2, 0}});
    CHECK(b == expect);
}

TEST_CASE("berndt closed form shape and coefficient formulas for m = 1..3") {
    auto tp = jacobi::table_P(11);
    auto tq = jacobi::table_Q(10);
    for (long m : {1L, 2L, 3L}) {
        ClosedForm b = berndt_closed_form(m);
        REQUIRE(b.terms().size() == 5);
        Rational sign = (m % 2) ? q(1) : q(-1);  // (-1)^{m-1}
        // c_1 Gamma^{8m-4} pi^{-(2m-1)}
        const Term& t1 = b.terms().front();
        CHECK(t1.gamma_exp == 8 * m - 4);
        CHECK(t1.pi_half_exp == -2 * (2 * m - 1));
        CHECK(t1.two_half_exp == 0);
        Rational P = tp.entries.at(4 * m - 3).eval(q(1, 2));
        Rational c1 = sign * q(8 * m * m - 6 * m + 1) *
                      Rational(Int(1), Int::pow2(static_cast<unsigned long>(6 * m + 2))) * P;
        CHECK(t1.coef == c1);
        // c_3 Gamma^{8m} pi^{-2m} with c_3 = (-1)^{m-1} q_{4m-2}(-1) / 2^{8m+4}
        Rational qm1 = tq.entries.at(4 * m - 2).eval(q(-1));
        Rational c3 = sign * qm1 * Rational(Int(1), Int::pow2(static_cast<unsigned long>(8 * m + 4)));
        bool found_c3 = false;
        for (const auto& t : b.terms())
            if (t.gamma_exp == 8 * m && t.pi_half_exp == -4 * m && t.two_half_exp == 0) {
                CHECK(t.coef == c3);
                found_c3 = true;
            }
        CHECK(found_c3);
        // c_5 Gamma^{8m+4} pi^{-(2m+3)} with
        // c_5 = (-1)^m [(4m-6) P + P''] / 2^{6m+9}
        Rational Pdd = tp.entries.at(4 * m - 3).diff().diff().eval(q(1, 2));
        Rational c5 = -sign * (q(4 * m - 6) * P + Pdd) *
                      Rational(Int(1), Int::pow2(static_cast<unsigned long>(6 * m + 9)));
        const Term& t5 = b.terms().back();
        CHECK(t5.gamma_exp == 8 * m + 4);
        CHECK(t5.pi_half_exp == -2 * (2 * m + 3));
        CHECK(t5.coef == c5);
    }
}

TEST_CASE("berndt closed form m = 2: the Gamma^{12} coefficient is 63/16384") {
    ClosedForm b = berndt_closed_form(2);
    bool found = false;
    for (const auto& t : b.terms())
        if (t.gamma_exp == 12) {
            CHECK(t.coef == q(63, 16384));
            CHECK(t.pi_half_exp == -6);
            found = true;
        }
    CHECK(found);
}

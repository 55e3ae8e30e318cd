#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "berndt/elliptic.hpp"
#include "berndt/errors.hpp"
#include "oracles.hpp"

using namespace berndt;
using namespace berndt::ell;

namespace {

bool close_bits(const BigReal& a, const BigReal& b, long bits) {
    BigReal diff = abs(a - b);
    if (diff.is_zero()) return true;
    BigReal scale = max(abs(a), abs(b));
    return diff.exponent2() - scale.exponent2() < -bits;
}

bool close_digits(const BigReal& a, const BigReal& b, long digits) {
    return close_bits(a, b, static_cast<long>(digits * 3.3219) + 1);
}

} // namespace

TEST_CASE("agm basics") {
    const mpfr_prec_t prec = 256;
    CHECK(agm(BigReal(1, prec), BigReal(1, prec)) == BigReal(1, prec));
    // one AGM step leaves the limit unchanged: agm(4,1) = agm(5/2, 2)
    CHECK(close_bits(agm(BigReal(4, prec), BigReal(1, prec)),
                     agm(BigReal(Rational(5, 2), prec), BigReal(2, prec)), prec - 6));
    // homogeneity: agm(4,2) = 2 agm(2,1)
    CHECK(close_bits(agm(BigReal(4, prec), BigReal(2, prec)),
                     2 * agm(BigReal(2, prec), BigReal(1, prec)), prec - 6));
    CHECK_THROWS_AS(agm(BigReal(-1, prec), BigReal(1, prec)), DomainError);
}

TEST_CASE("agm(1, sqrt 2): reciprocal Gauss constant") {
    BigReal g300 = agm(BigReal(1, 300), sqrt(BigReal(2, 300)));
    BigReal g360 = agm(BigReal(1, 360), sqrt(BigReal(2, 360)));
    CHECK(close_bits(g300, g360.at_precision(300), 290));  // digits stable across precisions
    CHECK(close_digits(g300, BigReal::from_string("1.19814023473559220744", 300), 18));
}

TEST_CASE("complete_elliptic_K") {
    const mpfr_prec_t prec = 256;
    // z(1/2) = 2K(1/2)/pi equals Gamma^2/(2 pi^{3/2})
    BigReal K_half = complete_elliptic_K(BigReal(Rational(1, 2), prec));
    BigReal g = gamma_quarter(prec);
    BigReal pi = BigReal::pi(prec);
    BigReal lhs = K_half.ldexp2(1) / pi;
    BigReal rhs = g * g / (pi * sqrt(pi)).ldexp2(1);
    CHECK(close_digits(lhs, rhs, 70));

    // K -> pi/2 as x -> 0+
    BigReal tiny = pow_si(BigReal(10, prec), -30);
    CHECK(close_digits(complete_elliptic_K(tiny), pi.ldexp2(-1), 25));

    // independent quadrature of the defining integral at x = 1/4
    BigReal x(Rational(1, 4), prec);
    BigReal direct = oracle::tanh_sinh(
        [&](const BigReal& phi) {
            BigReal s = sin(phi);
            return BigReal(1, prec) / sqrt(BigReal(1, prec) - x * s * s);
        },
        BigReal(0, prec), pi.ldexp2(-1), prec, -230);
    CHECK(close_digits(complete_elliptic_K(x), direct, 60));

    CHECK_THROWS_AS(complete_elliptic_K(BigReal(2, prec)), DomainError);
}

TEST_CASE("K vs quadrature across the modulus range") {
    const mpfr_prec_t prec = 280;
    BigReal pi = BigReal::pi(prec);
    for (const char* xs : {"0.1", "0.5", "0.9"}) {
        BigReal x = BigReal::from_string(xs, prec);
        BigReal direct = oracle::tanh_sinh(
            [&](const BigReal& phi) {
                BigReal s = sin(phi);
                return BigReal(1, prec) / sqrt(BigReal(1, prec) - x * s * s);
            },
            BigReal(0, prec), pi.ldexp2(-1), prec, -240);
        CHECK(close_digits(complete_elliptic_K(x), direct, 60));
    }
}

TEST_CASE("gamma_quarter") {
    BigReal g = gamma_quarter(256);
    CHECK(close_digits(g, BigReal::from_string("3.62560990822190831193", 256), 20));
    // cache determinism and fourth-power consistency, bit for bit
    BigReal g2 = gamma_quarter(256);
    CHECK(g == g2);
    BigReal sq = g * g;
    CHECK(sq * sq == ipow(g, 4));
    // z(1/2) reconstruction: Gamma^2/(2 pi^{3/2}) = 2 K(1/2) / pi
    BigReal pi = BigReal::pi(256);
    BigReal z_half = g * g / (pi * sqrt(pi)).ldexp2(1);
    BigReal K_half = complete_elliptic_K(BigReal(Rational(1, 2), 256));
    CHECK(close_digits(z_half, K_half.ldexp2(1) / pi, 70));
    CHECK_THROWS_AS(gamma_quarter(32), DomainError);
}

TEST_CASE("theta series") {
    const mpfr_prec_t prec = 256;
    BigReal q_small = pow_si(BigReal(10, prec), -40);
    CHECK(abs(theta_series(Theta::theta3, q_small) - BigReal(1, prec)) <
          pow_si(BigReal(10, prec), -39));

    BigReal q = exp(-BigReal::pi(prec));
    BigReal t2 = theta_series(Theta::theta2, q);
    BigReal t3 = theta_series(Theta::theta3, q);
    BigReal t4 = theta_series(Theta::theta4, q);
    CHECK(close_digits(ipow(t3, 4), ipow(t2, 4) + ipow(t4, 4), 70));
    // x = 1/2 at y = pi: theta2/theta3 = 2^{-1/4}
    BigReal ratio = t2 / t3;
    CHECK(close_digits(ipow(ratio, 4), BigReal(Rational(1, 2), prec), 70));

    CHECK_THROWS_AS(theta_series(Theta::theta3, BigReal(1, prec)), DomainError);
    CHECK_THROWS_AS(theta_series(Theta::theta3, BigReal(0, prec)), DomainError);
}

TEST_CASE("modular point at y = pi") {
    const mpfr_prec_t prec = 256;
    auto mp = modular_point_from_y(BigReal::pi(prec), prec);
    BigReal g = gamma_quarter(prec);
    BigReal pi = BigReal::pi(prec);
    CHECK(close_bits(mp.x, BigReal(Rational(1, 2), prec), prec - 10));
    CHECK(close_digits(mp.z, g * g / (pi * sqrt(pi)).ldexp2(1), 70));
    CHECK(close_digits(mp.zprime, sqrt(pi).ldexp2(2) / (g * g), 70));
    CHECK(close_bits(mp.q, exp(-pi), prec - 8));
}

TEST_CASE("modular point round-trip and derivative identities") {
    const mpfr_prec_t prec = 192;
    std::mt19937_64 eng(7);
    auto uniform = [&] { return 0.5 + 5.5 * (static_cast<double>(eng() >> 11) * 0x1.0p-53); };
    for (int i = 0; i < 6; ++i) {
        BigReal y(uniform(), prec);
        auto mp = modular_point_from_y(y, prec);
        // y reconstruction through the K ratio
        BigReal Kx = complete_elliptic_K(mp.x);
        BigReal Kcx = complete_elliptic_K(BigReal(1, prec) - mp.x);
        BigReal y_check = BigReal::pi(prec) * Kcx / Kx;
        CHECK(close_bits(y, y_check, prec - 8));

        // dx/dy = -x(1-x)z^2 by central difference in y
        BigReal h = BigReal(1, prec).ldexp2(-static_cast<long>(prec) / 3);
        auto mp_p = modular_point_from_y(y + h, prec);
        auto mp_m = modular_point_from_y(y - h, prec);
        BigReal dx_dy_fd = (mp_p.x - mp_m.x) / h.ldexp2(1);
        BigReal dx_dy = -(mp.x * (BigReal(1, prec) - mp.x) * mp.z * mp.z);
        CHECK(close_bits(dx_dy_fd, dx_dy, prec / 3 - 8));

        // z' against the difference quotient dz/dx
        BigReal zp_fd = (mp_p.z - mp_m.z) / (mp_p.x - mp_m.x);
        CHECK(close_bits(zp_fd, mp.zprime, prec / 3 - 8));
    }
}

TEST_CASE("modular point y = 2, pinned by the round-trip oracle") {
    const mpfr_prec_t prec = 256;
    auto mp = modular_point_from_y(BigReal(2, prec), prec);
    CHECK(mp.x > BigReal(Rational(1, 2), prec));  // y < pi puts x above 1/2
    BigReal y_check = BigReal::pi(prec) * complete_elliptic_K(BigReal(1, prec) - mp.x) /
                      complete_elliptic_K(mp.x);
    CHECK(close_bits(BigReal(2, prec), y_check, prec - 8));
}

TEST_CASE("modular point precision loss") {
    CHECK_THROWS_AS(modular_point_from_y(BigReal(500, 128), 128), PrecisionLoss);
    CHECK_THROWS_AS(modular_point_from_y(BigReal(-1, 128), 128), DomainError);
}

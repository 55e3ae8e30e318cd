#include "berndt/elliptic.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "berndt/errors.hpp"
#include "berndt/quadrature.hpp"

namespace berndt::ell {

BigReal agm(const BigReal& a0, const BigReal& b0) {
    if (a0.sgn() <= 0 || b0.sgn() <= 0) throw DomainError("agm: arguments must be positive");
    mpfr_prec_t prec = std::min(a0.precision(), b0.precision());
    BigReal a = a0, b = b0;
    for (int i = 0; i < 8 * 64; ++i) {
        BigReal am = (a + b).ldexp2(-1);
        BigReal gm = sqrt(a * b);
        BigReal diff = abs(am - gm);
        a = am;
        b = gm;
        if (diff.is_zero() || diff.exponent2() < a.exponent2() - prec - 4) break;
    }
    return (a + b).ldexp2(-1);
}

BigReal complete_elliptic_K(const BigReal& x) {
    mpfr_prec_t prec = x.precision();
    BigReal one(1, prec);
    if (!(x > BigReal(0, prec)) || !(x < one)) throw DomainError("complete_elliptic_K: need 0 < x < 1");
    mpfr_prec_t wp = prec + 32;
    BigReal xe = x.at_precision(wp);
    BigReal m = agm(BigReal(1, wp), sqrt(BigReal(1, wp) - xe));
    return (BigReal::pi(wp) / (m.ldexp2(1))).at_precision(prec);
}

namespace {

std::map<mpfr_prec_t, BigReal> g_gamma_cache;
std::mutex g_gamma_mutex;

BigReal gamma_quarter_agm(mpfr_prec_t wp) {
    BigReal two_pi = BigReal::pi(wp).ldexp2(1);
    BigReal g2 = two_pi * sqrt(two_pi) / agm(BigReal(1, wp), sqrt(BigReal(2, wp)));
    return sqrt(g2);
}

} // namespace

BigReal gamma_quarter(mpfr_prec_t precision) {
    if (precision < 64) throw DomainError("gamma_quarter: precision must be >= 64");
    {
        std::lock_guard<std::mutex> lock(g_gamma_mutex);
        auto it = g_gamma_cache.find(precision);
        if (it != g_gamma_cache.end()) return it->second;
    }
    mpfr_prec_t wp = precision + 32;
    BigReal g = gamma_quarter_agm(wp);
    // Independent route at reduced precision: Gamma(1/4) = 4 int_0^inf e^{-u^4} du
    // (Euler integral after t = u^4).
    mpfr_prec_t cp = std::max<mpfr_prec_t>(precision / 2, 96);
    double x0 = std::pow(1.2 * (static_cast<double>(cp) + 12) * std::log(2.0), 0.25) + 1.0;
    BigReal euler = quad::integrate_panels(
        [cp](const BigReal& u) {
            BigReal u2 = u * u;
            return exp(-(u2 * u2)).at_precision(cp + 32);
        },
        x0, 0.5, cp + 32, -(cp + 8));
    BigReal diff = abs(euler.ldexp2(2) - g.at_precision(cp + 32));
    if (!diff.is_zero() && diff.exponent2() > -(static_cast<mpfr_exp_t>(cp) - 6))
        throw NonConvergence("gamma_quarter: AGM and Euler-integral routes disagree");
    BigReal out = g.at_precision(precision);
    std::lock_guard<std::mutex> lock(g_gamma_mutex);
    return g_gamma_cache.emplace(precision, out).first->second;
}

BigReal theta_series(Theta which, const BigReal& q) {
    mpfr_prec_t prec = q.precision();
    BigReal zero(0, prec), one(1, prec);
    if (!(q > zero) || !(q < one)) throw DomainError("theta_series: need 0 < q < 1");
    const mpfr_exp_t cut = -(prec + 10);
    if (which == Theta::theta2) {
        // 2 q^{1/4} sum_{n>=0} q^{n(n+1)}
        BigReal q14 = sqrt(sqrt(q));
        BigReal sum = one;  // n = 0 term of sum q^{n(n+1)}
        BigReal qpow = one; // q^{n(n+1)}
        BigReal q2 = q * q;
        BigReal stride = q2;  // q^{2n} step: q^{(n+1)(n+2)} = q^{n(n+1)} q^{2(n+1)}
        for (;;) {
            qpow *= stride;
            stride *= q2;
            sum += qpow;
            if (qpow.is_zero() || qpow.exponent2() < cut) break;
        }
        return (q14 * sum).ldexp2(1);
    }
    BigReal sum = one;
    BigReal qpow = one;   // q^{n^2}
    BigReal stride = q;   // q^{2n-1} step: q^{(n+1)^2} = q^{n^2} q^{2n+1}
    BigReal q2 = q * q;
    bool alt = which == Theta::theta4;
    long n = 0;
    for (;;) {
        ++n;
        qpow *= stride;
        stride *= q2;
        BigReal term = qpow.ldexp2(1);
        sum += (alt && (n & 1)) ? -term : term;
        if (qpow.is_zero() || qpow.exponent2() < cut) break;
    }
    return sum;
}

ModularPoint modular_point_from_y(const BigReal& y, mpfr_prec_t precision) {
    if (y.sgn() <= 0) throw DomainError("modular_point_from_y: y must be positive");
    mpfr_prec_t wp = precision + 32;
    BigReal ye = y.at_precision(wp);
    BigReal q = exp(-ye);
    if (q.is_zero() || q.exponent2() < -(wp - 8))
        throw PrecisionLoss("modular_point_from_y: nome underflows at this precision");
    BigReal t2 = theta_series(Theta::theta2, q);
    BigReal t3 = theta_series(Theta::theta3, q);
    BigReal ratio = t2 / t3;
    BigReal x = ratio * ratio;
    x *= x;
    BigReal one(1, wp);
    if (x.exponent2() < -(static_cast<mpfr_exp_t>(precision)) ||
        (one - x).exponent2() < -(static_cast<mpfr_exp_t>(precision)))
        throw PrecisionLoss("modular_point_from_y: x underflows the working precision");
    BigReal z = t3 * t3;

    // dz/dy = -q d(theta3^2)/dq = -4 theta3 sum_{n>=1} n^2 q^{n^2}
    BigReal acc(0, wp), qpow = one, stride = q, q2 = q * q;
    const mpfr_exp_t cut = -(wp + 10);
    long n = 0;
    for (;;) {
        ++n;
        qpow *= stride;
        stride *= q2;
        acc += (n * n) * qpow;
        if (qpow.is_zero() || qpow.exponent2() < cut) break;
    }
    BigReal dz_dy = -(t3 * acc).ldexp2(2);
    BigReal dx_dy = -(x * (one - x) * z * z);
    BigReal zprime = dz_dy / dx_dy;

    ModularPoint mp{x.at_precision(precision), y.at_precision(precision), exp(-ye).at_precision(precision),
                    z.at_precision(precision), zprime.at_precision(precision)};
    return mp;
}

} // namespace berndt::ell

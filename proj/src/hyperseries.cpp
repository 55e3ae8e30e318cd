#include "berndt/hyperseries.hpp"

#include <cmath>

#include "berndt/errors.hpp"

namespace berndt::hyper {

namespace {

struct Shape {
    long num_exp;    // numerator index power
    bool half_odd;   // index 2n-1 with argument (2n-1)y/2
    long sinh_pow;   // denominator sinh power
    long cosh_pow;   // denominator cosh power
    int num_hyper;   // +1: cosh numerator, -1: sinh numerator, 0: none
};

Shape shape_of(const SeriesSpec& s) {
    switch (s.family) {
        case SeriesFamily::G:       return {s.p, false, 1, s.m, 0};
        case SeriesFamily::Gprime:  return {s.p - 1, true, 1, s.m, 0};
        case SeriesFamily::Gbar:    return {s.p, true, s.m, 1, 0};
        case SeriesFamily::X:       return {s.p, false, s.m, 0, 0};
        case SeriesFamily::Xprime:  return {s.p, true, 0, s.m, 0};
        case SeriesFamily::DXprime: return {s.p + 1, true, 0, s.m, -1};
        case SeriesFamily::Y:       return {s.p - 1, true, s.m, 0, 0};
        case SeriesFamily::DY:      return {s.p, true, s.m, 0, +1};
        case SeriesFamily::B:       return {s.p - 1, false, 0, s.m, 0};
        case SeriesFamily::DB:      return {s.p, false, 0, s.m, -1};
    }
    throw DomainError("eval_series: unknown family");
}

} // namespace

BigReal eval_series(const SeriesSpec& spec, mpfr_prec_t precision) {
    if (spec.y.sgn() <= 0) throw DomainError("eval_series: y must be positive");
    if (spec.m < 1) throw DomainError("eval_series: m must be >= 1");
    const Shape sh = shape_of(spec);
    const long lambda = sh.sinh_pow + sh.cosh_pow - (sh.num_hyper ? 1 : 0);
    if (lambda < 1) throw DomainError("eval_series: series does not converge");

    const mpfr_prec_t wp = precision + 32;
    const mpfr_exp_t stop = -(precision + 12);
    const BigReal y = spec.y.at_precision(wp);
    const BigReal one(1, wp);
    const double yd = y.to_double();

    // E_n = exp(-t_n), advanced multiplicatively; t_n = n y or (2n-1)y/2.
    const BigReal estep = exp(-y);
    BigReal E = sh.half_odd ? exp(-(y.ldexp2(-1))) : estep;

    const long den_pow = sh.sinh_pow + sh.cosh_pow;
    BigReal sum(0, wp);
    for (long n = 1;; ++n) {
        const long k = sh.half_odd ? 2 * n - 1 : n;
        BigReal E2 = E * E;
        BigReal hyper = ipow(E, static_cast<unsigned long>(den_pow)).ldexp2(den_pow);
        if (sh.sinh_pow) hyper /= ipow(one - E2, static_cast<unsigned long>(sh.sinh_pow));
        if (sh.cosh_pow) hyper /= ipow(one + E2, static_cast<unsigned long>(sh.cosh_pow));
        if (sh.num_hyper == +1) hyper *= (one / E + E).ldexp2(-1);
        if (sh.num_hyper == -1) hyper *= (one / E - E).ldexp2(-1);
        BigReal term = pow_si(BigReal(k, wp), sh.num_exp) * hyper;
        sum += (n % 2) ? -term : term;

        // Geometric majorant: |term_{n+1}/term_n| <= ((k+2)/k)^c e^{-lambda y}.
        double c = static_cast<double>(sh.num_exp < 0 ? 0 : sh.num_exp);
        double ratio = std::exp(c * std::log((static_cast<double>(k) + 2.0) / k) -
                                static_cast<double>(lambda) * yd);
        if (ratio < 0.9999) {
            double slack = std::log2(ratio / (1.0 - ratio)) + 1.0;
            if (term.is_zero() ||
                term.exponent2() + static_cast<mpfr_exp_t>(std::ceil(std::max(slack, 0.0))) < stop)
                break;
        }
        if (n > 2000000) throw NonConvergence("eval_series: cutoff not reached");
        E *= estep;
    }
    return sum.at_precision(precision);
}

namespace {

// Alternating sum with caller-supplied term and monotone majorant; stops once
// majorant * r/(1-r) falls below 2^{stop}.
template <typename Fn>
BigReal alternating_sum(Fn term_and_majorant, double rate, mpfr_prec_t wp, mpfr_exp_t stop) {
    BigReal sum(0, wp);
    double slack = std::max(std::log2(rate / (1.0 - rate)) + 1.0, 0.0);
    for (long n = 1;; ++n) {
        auto [term, maj] = term_and_majorant(n);
        sum += (n % 2) ? -term : term;
        if (maj.is_zero() || maj.exponent2() + static_cast<mpfr_exp_t>(std::ceil(slack)) < stop)
            break;
        if (n > 2000000) throw NonConvergence("alternating_sum: cutoff not reached");
    }
    return sum;
}

struct TM {
    BigReal term, maj;
};

} // namespace

BigReal residue_identity_residual(ResidueIdentity which, const BigReal& a_in, const BigReal& b_in,
                                  const BigReal& theta_in, mpfr_prec_t precision) {
    const mpfr_prec_t wp = precision + 32;
    const BigReal a = a_in.at_precision(wp), b = b_in.at_precision(wp),
                  theta = theta_in.at_precision(wp);
    if (a.is_zero() || b.is_zero())
        throw DomainError("residue_identity_residual: a and b must be nonzero");
    const BigReal pi = BigReal::pi(wp);
    if (!(abs(theta) < (b * pi).ldexp2(1)))
        throw DomainError("residue_identity_residual: need |theta| < 2 b pi");
    const mpfr_exp_t stop = -(precision + 12);
    const double ad = std::abs(a.to_double()), bd = std::abs(b.to_double());
    const double thd = std::abs(theta.to_double());
    const double pid = M_PI;
    // Decay rates of the four sums (per unit n).
    const double r_hyp = std::exp(-(3.0 * bd * pid - thd) / ad);
    const double r_trig = std::exp(-ad * pid / bd);

    auto inv_sinh_cosh2 = [&](const BigReal& t) {
        BigReal sh = sinh(t), ch = cosh(t);
        return BigReal(1, wp) / (sh * ch * ch);
    };

    BigReal total(0, wp);
    if (which == ResidueIdentity::Z1) {
        BigReal s1 = alternating_sum(
            [&](long n) -> std::pair<BigReal, BigReal> {
                BigReal core = inv_sinh_cosh2(b * BigReal(n, wp) * pi / a);
                BigReal t = sinh(BigReal(n, wp) * theta / a) * core;
                return {t, abs(t)};
            },
            r_hyp, wp, stop);
        BigReal s2 = alternating_sum(
            [&](long n) -> std::pair<BigReal, BigReal> {
                BigReal den = sinh(a * BigReal(n, wp) * pi / b);
                BigReal maj = abs(BigReal(1, wp) / den);
                return {sin(BigReal(n, wp) * theta / b) / den, maj};
            },
            r_trig, wp, stop);
        BigReal s3 = alternating_sum(
            [&](long n) -> std::pair<BigReal, BigReal> {
                BigReal kx = BigReal(2 * n - 1, wp);
                BigReal den = sinh(kx * a * pi / (b.ldexp2(1)));
                BigReal maj = abs(BigReal(1, wp) / den);
                return {cos(kx * theta / (b.ldexp2(1))) / den, maj};
            },
            r_trig, wp, stop);
        BigReal s4 = alternating_sum(
            [&](long n) -> std::pair<BigReal, BigReal> {
                BigReal kx = BigReal(2 * n - 1, wp);
                BigReal arg = kx * a * pi / (b.ldexp2(1));
                BigReal sh = sinh(arg);
                BigReal core = cosh(arg) / (sh * sh);
                return {sin(kx * theta / (b.ldexp2(1))) * core, abs(core)};
            },
            r_trig, wp, stop);
        total = b * b * pi * s1 + a * b * pi * s2 - a * theta * s3 + a * a * pi * s4 +
                (theta * b).ldexp2(-1);
    } else if (which == ResidueIdentity::Z2) {
        BigReal t1 = alternating_sum(
            [&](long n) -> std::pair<BigReal, BigReal> {
                BigReal kx = BigReal(2 * n - 1, wp);
                BigReal core = inv_sinh_cosh2(kx * b * pi / (a.ldexp2(1)));
                BigReal t = cosh(kx * theta / (a.ldexp2(1))) * core;
                return {t, abs(t)};
            },
            r_hyp, wp, stop);
        BigReal t2 = alternating_sum(
            [&](long n) -> std::pair<BigReal, BigReal> {
                BigReal kx = BigReal(2 * n - 1, wp);
                BigReal den = cosh(kx * a * pi / (b.ldexp2(1)));
                return {sin(kx * theta / (b.ldexp2(1))) / den, BigReal(1, wp) / den};
            },
            r_trig, wp, stop);
        BigReal t3 = alternating_sum(
            [&](long n) -> std::pair<BigReal, BigReal> {
                BigReal kx = BigReal(2 * n - 1, wp);
                BigReal arg = kx * a * pi / (b.ldexp2(1));
                BigReal ch = cosh(arg);
                BigReal core = sinh(arg) / (ch * ch);
                return {cos(kx * theta / (b.ldexp2(1))) * core, abs(core)};
            },
            r_trig, wp, stop);
        BigReal t4 = alternating_sum(
            [&](long n) -> std::pair<BigReal, BigReal> {
                BigReal den = cosh(a * BigReal(n, wp) * pi / b);
                return {cos(BigReal(n, wp) * theta / b) / den, BigReal(1, wp) / den};
            },
            r_trig, wp, stop);
        total = b * b * pi * t1 + a * theta * t2 + a * a * pi * t3 + a * b * pi * t4 +
                (a * b * pi).ldexp2(-1);
    } else {
        BigReal u1 = alternating_sum(
            [&](long n) -> std::pair<BigReal, BigReal> {
                BigReal kx = BigReal(2 * n - 1, wp);
                BigReal arg = kx * b * pi / (a.ldexp2(1));
                BigReal sh = sinh(arg);
                BigReal core = BigReal(1, wp) / (sh * sh * cosh(arg));
                BigReal t = sinh(kx * theta / (a.ldexp2(1))) * core;
                return {t, abs(t)};
            },
            r_hyp, wp, stop);
        BigReal u2 = alternating_sum(
            [&](long n) -> std::pair<BigReal, BigReal> {
                BigReal den = cosh(a * BigReal(n, wp) * pi / b);
                return {cos(BigReal(n, wp) * theta / b) / den, BigReal(1, wp) / den};
            },
            r_trig, wp, stop);
        BigReal u3 = alternating_sum(
            [&](long n) -> std::pair<BigReal, BigReal> {
                BigReal arg = a * BigReal(n, wp) * pi / b;
                BigReal ch = cosh(arg);
                BigReal core = sinh(arg) / (ch * ch);
                return {sin(BigReal(n, wp) * theta / b) * core, abs(core)};
            },
            r_trig, wp, stop);
        BigReal u4 = alternating_sum(
            [&](long n) -> std::pair<BigReal, BigReal> {
                BigReal kx = BigReal(2 * n - 1, wp);
                BigReal den = cosh(kx * a * pi / (b.ldexp2(1)));
                return {sin(kx * theta / (b.ldexp2(1))) / den, BigReal(1, wp) / den};
            },
            r_trig, wp, stop);
        total = b * b * pi * u1 + a * theta * u2 - a * a * pi * u3 + a * b * pi * u4 +
                (a * theta).ldexp2(-1);
    }
    return total.at_precision(precision);
}

BigReal transform_residual(TransformIdentity which, long p, const BigReal& y_in,
                           mpfr_prec_t precision) {
    if (p < 3 || p % 2 == 0) throw DomainError("transform_residual: p must be odd and >= 3");
    if (y_in.sgn() <= 0) throw DomainError("transform_residual: y must be positive");
    const mpfr_prec_t wp = precision + 32;
    const BigReal y = y_in.at_precision(wp);
    const BigReal pi = BigReal::pi(wp);
    const BigReal yt = pi * pi / y;
    const long eps = ((p - 1) / 2) % 2 ? -1 : 1;
    auto ev = [&](SeriesFamily f, long pp, long mm, const BigReal& at) {
        return eval_series({f, pp, mm, at}, wp);
    };
    BigReal lhs(wp), rhs(wp);
    if (which == TransformIdentity::js1) {
        lhs = ev(SeriesFamily::G, p, 2, y);
        rhs = -eps * (pow_si(pi / y, p + 1) * ev(SeriesFamily::X, p, 1, yt)) +
              eps * (p * (pow_si(pi, p) / pow_si(y, p + 1)) * ev(SeriesFamily::Y, p, 1, yt))
                  .ldexp2(-(p - 1)) -
              eps * ((pow_si(pi, p + 2) / pow_si(y, p + 2)) * ev(SeriesFamily::DY, p, 2, yt))
                  .ldexp2(-p);
    } else if (which == TransformIdentity::js2) {
        lhs = ev(SeriesFamily::Gprime, p, 2, y);
        rhs = -eps * (pow_si(pi / y, p) * ev(SeriesFamily::B, p, 1, yt)).ldexp2(p - 1) +
              eps * (2 * (p - 1) * (pow_si(pi, p - 1) / pow_si(y, p)) *
                     ev(SeriesFamily::Xprime, p - 2, 1, yt)) -
              eps * (pow_si(pi / y, p + 1) * ev(SeriesFamily::DXprime, p - 2, 2, yt));
    } else {
        lhs = ev(SeriesFamily::Gbar, p, 2, y);
        rhs = -eps * (pow_si(pi / y, p + 1) * ev(SeriesFamily::Xprime, p, 1, yt)) -
              eps * (p * (pow_si(pi, p) / pow_si(y, p + 1)) * ev(SeriesFamily::B, p, 1, yt))
                  .ldexp2(p) +
              eps * ((pow_si(pi, p + 2) / pow_si(y, p + 2)) * ev(SeriesFamily::DB, p, 2, yt))
                  .ldexp2(p);
    }
    return (lhs - rhs).at_precision(precision);
}

BigComplex contour_identity_value(long p, mpfr_prec_t precision) {
    if (p % 4 != 3) throw DomainError("contour_identity_rhs: p must be 3 (mod 4)");
    const mpfr_prec_t wp = precision + 32;
    const BigReal pi = BigReal::pi(wp);
    auto ev = [&](SeriesFamily f, long mm) { return eval_series({f, p, mm, pi}, wp); };
    const BigReal gp = ev(SeriesFamily::Gprime, 2);
    const BigReal g = ev(SeriesFamily::G, 2);
    const BigReal x3 = ev(SeriesFamily::Xprime, 3);
    const BigReal gb = ev(SeriesFamily::Gbar, 2);

    const BigComplex i_unit(0, 1, wp);
    const BigComplex one_minus_i(1, -1, wp);
    const BigComplex w_pm1 = ipow(one_minus_i, static_cast<unsigned long>(p - 1));
    const BigComplex w_pp1 = ipow(one_minus_i, static_cast<unsigned long>(p + 1));
    const BigReal pi_p = pow_si(pi, p);

    BigComplex val = (i_unit * w_pm1) * BigComplex((p * (pi_p * gp)).ldexp2(-(p + 1)));
    val = val + w_pp1 * BigComplex((pi_p * pi * g).ldexp2(-3));
    val = val - (i_unit * w_pm1) * BigComplex((pi_p * pi * x3).ldexp2(-(p + 1)));
    val = val - (i_unit * w_pm1) * BigComplex((pi_p * pi * gb).ldexp2(-(p + 2)));
    return val.at_precision(precision);
}

BigReal contour_identity_rhs(long p, mpfr_prec_t precision) {
    BigComplex val = contour_identity_value(p, precision);
    if (!val.imag().is_zero() && val.imag().exponent2() > -(static_cast<mpfr_exp_t>(precision) / 2))
        throw ImaginaryResidue("contour_identity_rhs: imaginary part did not cancel");
    return val.real();
}

const char* series_family_name(SeriesFamily f) {
    switch (f) {
        case SeriesFamily::G: return "G";
        case SeriesFamily::Gprime: return "Gprime";
        case SeriesFamily::Gbar: return "Gbar";
        case SeriesFamily::X: return "X";
        case SeriesFamily::Xprime: return "Xprime";
        case SeriesFamily::DXprime: return "DXprime";
        case SeriesFamily::Y: return "Y";
        case SeriesFamily::DY: return "DY";
        case SeriesFamily::B: return "B";
        case SeriesFamily::DB: return "DB";
    }
    return "?";
}

bool parse_series_family(const std::string& name, SeriesFamily& out) {
    static const std::pair<const char*, SeriesFamily> table[] = {
        {"G", SeriesFamily::G},       {"Gprime", SeriesFamily::Gprime},
        {"Gbar", SeriesFamily::Gbar}, {"X", SeriesFamily::X},
        {"Xprime", SeriesFamily::Xprime}, {"DXprime", SeriesFamily::DXprime},
        {"Y", SeriesFamily::Y},       {"DY", SeriesFamily::DY},
        {"B", SeriesFamily::B},       {"DB", SeriesFamily::DB},
    };
    for (const auto& [n, f] : table)
        if (name == n) {
            out = f;
            return true;
        }
    return false;
}

} // namespace berndt::hyper

#include "berndt/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "berndt/errors.hpp"

namespace berndt::quad {

namespace {

// P_n(x) and P_{n-1}(x) by the three-term recurrence.
void legendre_pair(unsigned n, const BigReal& x, BigReal& pn, BigReal& pnm1) {
    BigReal p0(1, x.precision()), p1 = x;
    if (n == 0) {
        pn = p0;
        pnm1 = BigReal(0, x.precision());
        return;
    }
    for (unsigned k = 1; k < n; ++k) {
        BigReal p2 = ((2 * static_cast<long>(k) + 1) * (x * p1) - static_cast<long>(k) * p0) /
                     static_cast<long>(k + 1);
        p0 = p1;
        p1 = p2;
    }
    pn = p1;
    pnm1 = p0;
}

std::map<std::pair<unsigned, mpfr_prec_t>, GaussLegendreRule> g_rule_cache;
std::mutex g_rule_mutex;

} // namespace

const GaussLegendreRule& gauss_legendre(unsigned n, mpfr_prec_t prec) {
    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto key = std::make_pair(n, prec);
    auto it = g_rule_cache.find(key);
    if (it != g_rule_cache.end()) return it->second;

    GaussLegendreRule rule;
    rule.nodes.resize(n, BigReal(prec));
    rule.weights.resize(n, BigReal(prec));
    const BigReal one(1, prec);
    for (unsigned k = 1; k <= (n + 1) / 2; ++k) {
        double seed = std::cos(M_PI * (k - 0.25) / (n + 0.5));
        BigReal x(seed, prec);
        BigReal pn(prec), pnm1(prec);
        for (int iter = 0; iter < 100; ++iter) {
            legendre_pair(n, x, pn, pnm1);
            // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
            BigReal denom = x * x - one;
            BigReal dpn = static_cast<long>(n) * (x * pn - pnm1) / denom;
            BigReal step = pn / dpn;
            x -= step;
            if (step.is_zero() || step.exponent2() < -(prec + 4)) break;
        }
        legendre_pair(n, x, pn, pnm1);
        BigReal dpn = static_cast<long>(n) * (x * pn - pnm1) / (x * x - one);
        BigReal w = BigReal(2, prec) / ((one - x * x) * dpn * dpn);
        rule.nodes[k - 1] = -x;  // seeds descend from +1; store ascending
        rule.weights[k - 1] = w;
        rule.nodes[n - k] = x;
        rule.weights[n - k] = w;
    }
    return g_rule_cache.emplace(key, std::move(rule)).first->second;
}

namespace {

template <typename Value, typename Fn>
Value panel_pass(const Fn& f, double x_max, double panel_width, unsigned n, mpfr_prec_t prec) {
    const GaussLegendreRule& rule = gauss_legendre(n, prec);
    Value total(prec);
    long panels = static_cast<long>(std::ceil(x_max / panel_width));
    for (long pidx = 0; pidx < panels; ++pidx) {
        double lo = pidx * panel_width;
        double hi = std::min(x_max, lo + panel_width);
        BigReal mid((lo + hi) / 2, prec), half((hi - lo) / 2, prec);
        Value acc(prec);
        for (unsigned i = 0; i < n; ++i) {
            BigReal xi = mid + half * rule.nodes[i];
            acc = acc + rule.weights[i] * f(xi);
        }
        total = total + half * acc;
    }
    return total;
}

BigReal abs_of(const BigReal& v) { return abs(v); }
BigReal abs_of(const BigComplex& v) { return v.abs(); }

template <typename Value, typename Fn>
Value integrate_panels_impl(const Fn& f, double x_max, double panel_width, mpfr_prec_t prec,
                            mpfr_exp_t stop_exp2, int max_doublings) {
    unsigned n = 8;
    Value prev = panel_pass<Value>(f, x_max, panel_width, n, prec);
    for (int d = 0; d < max_doublings; ++d) {
        n *= 2;
        Value cur = panel_pass<Value>(f, x_max, panel_width, n, prec);
        BigReal delta = abs_of(cur - prev);
        if (!delta.is_zero() && delta.exponent2() >= stop_exp2) {
            prev = cur;
            continue;
        }
        return cur;
    }
    throw NonConvergence("integrate_panels: refinement stalled after " +
                         std::to_string(max_doublings) + " doublings");
}

} // namespace

BigReal integrate_panels(const std::function<BigReal(const BigReal&)>& f, double x_max,
                         double panel_width, mpfr_prec_t prec, mpfr_exp_t stop_exp2,
                         int max_doublings) {
    return integrate_panels_impl<BigReal>(f, x_max, panel_width, prec, stop_exp2, max_doublings);
}

BigComplex integrate_panels_complex(const std::function<BigComplex(const BigReal&)>& f,
                                    double x_max, double panel_width, mpfr_prec_t prec,
                                    mpfr_exp_t stop_exp2, int max_doublings) {
    return integrate_panels_impl<BigComplex>(f, x_max, panel_width, prec, stop_exp2, max_doublings);
}

namespace {

// Smallest X0 with c0 * X0^deg * exp(-rate*X0) < 2^{-prec-10}; a few Newton
// steps on the log equation, floored at 2.
double tail_cut(double deg, double rate, double log_c0, mpfr_prec_t prec) {
    double target = -(static_cast<double>(prec) + 10) * std::log(2.0);
    double x = std::max(2.0, (std::abs(target) + deg * 4.0 + log_c0) / rate);
    for (int i = 0; i < 40; ++i) {
        double g = log_c0 + deg * std::log(x) - rate * x - target;
        double dg = deg / x - rate;
        double nx = x - g / dg;
        if (!(nx > 0)) nx = x * 1.5;
        if (std::abs(nx - x) < 1e-9 * x) {
            x = nx;
            break;
        }
        x = nx;
    }
    return std::max(2.0, x);
}

BigReal berndt_integrand(const BigReal& x, long p) {
    mpfr_prec_t prec = x.precision();
    if (x.is_zero()) return BigReal(0, prec);
    // cosh 2x - cos 2x = 2 (sinh^2 x + sin^2 x), exact and cancellation-free.
    BigReal sh = sinh(x), sn = sin(x);
    BigReal d1 = (sh * sh + sn * sn).ldexp2(1);
    BigReal d2 = cosh(x) + cos(x);
    BigReal den = d1 * d2;
    if (den.sgn() <= 0)
        throw SingularIntegrand("berndt_mixed: denominator not positive at x = " + x.to_string(8));
    return pow_si(x, p) / den;
}

BigComplex kernel_integrand(const BigReal& u, const IntegrandSpec& spec, mpfr_prec_t prec) {
    if (u.is_zero() && spec.s > static_cast<long>(spec.sinh_periods.size()))
        return BigComplex(prec);
    BigComplex acc(BigReal(1, prec), BigReal(0, prec));
    for (const auto& a : spec.sinh_periods) {
        BigComplex sh = csinh(BigComplex(a.real().at_precision(prec) * u, a.imag().at_precision(prec) * u));
        if (sh.is_zero())
            throw SingularIntegrand("exp_kernel: sinh factor vanished at u = " + u.to_string(8));
        acc = acc / sh;
    }
    for (const auto& b : spec.cosh_periods) {
        BigComplex ch = ccosh(BigComplex(b.real().at_precision(prec) * u, b.imag().at_precision(prec) * u));
        if (ch.is_zero())
            throw SingularIntegrand("exp_kernel: cosh factor vanished at u = " + u.to_string(8));
        acc = acc / ch;
    }
    if (!spec.w.is_zero()) {
        BigComplex wz(spec.w.real().at_precision(prec) * u, spec.w.imag().at_precision(prec) * u);
        acc = acc * cexp(-wz);
    }
    return pow_si(u, spec.s - 1) * acc;
}

} // namespace

BigComplex integrate(const IntegrandSpec& spec, mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + 64;
    const mpfr_exp_t stop = -(prec + 12);
    if (spec.kind == IntegrandSpec::Kind::berndt_mixed) {
        if (spec.p < 3) throw DomainError("berndt_mixed: p must be >= 3");
        // For x >= 2 the denominator exceeds e^{3x}/16.
        double x0 = tail_cut(static_cast<double>(spec.p), 3.0, std::log(16.0), prec);
        long p = spec.p;
        BigReal v = integrate_panels(
            [p](const BigReal& x) { return berndt_integrand(x, p); }, x0, 1.0, wp, stop);
        return BigComplex(v.at_precision(prec));
    }
    // exp_kernel: decay rate = Re(w) + sum |Re a_i| + sum |Re b_j|.
    double rate = spec.w.real().to_double();
    for (const auto& a : spec.sinh_periods) rate += std::abs(a.real().to_double());
    for (const auto& b : spec.cosh_periods) rate += std::abs(b.real().to_double());
    if (!(rate > 0)) throw DomainError("exp_kernel: integrand does not decay (rate <= 0)");
    std::size_t nper = spec.sinh_periods.size() + spec.cosh_periods.size();
    double x0 = tail_cut(static_cast<double>(spec.s - 1), rate,
                         std::log(2.0) * static_cast<double>(nper + 2), prec);
    BigComplex v = integrate_panels_complex(
        [&spec, wp](const BigReal& u) { return kernel_integrand(u, spec, wp); }, x0, 1.0, wp, stop);
    return v.at_precision(prec);
}

BigReal integrate_real(const IntegrandSpec& spec, mpfr_prec_t prec) {
    return integrate(spec, prec).real();
}

BigReal berndt_sinh_cosh_factorization_check(long p, mpfr_prec_t prec) {
    if (p < 3) throw DomainError("factorization check: p must be >= 3");
    const mpfr_prec_t wp = prec + 32;
    BigReal worst(0, prec);
    for (int i = 1; i <= 120; ++i) {
        BigReal x = BigReal(i, wp) / 4;  // samples (0, 30]
        BigReal sh = sinh(x), sn = sin(x);
        BigReal lhs = (sh * sh + sn * sn).ldexp2(1) * (cosh(x) + cos(x));
        BigComplex xi(x, x);  // (1+i)x
        BigComplex half_xi(x.ldexp2(-1), x.ldexp2(-1));
        BigComplex rhs_c = csinh(xi) * csinh(xi.conj()) * ccosh(half_xi) * ccosh(half_xi.conj());
        BigReal rhs = rhs_c.real().ldexp2(2);
        BigReal rel = abs((lhs - rhs) / lhs);
        worst = max(worst, rel.at_precision(prec));
    }
    return worst;
}

} // namespace berndt::quad

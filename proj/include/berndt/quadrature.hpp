#ifndef BERNDT_QUADRATURE_HPP
#define BERNDT_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "berndt/bigreal.hpp"

namespace berndt::quad {

// Integrand selector for the two kernel shapes used in this project:
//   berndt_mixed:  x^p / [(cosh 2x - cos 2x)(cosh x + cos x)]   on (0, inf)
//   exp_kernel:    u^{s-1} e^{-w u} / (prod sinh(a_i u) prod cosh(b_j u))
struct IntegrandSpec {
    enum class Kind { berndt_mixed, exp_kernel };
    Kind kind = Kind::berndt_mixed;
    long p = 3;                            // berndt_mixed: integrand power
    long s = 1;                            // exp_kernel: u^{s-1}
    BigComplex w{64};                      // exp_kernel: exponential offset
    std::vector<BigComplex> sinh_periods;  // exp_kernel: a_i
    std::vector<BigComplex> cosh_periods;  // exp_kernel: b_j

    static IntegrandSpec berndt(long p) {
        IntegrandSpec s;
        s.kind = Kind::berndt_mixed;
        s.p = p;
        return s;
    }
    static IntegrandSpec kernel(long s, BigComplex w, std::vector<BigComplex> sinh_p,
                                std::vector<BigComplex> cosh_p) {
        IntegrandSpec sp;
        sp.kind = Kind::exp_kernel;
        sp.s = s;
        sp.w = std::move(w);
        sp.sinh_periods = std::move(sinh_p);
        sp.cosh_periods = std::move(cosh_p);
        return sp;
    }
};

// Gauss-Legendre nodes/weights on [-1, 1], cached per (n, precision).
// Roots by Newton iteration on P_n from double-precision Chebyshev seeds.
struct GaussLegendreRule {
    std::vector<BigReal> nodes;    // all n nodes, ascending
    std::vector<BigReal> weights;
};
const GaussLegendreRule& gauss_legendre(unsigned n, mpfr_prec_t prec);

// Composite fixed-width-panel integration of f over [0, x_max], doubling the
// per-panel node count until two refinements agree below 2^{stop_exp2}
// (absolute). Throws NonConvergence after max_doublings.
BigReal integrate_panels(const std::function<BigReal(const BigReal&)>& f, double x_max,
                         double panel_width, mpfr_prec_t work_prec, mpfr_exp_t stop_exp2,
                         int max_doublings = 20);
BigComplex integrate_panels_complex(const std::function<BigComplex(const BigReal&)>& f,
                                    double x_max, double panel_width, mpfr_prec_t work_prec,
                                    mpfr_exp_t stop_exp2, int max_doublings = 20);

// Full evaluation of an IntegrandSpec over (0, inf): analytic tail cut at X0,
// panel quadrature on [0, X0]. berndt_mixed yields a real value (imag = 0).
BigComplex integrate(const IntegrandSpec& spec, mpfr_prec_t prec);
BigReal integrate_real(const IntegrandSpec& spec, mpfr_prec_t prec);

// Max over sampled x in (0, 30] of the relative difference between
// (cosh 2x - cos 2x)(cosh x + cos x) and
// 4 sinh((1+i)x) sinh((1-i)x) cosh((1+i)x/2) cosh((1-i)x/2).
BigReal berndt_sinh_cosh_factorization_check(long p, mpfr_prec_t prec);

} // namespace berndt::quad

#endif

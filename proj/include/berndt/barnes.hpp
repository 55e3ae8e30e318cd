#ifndef BERNDT_BARNES_HPP
#define BERNDT_BARNES_HPP

#include <vector>

#include "berndt/bigreal.hpp"
#include "berndt/closedform.hpp"

namespace berndt::barnes {

// Signed Barnes lattice sum
//   sum_{n_1..n_N >= 0} prod_j sigma_j^{n_j} / (w + sum_j n_j c_j)^s
// with integer s, Re(w) > 0 and Re(c_j) > 0.
struct BarnesSpec {
    long s = 4;
    BigComplex w{64};
    std::vector<BigComplex> periods;
    std::vector<int> signs;
};

// The (2+2i, 2-2i, 1+i, 1-i) / (+,+,-,-) spec at offset 3 tied to the Berndt
// integral of order s-1.
BarnesSpec c4_sigma4_spec(long s, mpfr_prec_t prec);

// Hurwitz zeta for integer s >= 2 and complex alpha in the right half-plane,
// by Euler-Maclaurin with a shift that puts |alpha + K| past the asymptotic
// threshold.
BigComplex hurwitz_zeta(long s, const BigComplex& alpha, mpfr_prec_t precision);

// Lattice-sum route. Parallel periods are merged exactly into weighted
// one-dimensional directions; the innermost direction is summed in closed form
// through hurwitz_zeta and outer directions are truncated under a
// doubling-agreement stop. Throws SlowConvergence when s <= N or when the
// truncation budget is exhausted.
BigComplex barnes_lattice(const BarnesSpec& spec, mpfr_prec_t precision);

// Integral-representation route: u^{s-1} e^{-wu} prod (1 - sigma_j e^{-c_j u})^{-1}
// folded into the sinh/cosh exponential kernel and quadratured, divided by
// Gamma(s) = (s-1)!.
BigComplex barnes_integral(const BarnesSpec& spec, mpfr_prec_t precision);

// Gamma(4m) zeta_4(4m, 3 | c4; sigma4) equals a quarter of the order-(4m-1)
// Berndt integral; this returns the exact closed form of zeta_4 itself.
cf::ClosedForm zeta4_closed_form(long m);

} // namespace berndt::barnes

#endif

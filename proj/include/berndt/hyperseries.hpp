#ifndef BERNDT_HYPERSERIES_HPP
#define BERNDT_HYPERSERIES_HPP

#include "berndt/bigreal.hpp"

namespace berndt::hyper {

// The ten alternating hyperbolic series families (index n runs from 1):
//   G        (-1)^n n^p / (sinh(ny) cosh^m(ny))
//   Gprime   (-1)^n (2n-1)^{p-1} / (sinh(t) cosh^m(t)),   t = (2n-1)y/2
//   Gbar     (-1)^n (2n-1)^p / (sinh^m(t) cosh(t))
//   X        (-1)^n n^p / sinh^m(ny)
//   Xprime   (-1)^n (2n-1)^p / cosh^m(t)
//   DXprime  (-1)^n (2n-1)^{p+1} sinh(t) / cosh^m(t)
//   Y        (-1)^n (2n-1)^{p-1} / sinh^m(t)
//   DY       (-1)^n (2n-1)^p cosh(t) / sinh^m(t)
//   B        (-1)^n n^{p-1} / cosh^m(ny)
//   DB       (-1)^n n^p sinh(ny) / cosh^m(ny)
enum class SeriesFamily { G, Gprime, Gbar, X, Xprime, DXprime, Y, DY, B, DB };

struct SeriesSpec {
    SeriesFamily family;
    long p;
    long m;
    BigReal y;
};

// Value of the infinite sum with truncation error below 2^{-precision-10}.
// Hyperbolic factors are evaluated from e^{-t} to avoid cancellation; the
// cutoff comes from the geometric majorant C n^c e^{-lambda t(n)}.
BigReal eval_series(const SeriesSpec& spec, mpfr_prec_t precision);

enum class ResidueIdentity { Z1, Z2, Z3 };

// Full left side (four series plus constant) of the residue identity; must
// vanish. Requires |theta| < 2 b pi and a, b != 0.
BigReal residue_identity_residual(ResidueIdentity which, const BigReal& a, const BigReal& b,
                                  const BigReal& theta, mpfr_prec_t precision);

enum class TransformIdentity { js1, js2, js3 };

// Left side minus right side of the y <-> pi^2/y modular transform identity,
// for odd p >= 3; must vanish.
BigReal transform_residual(TransformIdentity which, long p, const BigReal& y,
                           mpfr_prec_t precision);

// The assembled complex contour expression at p = 3 (mod 4); analytically its
// imaginary part is zero.
BigComplex contour_identity_value(long p, mpfr_prec_t precision);

// The contour-integral right side at p = 3 (mod 4): equals twice the Berndt
// integral of order p. The assembled complex expression must be real; throws
// ImaginaryResidue if |Im| > 2^{-precision/2}.
BigReal contour_identity_rhs(long p, mpfr_prec_t precision);

const char* series_family_name(SeriesFamily f);
bool parse_series_family(const std::string& name, SeriesFamily& out);

} // namespace berndt::hyper

#endif

#ifndef BERNDT_ELLIPTIC_HPP
#define BERNDT_ELLIPTIC_HPP

#include "berndt/bigreal.hpp"

namespace berndt::ell {

// Common limit of the arithmetic-geometric iteration; a, b > 0.
BigReal agm(const BigReal& a, const BigReal& b);

// Complete elliptic integral of the first kind in the parameter x = k^2,
// K(x) = pi / (2 agm(1, sqrt(1-x))), for 0 < x < 1.
BigReal complete_elliptic_K(const BigReal& x);

// Gamma(1/4) via Gamma(1/4)^2 = (2 pi)^{3/2} / agm(1, sqrt 2), cached per
// precision. On first use per precision the value is cross-checked against an
// independent quadrature of 4 * int_0^inf exp(-u^4) du at reduced precision.
BigReal gamma_quarter(mpfr_prec_t precision);

enum class Theta { theta2, theta3, theta4 };

// Nome series: theta2 = 2 sum q^{(n+1/2)^2}, theta3 = 1 + 2 sum q^{n^2},
// theta4 = 1 + 2 sum (-1)^n q^{n^2}; truncated once the next term drops below
// 2^{-precision-10}. Requires 0 < q < 1.
BigReal theta_series(Theta which, const BigReal& q);

// The tuple (x, y, q, z, z') with x = k^2, y = pi K'/K, q = e^{-y},
// z = 2K/pi, z' = dz/dx.
struct ModularPoint {
    BigReal x, y, q, z, zprime;
};

// Nome inversion at q = e^{-y}: x = (theta2/theta3)^4, z = theta3^2,
// z' = (dz/dy) / (dx/dy) with dz/dy summed termwise from the theta series and
// dx/dy = -x(1-x)z^2. Throws PrecisionLoss when x or 1-x underflows.
ModularPoint modular_point_from_y(const BigReal& y, mpfr_prec_t precision);

} // namespace berndt::ell

#endif

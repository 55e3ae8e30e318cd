#ifndef BERNDT_JACOBI_HPP
#define BERNDT_JACOBI_HPP

#include <map>
#include <string>

#include "berndt/ratpoly.hpp"

namespace berndt::jacobi {

enum class Family { S, A, P, Q, R };

// Normalized Maclaurin coefficient polynomials of one Jacobi-elliptic family,
// keyed by the series index (the u-power they normalize).
struct CoefficientTable {
    Family family;
    std::map<long, RatPoly> entries;
    long max_index = 0;
};

struct JacobiBaseSeries {
    PolySeries sn, cn, dn;
};

// Truncated Maclaurin series of sn, cn, dn with coefficients in Q[x], x = k^2,
// built by termwise integration of sn' = cn dn, cn' = -sn dn, dn' = -x sn cn
// from sn(0) = 0, cn(0) = dn(0) = 1.
JacobiBaseSeries jacobi_base_series(std::size_t order);

// cd(u) = sum S_2n(x) (-1)^n u^{2n} / (2n)!; S_2n integer-coefficient.
CoefficientTable table_S(long max_index);
// nd(u) = sum A_2n(x) (-1)^n u^{2n} / (2n)!; A_2n integer-coefficient.
CoefficientTable table_A(long max_index);
// P_n(x) = n! [u^n] sd(u) for odd n, under the numerically calibrated
// normalization that makes
//   sum (-1)^n (2n-1)^p / cosh((2n-1)y/2) = -(-1)^{(p-1)/2} z^{p+1} sqrt(x(1-x)) P_p(x)/2.
CoefficientTable table_P(long max_index);
// q_n(x) = n! [u^n] sn(u)^2 for even n >= 2, calibrated against
//   sum (-1)^n n^p / sinh(ny) = -((p-1)!/2^{p+1}) x(1-x) z^{p+1} R_{p-1}(1-x)|_{x -> 1-x}.
CoefficientTable table_Q(long max_index);
// The polynomial R_{p-1}(1-x) = ((-x)^{(p-3)/2}/(p-1)!) q_{p-1}((1-x)/(-x)),
// expressed in x; asserted to stay in Q[x].
RatPoly table_R(long p);

// Runs the one-time normalization calibration (no-op after the first call).
// Throws CalibrationFailure if no sign/factorial convention reconciles the
// series and elliptic sides to 40 digits.
void ensure_calibrated();

// JSON layout: {"family": "...", "max_index": n,
//               "entries": [{"index": k, "coefficients": ["1", "-8/3", ...]}]}
std::string table_to_json(const CoefficientTable& table);

std::string family_name(Family f);

} // namespace berndt::jacobi

#endif

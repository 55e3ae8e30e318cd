#ifndef BERNDT_ERRORS_HPP
#define BERNDT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace berndt {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Requested precision cannot represent the result (underflow of x or 1-x).
struct PrecisionLoss : std::runtime_error {
    explicit PrecisionLoss(const std::string& what) : std::runtime_error(what) {}
};

// Moebius substitution left a residual denominator in x.
struct NonPolynomialResult : std::runtime_error {
    explicit NonPolynomialResult(const std::string& what) : std::runtime_error(what) {}
};

// Power-series division by a series whose constant term is not a unit.
struct DivisorNotUnit : std::runtime_error {
    explicit DivisorNotUnit(const std::string& what) : std::runtime_error(what) {}
};

// A coefficient expected to be an integer is not (upstream bug).
struct IntegralityViolation : std::runtime_error {
    explicit IntegralityViolation(const std::string& what) : std::runtime_error(what) {}
};

// The one-time normalization calibration of the P/Q tables failed.
struct CalibrationFailure : std::runtime_error {
    explicit CalibrationFailure(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature refinement stalled before reaching the target accuracy.
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// Integrand denominator vanished on the integration path.
struct SingularIntegrand : std::runtime_error {
    explicit SingularIntegrand(const std::string& what) : std::runtime_error(what) {}
};

// A quantity that must be real came back with a non-negligible imaginary part.
struct ImaginaryResidue : std::runtime_error {
    explicit ImaginaryResidue(const std::string& what) : std::runtime_error(what) {}
};

// Lattice summation would need more terms than the configured budget.
struct SlowConvergence : std::runtime_error {
    explicit SlowConvergence(const std::string& what) : std::runtime_error(what) {}
};

} // namespace berndt

#endif

#include "berndt/bigreal.hpp"

#include <algorithm>
#include <cstdlib>

namespace berndt {

std::string BigReal::to_string(std::size_t digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    if (digits == 0)
        digits = static_cast<std::size_t>(static_cast<double>(precision()) * 0.30103) + 1;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    std::string sign;
    if (!m.empty() && m[0] == '-') {
        sign = "-";
        m.erase(0, 1);
    }
    // mpfr convention: value = 0.mmm * 10^e; normalize to d.ddd e^{e-1}.
    std::string out = sign + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

BigReal BigComplex::abs() const {
    BigReal r(precision());
    mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
    return r;
}

BigReal ipow(const BigReal& base, unsigned long e) {
    BigReal acc(1, base.precision());
    BigReal b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

BigComplex ipow(const BigComplex& base, unsigned long e) {
    BigComplex acc(1, 0, base.precision());
    BigComplex b = base;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

BigComplex ipow_neg(const BigComplex& base, unsigned long e) {
    BigComplex p = ipow(base, e);
    return BigComplex(BigReal(1, base.precision()), BigReal(0, base.precision())) / p;
}

BigComplex csinh(const BigComplex& z) {
    return {sinh(z.real()) * cos(z.imag()), cosh(z.real()) * sin(z.imag())};
}

BigComplex ccosh(const BigComplex& z) {
    return {cosh(z.real()) * cos(z.imag()), sinh(z.real()) * sin(z.imag())};
}

BigComplex cexp(const BigComplex& z) {
    BigReal ea = exp(z.real());
    return {ea * cos(z.imag()), ea * sin(z.imag())};
}

} // namespace berndt

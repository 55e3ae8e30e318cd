#ifndef BERNDT_BIGREAL_HPP
#define BERNDT_BIGREAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "berndt/rational.hpp"

namespace berndt {

// Arbitrary-precision real, value semantics over mpfr_t.
//
// Precision is fixed at construction and propagates through arithmetic as the
// min of the operand precisions. All rounding is to nearest.
class BigReal {
  public:
    explicit BigReal(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigReal(long n, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, n, MPFR_RNDN);
    }
    BigReal(int n, mpfr_prec_t prec) : BigReal(static_cast<long>(n), prec) {}
    BigReal(double d, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, d, MPFR_RNDN);
    }
    BigReal(const Rational& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.raw(), MPFR_RNDN);
    }
    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal pi(mpfr_prec_t prec) {
        BigReal r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static BigReal from_string(const std::string& s, mpfr_prec_t prec) {
        BigReal r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 && mpfr_nan_p(r.v_))
            throw std::invalid_argument("BigReal: bad numeric string: " + s);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    // Rounded copy at a different precision.
    BigReal at_precision(mpfr_prec_t prec) const {
        BigReal r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sgn() const { return mpfr_sgn(v_); }
    // Binary exponent e with |x| in [2^{e-1}, 2^e); LONG_MIN-ish for zero.
    mpfr_exp_t exponent2() const { return is_zero() ? mpfr_get_emin() : mpfr_get_exp(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    friend BigReal operator+(const BigReal& a, const BigReal& b) { BigReal r(minp(a, b)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend BigReal operator-(const BigReal& a, const BigReal& b) { BigReal r(minp(a, b)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend BigReal operator*(const BigReal& a, const BigReal& b) { BigReal r(minp(a, b)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend BigReal operator/(const BigReal& a, const BigReal& b) { BigReal r(minp(a, b)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    BigReal operator-() const { BigReal r(precision()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    BigReal& operator+=(const BigReal& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigReal& operator/=(const BigReal& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }

    friend BigReal operator*(long a, const BigReal& b) { BigReal r(b.precision()); mpfr_mul_si(r.v_, b.v_, a, MPFR_RNDN); return r; }
    friend BigReal operator/(const BigReal& a, long b) { BigReal r(a.precision()); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend BigReal operator+(const BigReal& a, long b) { BigReal r(a.precision()); mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend BigReal operator-(const BigReal& a, long b) { BigReal r(a.precision()); mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN); return r; }

    friend int cmp(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    // 2^e scaling (exact).
    BigReal ldexp2(long e) const { BigReal r(precision()); mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN); return r; }

    // Decimal string "[-]d.ddd...e<exp>" with the given significant digits,
    // deterministic for a given (value, digits).
    std::string to_string(std::size_t digits = 0) const;

    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

  private:
    static mpfr_prec_t minp(const BigReal& a, const BigReal& b) {
        return std::min(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
    }
    mpfr_t v_;
};

#define BERNDT_MPFR_UNARY(name, fn)                       \
    inline BigReal name(const BigReal& a) {               \
        BigReal r(a.precision());                         \
        fn(r.raw(), a.raw(), MPFR_RNDN);                  \
        return r;                                         \
    }
BERNDT_MPFR_UNARY(abs, mpfr_abs)
BERNDT_MPFR_UNARY(sqrt, mpfr_sqrt)
BERNDT_MPFR_UNARY(exp, mpfr_exp)
BERNDT_MPFR_UNARY(log, mpfr_log)
BERNDT_MPFR_UNARY(sin, mpfr_sin)
BERNDT_MPFR_UNARY(cos, mpfr_cos)
BERNDT_MPFR_UNARY(tan, mpfr_tan)
BERNDT_MPFR_UNARY(sinh, mpfr_sinh)
BERNDT_MPFR_UNARY(cosh, mpfr_cosh)
BERNDT_MPFR_UNARY(tanh, mpfr_tanh)
BERNDT_MPFR_UNARY(floor, mpfr_rint_floor)
#undef BERNDT_MPFR_UNARY

inline BigReal pow_si(const BigReal& a, long e) {
    BigReal r(a.precision());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}
inline BigReal pow(const BigReal& a, const BigReal& b) {
    BigReal r(std::min(a.precision(), b.precision()));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r(std::min(y.precision(), x.precision()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }

// Complex value with equal-precision components.
class BigComplex {
  public:
    explicit BigComplex(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
    BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {
        mpfr_prec_t p = std::min(re_.precision(), im_.precision());
        re_ = re_.at_precision(p);
        im_ = im_.at_precision(p);
    }
    BigComplex(long re, long im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}
    explicit BigComplex(const BigReal& re) : re_(re), im_(0, re.precision()) {}

    const BigReal& real() const { return re_; }
    const BigReal& imag() const { return im_; }
    mpfr_prec_t precision() const { return re_.precision(); }
    BigComplex at_precision(mpfr_prec_t p) const { return {re_.at_precision(p), im_.at_precision(p)}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend BigComplex operator*(const BigReal& s, const BigComplex& b) { return {s * b.re_, s * b.im_}; }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigReal d = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
    }
    BigComplex operator-() const { return {-re_, -im_}; }
    BigComplex conj() const { return {re_, -im_}; }

    BigReal abs() const;
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  private:
    BigReal re_, im_;
};

BigReal ipow(const BigReal& base, unsigned long e);
BigComplex ipow(const BigComplex& base, unsigned long e);
// base^{-e} for positive integer e (single-valued; no branch choice involved).
BigComplex ipow_neg(const BigComplex& base, unsigned long e);

// Componentwise-accurate complex elementary functions:
//   sinh(a+bi) = sinh a cos b + i cosh a sin b, etc.
BigComplex csinh(const BigComplex& z);
BigComplex ccosh(const BigComplex& z);
BigComplex cexp(const BigComplex& z);

} // namespace berndt

#endif

#ifndef BERNDT_RATIONAL_HPP
#define BERNDT_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace berndt {

// Arbitrary-size integer, value semantics over mpz_t.
class Int {
  public:
    Int() { mpz_init(v_); }
    Int(long n) { mpz_init_set_si(v_, n); }  // NOLINT(google-explicit-constructor)
    explicit Int(const std::string& dec) {
        if (mpz_init_set_str(v_, dec.c_str(), 10) != 0) {
            mpz_clear(v_);
            throw std::invalid_argument("Int: bad decimal string: " + dec);
        }
    }
    Int(const Int& o) { mpz_init_set(v_, o.v_); }
    Int(Int&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~Int() { mpz_clear(v_); }

    static Int factorial(unsigned long n) {
        Int r;
        mpz_fac_ui(r.v_, n);
        return r;
    }
    static Int pow2(unsigned long e) {
        Int r(1);
        mpz_mul_2exp(r.v_, r.v_, e);
        return r;
    }
    static Int binomial(unsigned long n, unsigned long k) {
        Int r;
        mpz_bin_uiui(r.v_, n, k);
        return r;
    }

    friend Int operator+(const Int& a, const Int& b) { Int r; mpz_add(r.v_, a.v_, b.v_); return r; }
    friend Int operator-(const Int& a, const Int& b) { Int r; mpz_sub(r.v_, a.v_, b.v_); return r; }
    friend Int operator*(const Int& a, const Int& b) { Int r; mpz_mul(r.v_, a.v_, b.v_); return r; }
    Int operator-() const { Int r; mpz_neg(r.v_, v_); return r; }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) < 0; }

    bool is_zero() const { return mpz_sgn(v_) == 0; }
    int sgn() const { return mpz_sgn(v_); }
    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    const mpz_t& raw() const { return v_; }
    mpz_t& raw() { return v_; }

  private:
    mpz_t v_;
};

// Exact rational, always canonical: reduced, denominator > 0, zero is 0/1.
class Rational {
  public:
    Rational() { mpq_init(v_); }
    Rational(long n) {  // NOLINT(google-explicit-constructor)
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(long num, unsigned long den) {
        mpq_init(v_);
        mpq_set_si(v_, num, den);
        mpq_canonicalize(v_);
    }
    Rational(const Int& num, const Int& den) {
        mpq_init(v_);
        if (mpz_sgn(den.raw()) == 0) {
            mpq_clear(v_);
            throw std::invalid_argument("Rational: zero denominator");
        }
        mpz_set(mpq_numref(v_), num.raw());
        mpz_set(mpq_denref(v_), den.raw());
        mpq_canonicalize(v_);
    }
    explicit Rational(const std::string& s) {  // "num", "num/den", decimal integers
        mpq_init(v_);
        if (mpq_set_str(v_, s.c_str(), 10) != 0) {
            mpq_clear(v_);
            throw std::invalid_argument("Rational: bad string: " + s);
        }
        mpq_canonicalize(v_);
    }
    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    friend Rational operator+(const Rational& a, const Rational& b) { Rational r; mpq_add(r.v_, a.v_, b.v_); return r; }
    friend Rational operator-(const Rational& a, const Rational& b) { Rational r; mpq_sub(r.v_, a.v_, b.v_); return r; }
    friend Rational operator*(const Rational& a, const Rational& b) { Rational r; mpq_mul(r.v_, a.v_, b.v_); return r; }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
        Rational r;
        mpq_div(r.v_, a.v_, b.v_);
        return r;
    }
    Rational operator-() const { Rational r; mpq_neg(r.v_, v_); return r; }
    Rational& operator+=(const Rational& b) { mpq_add(v_, v_, b.v_); return *this; }
    Rational& operator-=(const Rational& b) { mpq_sub(v_, v_, b.v_); return *this; }
    Rational& operator*=(const Rational& b) { mpq_mul(v_, v_, b.v_); return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }
    int sgn() const { return mpq_sgn(v_); }

    Int numerator() const {
        Int n;
        mpz_set(n.raw(), mpq_numref(v_));
        return n;
    }
    Int denominator() const {
        Int d;
        mpz_set(d.raw(), mpq_denref(v_));
        return d;
    }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        Rational base = *this;
        bool inv = e < 0;
        unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        if (inv) {
            if (base.is_zero()) throw std::invalid_argument("Rational: 0^negative");
            base = Rational(1) / base;
        }
        Rational acc(1);
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    // "n" for integers, "n/d" otherwise.
    std::string to_string() const {
        std::string s = numerator().to_string();
        if (!is_integer()) s += "/" + denominator().to_string();
        return s;
    }

    const mpq_t& raw() const { return v_; }

  private:
    mpq_t v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace berndt

#endif

#ifndef BERNDT_RATPOLY_HPP
#define BERNDT_RATPOLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "berndt/rational.hpp"

namespace berndt {

// Dense univariate polynomial over Q in the modulus variable x = k^2.
// Trailing zeros trimmed; the zero polynomial has an empty coefficient list.
class RatPoly {
  public:
    RatPoly() = default;
    RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly constant(Rational q) {
        RatPoly p;
        p.c_.push_back(std::move(q));
        p.trim();
        return p;
    }
    static RatPoly monomial(Rational q, std::size_t power) {
        RatPoly p;
        if (!q.is_zero()) {
            p.c_.assign(power + 1, Rational(0));
            p.c_[power] = std::move(q);
        }
        return p;
    }
    // The identity polynomial x.
    static RatPoly x() { return monomial(Rational(1), 1); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial reported as -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly operator-() const;
    friend RatPoly operator*(const Rational& s, const RatPoly& p);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    // Formal derivative.
    RatPoly diff() const;
    // Horner evaluation.
    Rational eval(const Rational& t) const;
    // All coefficients integers?
    bool is_integral() const;

    // Human-readable form like "1 - 2x + x^2" (used by the CLI text output).
    std::string to_string(const std::string& var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// (-x)^{(p-3)/2} * a((1-x)/(-x)) / (p-1)!  for odd p >= 3.
//
// The substitution clears denominators exactly when deg a <= (p-3)/2; a larger
// degree would leave a pole at x = 0, which signals a convention mismatch in
// the coefficient table feeding this routine.
RatPoly poly_compose_moebius(const RatPoly& a, long p_exp);

// Truncated power series in u with RatPoly coefficients (in x).
// Arithmetic never reads past truncation_order; the order of a binary result
// is the min of the operand orders.
class PolySeries {
  public:
    PolySeries() : order_(0) {}
    explicit PolySeries(std::size_t truncation_order) : order_(truncation_order), t_(truncation_order) {}
    PolySeries(std::vector<RatPoly> terms, std::size_t truncation_order)
        : order_(truncation_order), t_(std::move(terms)) {
        t_.resize(order_);
    }

    static PolySeries one(std::size_t order) {
        PolySeries s(order);
        if (order > 0) s.t_[0] = RatPoly::constant(Rational(1));
        return s;
    }

    std::size_t truncation_order() const { return order_; }
    const RatPoly& term(std::size_t i) const { return t_.at(i); }
    RatPoly& term(std::size_t i) { return t_.at(i); }

    friend PolySeries operator+(const PolySeries& a, const PolySeries& b);
    friend PolySeries operator-(const PolySeries& a, const PolySeries& b);
    friend PolySeries operator*(const PolySeries& a, const PolySeries& b);
    // Throws DivisorNotUnit unless b's u^0 coefficient is a nonzero constant
    // (a unit of Q[x]); anything else would push the quotient out of Q[x].
    friend PolySeries operator/(const PolySeries& a, const PolySeries& b);
    friend bool operator==(const PolySeries& a, const PolySeries& b) {
        return a.order_ == b.order_ && a.t_ == b.t_;
    }

  private:
    std::size_t order_;
    std::vector<RatPoly> t_;
};

} // namespace berndt

#endif

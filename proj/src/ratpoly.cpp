#include "berndt/ratpoly.hpp"

#include <algorithm>
#include <sstream>

#include "berndt/errors.hpp"

namespace berndt {

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return RatPoly(std::move(r));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-() const {
    std::vector<Rational> r;
    r.reserve(c_.size());
    for (const auto& q : c_) r.push_back(-q);
    return RatPoly(std::move(r));
}

RatPoly operator*(const Rational& s, const RatPoly& p) {
    if (s.is_zero()) return RatPoly();
    std::vector<Rational> r;
    r.reserve(p.c_.size());
    for (const auto& q : p.c_) r.push_back(s * q);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::diff() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rational> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(Rational(static_cast<long>(i)) * c_[i]);
    return RatPoly(std::move(r));
}

Rational RatPoly::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

bool RatPoly::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.is_integer(); });
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& q = c_[i];
        if (q.is_zero()) continue;
        Rational mag = q.sgn() < 0 ? -q : q;
        if (first) {
            if (q.sgn() < 0) os << "-";
            first = false;
        } else {
            os << (q.sgn() < 0 ? " - " : " + ");
        }
        bool unit = (mag == Rational(1));
        if (i == 0 || !unit) os << mag.to_string();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RatPoly poly_compose_moebius(const RatPoly& a, long p_exp) {
    if (p_exp < 3 || p_exp % 2 == 0)
        throw DomainError("poly_compose_moebius: p must be odd and >= 3");
    const long d = (p_exp - 3) / 2;
    if (a.degree() > d)
        throw NonPolynomialResult("poly_compose_moebius: degree " + std::to_string(a.degree()) +
                                  " exceeds (p-3)/2 = " + std::to_string(d) +
                                  "; substitution leaves a pole at x = 0");
    // sum_j a_j (1-x)^j (-x)^{d-j}, then divide by (p-1)!.
    const RatPoly one_minus_x{Rational(1), Rational(-1)};
    const RatPoly minus_x{Rational(0), Rational(-1)};
    RatPoly acc;
    for (long j = 0; j <= a.degree(); ++j) {
        Rational aj = a.coeff(static_cast<std::size_t>(j));
        if (aj.is_zero()) continue;
        RatPoly term = RatPoly::constant(aj);
        for (long k = 0; k < j; ++k) term = term * one_minus_x;
        for (long k = 0; k < d - j; ++k) term = term * minus_x;
        acc = acc + term;
    }
    Rational inv_fact = Rational(1) / Rational(Int::factorial(static_cast<unsigned long>(p_exp - 1)), Int(1));
    return inv_fact * acc;
}

PolySeries operator+(const PolySeries& a, const PolySeries& b) {
    PolySeries r(std::min(a.order_, b.order_));
    for (std::size_t i = 0; i < r.order_; ++i) r.t_[i] = a.t_[i] + b.t_[i];
    return r;
}

PolySeries operator-(const PolySeries& a, const PolySeries& b) {
    PolySeries r(std::min(a.order_, b.order_));
    for (std::size_t i = 0; i < r.order_; ++i) r.t_[i] = a.t_[i] - b.t_[i];
    return r;
}

PolySeries operator*(const PolySeries& a, const PolySeries& b) {
    PolySeries r(std::min(a.order_, b.order_));
    for (std::size_t i = 0; i < r.order_; ++i)
        for (std::size_t j = 0; i + j < r.order_; ++j) r.t_[i + j] = r.t_[i + j] + a.t_[i] * b.t_[j];
    return r;
}

PolySeries operator/(const PolySeries& a, const PolySeries& b) {
    std::size_t n = std::min(a.order_, b.order_);
    if (n == 0) return PolySeries(0);
    const RatPoly& b0 = b.t_[0];
    if (b0.is_zero() || b0.degree() != 0)
        throw DivisorNotUnit("PolySeries division: u^0 coefficient must be a nonzero constant");
    Rational inv = Rational(1) / b0.coeff(0);
    PolySeries q(n);
    for (std::size_t k = 0; k < n; ++k) {
        RatPoly acc = a.t_[k];
        for (std::size_t j = 1; j <= k; ++j) acc = acc - b.t_[j] * q.t_[k - j];
        q.t_[k] = inv * acc;
    }
    return q;
}

} // namespace berndt

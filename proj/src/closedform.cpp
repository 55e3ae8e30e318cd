#include "berndt/closedform.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "berndt/errors.hpp"
#include "berndt/jacobi.hpp"

namespace berndt::cf {

namespace {

std::tuple<long, long, long> key_of(const Term& t) {
    return {t.gamma_exp, t.pi_half_exp, t.two_half_exp};
}

} // namespace

void ClosedForm::canonicalize() {
    // Normalize the power of 2: fold the integer part into the rational
    // coefficient, keeping two_half_exp in {0, -1} (a bare 1/sqrt(2)). Without
    // this, equal-valued monomials with different splits would not merge.
    for (auto& t : terms_) {
        long th = t.two_half_exp;
        long r = ((th % 2) + 2) % 2 == 0 ? 0 : -1;
        long k = (th - r) / 2;
        if (k > 0)
            t.coef *= Rational(Int::pow2(static_cast<unsigned long>(k)), Int(1));
        else if (k < 0)
            t.coef *= Rational(Int(1), Int::pow2(static_cast<unsigned long>(-k)));
        t.two_half_exp = r;
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return key_of(a) < key_of(b); });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && key_of(merged.back()) == key_of(t))
            merged.back().coef += t.coef;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.coef.is_zero(); }),
                 merged.end());
    terms_ = std::move(merged);
}

bool ClosedForm::same(const ClosedForm& b) const {
    if (terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (key_of(terms_[i]) != key_of(b.terms_[i]) || terms_[i].coef != b.terms_[i].coef)
            return false;
    return true;
}

ClosedForm operator+(const ClosedForm& a, const ClosedForm& b) {
    std::vector<Term> t = a.terms_;
    t.insert(t.end(), b.terms_.begin(), b.terms_.end());
    return ClosedForm(std::move(t));
}

ClosedForm operator-(const ClosedForm& a, const ClosedForm& b) {
    std::vector<Term> t = a.terms_;
    for (const auto& bt : b.terms_) t.push_back(Term{-bt.coef, bt.gamma_exp, bt.pi_half_exp, bt.two_half_exp});
    return ClosedForm(std::move(t));
}

ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
    std::vector<Term> t;
    t.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& at : a.terms_)
        for (const auto& bt : b.terms_)
            t.push_back(Term{at.coef * bt.coef, at.gamma_exp + bt.gamma_exp,
                             at.pi_half_exp + bt.pi_half_exp, at.two_half_exp + bt.two_half_exp});
    return ClosedForm(std::move(t));
}

ClosedForm ClosedForm::scaled(const Rational& s) const {
    std::vector<Term> t = terms_;
    for (auto& term : t) term.coef *= s;
    return ClosedForm(std::move(t));
}

ClosedForm ClosedForm::times_pi_power(long k) const {
    std::vector<Term> t = terms_;
    for (auto& term : t) term.pi_half_exp += 2 * k;
    return ClosedForm(std::move(t));
}

namespace {

// base^{half_exp/2} with half_exp possibly odd or negative.
BigReal half_power(const BigReal& base, long half_exp) {
    long k = half_exp / 2;
    long r = half_exp - 2 * k;  // -1, 0, or 1
    BigReal out = pow_si(base, k);
    if (r == 1) out *= sqrt(base);
    if (r == -1) out /= sqrt(base);
    return out;
}

} // namespace

BigReal ClosedForm::eval(mpfr_prec_t precision) const {
    mpfr_prec_t wp = precision + 32;
    BigReal g = ell::gamma_quarter(wp);
    BigReal pi = BigReal::pi(wp);
    BigReal two(2, wp);
    BigReal acc(0, wp);
    for (const auto& t : terms_) {
        BigReal v = BigReal(t.coef, wp);
        if (t.gamma_exp) v *= pow_si(g, t.gamma_exp);
        if (t.pi_half_exp) v *= half_power(pi, t.pi_half_exp);
        if (t.two_half_exp) v *= half_power(two, t.two_half_exp);
        acc += v;
    }
    return acc.at_precision(precision);
}

std::string ClosedForm::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& t : terms_) {
        nlohmann::ordered_json obj;
        obj["coef_num"] = t.coef.numerator().to_string();
        obj["coef_den"] = t.coef.denominator().to_string();
        obj["gamma_exp"] = t.gamma_exp;
        obj["pi_half_exp"] = t.pi_half_exp;
        obj["two_half_exp"] = t.two_half_exp;
        arr.push_back(obj);
    }
    return arr.dump();
}

ClosedForm ClosedForm::from_json(const std::string& json) {
    auto arr = nlohmann::json::parse(json);
    std::vector<Term> terms;
    for (const auto& obj : arr) {
        Term t;
        t.coef = Rational(Int(obj.at("coef_num").get<std::string>()),
                          Int(obj.at("coef_den").get<std::string>()));
        t.gamma_exp = obj.at("gamma_exp").get<long>();
        t.pi_half_exp = obj.at("pi_half_exp").get<long>();
        t.two_half_exp = obj.at("two_half_exp").get<long>();
        terms.push_back(std::move(t));
    }
    return ClosedForm(std::move(terms));
}

std::string ClosedForm::to_latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Display with largest Gamma power first, matching the usual presentation.
    std::vector<Term> by_gamma = terms_;
    std::sort(by_gamma.begin(), by_gamma.end(),
              [](const Term& a, const Term& b) { return a.gamma_exp > b.gamma_exp; });
    for (const auto& t : by_gamma) {
        Rational c = t.coef;
        // Fold the integer part of 2^{th/2} into the coefficient; keep a
        // residual 1/sqrt(2) for odd exponents.
        long th = t.two_half_exp;
        bool inv_sqrt2 = (th % 2) != 0;
        long k = inv_sqrt2 ? (th + 1) / 2 : th / 2;
        if (k >= 0)
            c *= Rational(Int::pow2(static_cast<unsigned long>(k)), Int(1));
        else
            c *= Rational(Int(1), Int::pow2(static_cast<unsigned long>(-k)));
        if (first) {
            if (c.sgn() < 0) os << "-";
            first = false;
        } else {
            os << (c.sgn() < 0 ? " - " : " + ");
        }
        Rational mag = c.sgn() < 0 ? -c : c;
        std::string num, den;
        std::string n_str = mag.numerator().to_string();
        std::string d_str = mag.denominator().to_string();
        auto pow_str = [](const std::string& base, long half_exp) {
            // half_exp is twice the printed exponent.
            std::string s = base;
            if (half_exp == 2) return s;
            if (half_exp % 2 == 0)
                s += "^{" + std::to_string(half_exp / 2) + "}";
            else
                s += "^{" + std::to_string(half_exp) + "/2}";
            return s;
        };
        if (n_str != "1" || (t.gamma_exp <= 0 && t.pi_half_exp <= 0)) num += n_str;
        if (t.gamma_exp > 0) {
            if (!num.empty()) num += " ";
            num += pow_str("\\Gamma", 2 * t.gamma_exp);
        }
        if (t.pi_half_exp > 0) {
            if (!num.empty()) num += " ";
            num += pow_str("\\pi", t.pi_half_exp);
        }
        if (d_str != "1") den += d_str;
        if (inv_sqrt2) {
            if (!den.empty()) den += " ";
            den += "\\sqrt{2}";
        }
        if (t.gamma_exp < 0) {
            if (!den.empty()) den += " ";
            den += pow_str("\\Gamma", -2 * t.gamma_exp);
        }
        if (t.pi_half_exp < 0) {
            if (!den.empty()) den += " ";
            den += pow_str("\\pi", -t.pi_half_exp);
        }
        if (num.empty()) num = "1";
        if (den.empty())
            os << num;
        else
            os << "\\frac{" << num << "}{" << den << "}";
    }
    return os.str();
}

namespace {

Rational pochhammer_half_sq(long n) {
    // ((1/2)_n)^2
    Rational acc(1);
    for (long i = 0; i < n; ++i) {
        Rational f = Rational(2 * i + 1, 2);
        acc *= f * f;
    }
    return acc;
}

} // namespace

ClosedForm z_derivative_at_half(long n) {
    if (n < 0) throw DomainError("z_derivative_at_half: n must be >= 0");
    Rational top = pochhammer_half_sq(n);
    if (n % 2 == 0) {
        // Gamma(n/2 + 3/4) = (3/4)_{n/2} Gamma(3/4), Gamma(3/4) = pi sqrt(2) / Gamma(1/4)
        long j = n / 2;
        Rational poch(1);
        for (long i = 0; i < j; ++i) {
            Rational f = Rational(4 * i + 3, 4);
            poch *= f * f;
        }
        Rational coef = top / (Rational(2) * poch);
        return ClosedForm::monomial(coef, 2, -3, 0);
    }
    // Gamma(n/2 + 3/4) = (5/4)_{(n-1)/2} Gamma(5/4), Gamma(5/4) = Gamma(1/4)/4
    long j = (n - 1) / 2;
    Rational poch(1);
    for (long i = 0; i < j; ++i) {
        Rational f = Rational(4 * i + 5, 4);
        poch *= f * f;
    }
    Rational coef = Rational(16) * top / poch;
    return ClosedForm::monomial(coef, -2, 1, 0);
}

void EllipticExpr::canonicalize() {
    auto key = [](const ETerm& t) {
        return std::make_tuple(t.z_exp, t.zprime_exp, t.sqrt_x, t.sqrt_1mx);
    };
    std::sort(terms_.begin(), terms_.end(),
              [&](const ETerm& a, const ETerm& b) { return key(a) < key(b); });
    std::vector<ETerm> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && key(merged.back()) == key(t))
            merged.back().poly = merged.back().poly + t.poly;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const ETerm& t) { return t.poly.is_zero(); }),
                 merged.end());
    terms_ = std::move(merged);
}

EllipticExpr operator+(const EllipticExpr& a, const EllipticExpr& b) {
    std::vector<ETerm> t = a.terms_;
    t.insert(t.end(), b.terms_.begin(), b.terms_.end());
    return EllipticExpr(std::move(t));
}

BigReal eval_poly(const RatPoly& poly, const BigReal& t) {
    BigReal acc(0, t.precision());
    const auto& c = poly.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + BigReal(*it, t.precision());
    return acc;
}

BigReal EllipticExpr::eval(const ell::ModularPoint& mp, mpfr_prec_t precision) const {
    mpfr_prec_t wp = precision + 32;
    BigReal x = mp.x.at_precision(wp), z = mp.z.at_precision(wp), zp = mp.zprime.at_precision(wp);
    BigReal one(1, wp);
    BigReal rx = sqrt(x), r1x = sqrt(one - x);
    BigReal acc(0, wp);
    for (const auto& t : terms_) {
        BigReal v = eval_poly(t.poly, x);
        if (t.z_exp) v *= pow_si(z, t.z_exp);
        if (t.zprime_exp) v *= pow_si(zp, t.zprime_exp);
        if (t.sqrt_x) v *= rx;
        if (t.sqrt_1mx) v *= r1x;
        acc += v;
    }
    return acc.at_precision(precision);
}

ClosedForm EllipticExpr::at_half() const {
    ClosedForm out;
    const Rational half(1, 2);
    for (const auto& t : terms_) {
        Rational c = t.poly.eval(half);
        if (c.is_zero()) continue;
        // z^a -> Gamma^{2a} 2^{-a} pi^{-3a/2}; z'^b -> Gamma^{-2b} 2^{2b} pi^{b/2}
        long g = 2 * (t.z_exp - t.zprime_exp);
        long ph = -3 * t.z_exp + t.zprime_exp;
        long th = -2 * t.z_exp + 4 * t.zprime_exp;
        if (t.sqrt_x) th -= 1;
        if (t.sqrt_1mx) th -= 1;
        out = out + ClosedForm::monomial(c, g, ph, th);
    }
    return out;
}

namespace {

// P(1-x) as a polynomial in x.
RatPoly compose_one_minus_x(const RatPoly& p) {
    const RatPoly lin{Rational(1), Rational(-1)};
    RatPoly acc;
    RatPoly power = RatPoly::constant(Rational(1));
    for (long j = 0; j <= p.degree(); ++j) {
        acc = acc + p.coeff(static_cast<std::size_t>(j)) * power;
        power = power * lin;
    }
    return acc;
}

const RatPoly kXPoly = RatPoly::x();
const RatPoly kX1mX{Rational(0), Rational(1), Rational(-1)};  // x(1-x)

Rational eps_of(long p) { return ((p - 1) / 2) % 2 ? Rational(-1) : Rational(1); }

} // namespace

EllipticExpr elliptic_expr_for(SeriesClosedForm family, long p) {
    if (p < 3 || p % 2 == 0) throw DomainError("elliptic_expr_for: p must be odd and >= 3");
    const Rational eps = eps_of(p);
    std::vector<ETerm> terms;
    if (family == SeriesClosedForm::G2) {
        RatPoly S = compose_one_minus_x(jacobi::table_S(p - 1).entries.at(p - 1));
        RatPoly Sd = compose_one_minus_x(jacobi::table_S(p - 1).entries.at(p - 1).diff());
        RatPoly rho = jacobi::table_R(p);
        Rational c1 = eps * Rational(Int::factorial(static_cast<unsigned long>(p - 1)),
                                     Int::pow2(static_cast<unsigned long>(p + 1)));
        terms.push_back({c1 * (kX1mX * rho), p + 1, 0, false, false});
        Rational c2 = -eps * Rational(Int(p), Int::pow2(static_cast<unsigned long>(p)));
        terms.push_back({c2 * (kX1mX * S), p + 1, 1, false, true});
        Rational c3 = eps * Rational(Int(1), Int::pow2(static_cast<unsigned long>(p)));
        RatPoly bracket = kX1mX * Sd + Rational(1, 2) * (kXPoly * S);
        terms.push_back({c3 * bracket, p + 2, 0, false, true});
    } else if (family == SeriesClosedForm::Gprime2) {
        RatPoly A = compose_one_minus_x(jacobi::table_A(p - 1).entries.at(p - 1));
        auto tp = jacobi::table_P(p - 2);
        RatPoly P = compose_one_minus_x(tp.entries.at(p - 2));
        RatPoly Pd = compose_one_minus_x(tp.entries.at(p - 2).diff());
        terms.push_back({(-eps * Rational(1, 2)) * A, p, 0, true, false});
        terms.push_back({Rational(p - 1) * (kX1mX * P), p, 1, true, true});
        // x(1-x) d/dx [P(1-x) sqrt(x(1-x))] = sqrt(x(1-x)) (-x(1-x) P'(1-x) + (1-2x)/2 P(1-x))
        RatPoly bracket = -(kX1mX * Pd) + Rational(1, 2) * (RatPoly{Rational(1), Rational(-2)} * P);
        terms.push_back({bracket, p + 1, 0, true, true});
    } else {
        auto ta = jacobi::table_A(p - 1);
        RatPoly A = compose_one_minus_x(ta.entries.at(p - 1));
        RatPoly Ad = compose_one_minus_x(ta.entries.at(p - 1).diff());
        RatPoly P = compose_one_minus_x(jacobi::table_P(p).entries.at(p));
        terms.push_back({Rational(1, 2) * P, p + 1, 0, true, true});
        terms.push_back({(-eps * Rational(p)) * (kX1mX * A), p + 1, 1, true, false});
        // -eps x(1-x) z^{p+2} d/dx [A(1-x) sqrt(x)]
        //   = -eps z^{p+2} sqrt(x) (-x(1-x) A'(1-x) + (1-x)/2 A(1-x))
        RatPoly bracket = -(kX1mX * Ad) + Rational(1, 2) * (RatPoly{Rational(1), Rational(-1)} * A);
        terms.push_back({(-eps) * bracket, p + 2, 0, true, false});
    }
    return EllipticExpr(std::move(terms));
}

ClosedForm closed_form_at_pi(SeriesClosedForm family, long m) {
    if (m < 1) throw DomainError("closed_form_at_pi: m must be >= 1");
    return elliptic_expr_for(family, 4 * m - 1).at_half();
}

ClosedForm closed_form_cosh3(long m) {
    if (m < 1) throw DomainError("closed_form_cosh3: m must be >= 1");
    auto tp = jacobi::table_P(4 * m - 3);
    const RatPoly& P = tp.entries.at(4 * m - 3);
    Rational Pv = P.eval(Rational(1, 2));
    Rational Pdd = P.diff().diff().eval(Rational(1, 2));
    Rational den(Int(1), Int::pow2(static_cast<unsigned long>(4 * m + 7)));
    // pi^4-scaled and Gamma^8-scaled groups of
    //   Gamma^{8m-4} pi^{-(6m+3)} { 128(8m^2-6m+1) pi^4 P + Gamma^8 [(4m-6)P + P''] }
    ClosedForm g1 = ClosedForm::monomial(den * Rational(128 * (8 * m * m - 6 * m + 1)) * Pv,
                                         8 * m - 4, 2 * (4 - 6 * m - 3), 0);
    ClosedForm g2 = ClosedForm::monomial(den * (Rational(4 * m - 6) * Pv + Pdd), 8 * m + 4,
                                         -2 * (6 * m + 3), 0);
    return g1 + g2;
}

ClosedForm berndt_closed_form(long m) {
    if (m < 1) throw DomainError("berndt_closed_form: m must be >= 1");
    const Rational sign_m1 = (m - 1) % 2 ? Rational(-1) : Rational(1);  // (-1)^{m-1}
    const Rational sign_m = -sign_m1;                                   // (-1)^m
    ClosedForm gp = closed_form_at_pi(SeriesClosedForm::Gprime2, m);
    ClosedForm g = closed_form_at_pi(SeriesClosedForm::G2, m);
    ClosedForm x3 = closed_form_cosh3(m);
    ClosedForm gb = closed_form_at_pi(SeriesClosedForm::Gbar1, m);

    Rational inv2 = Rational(Int(1), Int::pow2(static_cast<unsigned long>(2 * m + 1)));
    ClosedForm two_integral =
        gp.scaled(sign_m1 * Rational(4 * m - 1) * inv2).times_pi_power(4 * m - 1) +
        g.scaled(sign_m * Rational(Int::pow2(static_cast<unsigned long>(2 * m)), Int(8)))
            .times_pi_power(4 * m) +
        x3.scaled(sign_m * inv2).times_pi_power(4 * m) +
        gb.scaled(sign_m * inv2 * Rational(1, 2)).times_pi_power(4 * m);
    return two_integral.scaled(Rational(1, 2));
}

std::string series_closed_form_name(SeriesClosedForm f) {
    switch (f) {
        case SeriesClosedForm::G2: return "G2";
        case SeriesClosedForm::Gprime2: return "Gprime2";
        case SeriesClosedForm::Gbar1: return "Gbar1";
    }
    return "?";
}

} // namespace berndt::cf

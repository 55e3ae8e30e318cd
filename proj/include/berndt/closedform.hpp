#ifndef BERNDT_CLOSEDFORM_HPP
#define BERNDT_CLOSEDFORM_HPP

#include <string>
#include <vector>

#include "berndt/bigreal.hpp"
#include "berndt/elliptic.hpp"
#include "berndt/ratpoly.hpp"

namespace berndt::cf {

// One monomial q * Gamma(1/4)^g * pi^{ph/2} * 2^{th/2} with rational q.
struct Term {
    Rational coef;
    long gamma_exp = 0;
    long pi_half_exp = 0;
    long two_half_exp = 0;
};

// Exact linear combination of Gamma(1/4)-pi-sqrt(2) monomials, kept canonical:
// terms sorted by exponent triple, like terms merged, zero terms dropped.
class ClosedForm {
  public:
    ClosedForm() = default;
    explicit ClosedForm(std::vector<Term> terms) : terms_(std::move(terms)) { canonicalize(); }
    static ClosedForm monomial(Rational coef, long gamma_exp, long pi_half_exp, long two_half_exp) {
        return ClosedForm({Term{std::move(coef), gamma_exp, pi_half_exp, two_half_exp}});
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    friend ClosedForm operator+(const ClosedForm& a, const ClosedForm& b);
    friend ClosedForm operator-(const ClosedForm& a, const ClosedForm& b);
    friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);
    ClosedForm scaled(const Rational& s) const;
    // Multiply by pi^k (integer k).
    ClosedForm times_pi_power(long k) const;
    friend bool operator==(const ClosedForm& a, const ClosedForm& b) { return a.same(b); }
    friend bool operator!=(const ClosedForm& a, const ClosedForm& b) { return !a.same(b); }

    BigReal eval(mpfr_prec_t precision) const;

    std::string to_json() const;
    static ClosedForm from_json(const std::string& json);
    // Display-style LaTeX matching the Gamma^a / (c sqrt(2) pi^{e/2}) habit.
    std::string to_latex() const;

  private:
    bool same(const ClosedForm& b) const;
    void canonicalize();
    std::vector<Term> terms_;
};

// d^n z / dx^n at x = 1/2, reduced to the Gamma(1/4)-pi basis; even n lands on
// Gamma^2 pi^{-3/2}, odd n on Gamma^{-2} pi^{1/2}.
ClosedForm z_derivative_at_half(long n);

// One term of an expression in (x, z, z'): poly(x) * z^a * z'^b * sqrt(x)^sx *
// sqrt(1-x)^s1, with sx, s1 in {0, 1}.
struct ETerm {
    RatPoly poly;
    long z_exp = 0;
    long zprime_exp = 0;
    bool sqrt_x = false;
    bool sqrt_1mx = false;
};

class EllipticExpr {
  public:
    EllipticExpr() = default;
    explicit EllipticExpr(std::vector<ETerm> terms) : terms_(std::move(terms)) { canonicalize(); }

    const std::vector<ETerm>& terms() const { return terms_; }
    friend EllipticExpr operator+(const EllipticExpr& a, const EllipticExpr& b);

    BigReal eval(const ell::ModularPoint& mp, mpfr_prec_t precision) const;
    // Exact value at x = 1/2 via z(1/2) = Gamma^2/(2 pi^{3/2}),
    // z'(1/2) = 4 sqrt(pi)/Gamma^2, sqrt(1/2) = 2^{-1/2}.
    ClosedForm at_half() const;

  private:
    void canonicalize();
    std::vector<ETerm> terms_;
};

// Horner evaluation of a rational polynomial at a BigReal point.
BigReal eval_poly(const RatPoly& poly, const BigReal& t);

// The three hyperbolic-series families with elliptic closed forms:
//   G2:      sum (-1)^n n^p / (sinh(ny) cosh^2(ny))
//   Gprime2: sum (-1)^n (2n-1)^{p-1} / (sinh((2n-1)y/2) cosh^2((2n-1)y/2))
//   Gbar1:   sum (-1)^n (2n-1)^p / (sinh^2((2n-1)y/2) cosh((2n-1)y/2))
enum class SeriesClosedForm { G2, Gprime2, Gbar1 };

// The exact elliptic right side for odd p >= 3, with every coefficient
// polynomial drawn from the Maclaurin tables.
EllipticExpr elliptic_expr_for(SeriesClosedForm family, long p);

inline BigReal elliptic_expr_eval(const EllipticExpr& e, const ell::ModularPoint& mp,
                                  mpfr_prec_t precision) {
    return e.eval(mp, precision);
}

// Value of the family's series at y = pi (x = 1/2) with p = 4m-1, as an exact
// closed form.
ClosedForm closed_form_at_pi(SeriesClosedForm family, long m);

// sum (-1)^n (2n-1)^{4m-1} / cosh^3((2n-1)pi/2) as an exact closed form.
ClosedForm closed_form_cosh3(long m);

// int_0^inf x^{4m-1} dx / [(cosh 2x - cos 2x)(cosh x + cos x)] as the exact
// five-term Gamma(1/4)-pi form.
ClosedForm berndt_closed_form(long m);

std::string series_closed_form_name(SeriesClosedForm f);

} // namespace berndt::cf

#endif

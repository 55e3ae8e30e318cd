#include "berndt/jacobi.hpp"

#include <mutex>
#include <sstream>

#include "berndt/elliptic.hpp"
#include "berndt/errors.hpp"

namespace berndt::jacobi {

JacobiBaseSeries jacobi_base_series(std::size_t order) {
    if (order < 2) throw DomainError("jacobi_base_series: order must be >= 2");
    PolySeries sn(order), cn(order), dn(order);
    cn.term(0) = RatPoly::constant(Rational(1));
    dn.term(0) = RatPoly::constant(Rational(1));
    const RatPoly x = RatPoly::x();
    // Coefficient k of each product only involves final lower coefficients, so
    // one forward sweep integrates the whole system.
    for (std::size_t k = 0; k + 1 < order; ++k) {
        RatPoly cd, sd, sc;
        for (std::size_t i = 0; i <= k; ++i) {
            cd = cd + cn.term(i) * dn.term(k - i);
            sd = sd + sn.term(i) * dn.term(k - i);
            sc = sc + sn.term(i) * cn.term(k - i);
        }
        Rational inv(1, static_cast<unsigned long>(k + 1));
        sn.term(k + 1) = inv * cd;
        cn.term(k + 1) = (-inv) * sd;
        dn.term(k + 1) = (-inv) * (x * sc);
    }
    return {std::move(sn), std::move(cn), std::move(dn)};
}

namespace {

struct SeriesBundle {
    PolySeries cd, nd, sd, sn2;
    std::size_t order;
};

// Shared cache of the derived series, grown on demand. Returned by value so
// callers never observe a concurrent regrow.
SeriesBundle bundle_for(std::size_t order) {
    static SeriesBundle cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    if (cache.order < order) {
        auto base = jacobi_base_series(order);
        SeriesBundle b;
        b.order = order;
        b.cd = base.cn / base.dn;
        b.nd = PolySeries::one(order) / base.dn;
        b.sd = base.sn / base.dn;
        b.sn2 = base.sn * base.sn;
        cache = std::move(b);
    }
    return cache;
}

Rational factorial_q(long n) {
    return Rational(Int::factorial(static_cast<unsigned long>(n)), Int(1));
}

// Calibrated normalization of the P and Q tables: sign, alternation, and
// whether the factorial multiplies or divides.
struct Convention {
    int sign = 1;
    bool alternating = false;
    bool inverse_factorial = false;

    Rational scalar(long n, long quarter_phase) const {
        Rational s(sign);
        if (alternating && (quarter_phase % 2 != 0)) s = -s;
        Rational f = factorial_q(n);
        return inverse_factorial ? s / f : s * f;
    }
};

struct Calibration {
    Convention p, q;
};

RatPoly raw_coefficient(const PolySeries& s, long n) { return s.term(static_cast<std::size_t>(n)); }

RatPoly apply_convention(const PolySeries& s, long n, long quarter_phase, const Convention& c) {
    return c.scalar(n, quarter_phase) * raw_coefficient(s, n);
}

// Direct high-precision summation used only by the calibration (independent
// of the production series evaluator).
BigReal direct_inv_sinh_sum(long p, const BigReal& y, mpfr_prec_t prec) {
    BigReal sum(0, prec);
    for (long n = 1;; ++n) {
        BigReal t = sinh(n * y);
        BigReal term = pow_si(BigReal(n, prec), p) / t;
        sum += (n % 2) ? -term : term;
        if (term.exponent2() < -(prec + 16)) break;
    }
    return sum;
}

BigReal direct_inv_cosh_half_sum(long p, const BigReal& y, mpfr_prec_t prec) {
    BigReal sum(0, prec);
    for (long n = 1;; ++n) {
        BigReal arg = ((2 * n - 1) * y).ldexp2(-1);
        BigReal term = pow_si(BigReal(2 * n - 1, prec), p) / cosh(arg);
        sum += (n % 2) ? -term : term;
        if (term.exponent2() < -(prec + 16)) break;
    }
    return sum;
}

BigReal eval_poly_real(const RatPoly& poly, const BigReal& t) {
    BigReal acc(0, t.precision());
    const auto& c = poly.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + BigReal(*it, t.precision());
    return acc;
}

bool agrees_to_40_digits(const BigReal& a, const BigReal& b) {
    BigReal diff = abs(a - b);
    if (diff.is_zero()) return true;
    BigReal scale = max(abs(a), BigReal(1, a.precision()));
    return diff.exponent2() - scale.exponent2() < -134;  // 40+ digits
}

RatPoly compose_R(const RatPoly& q_poly, long p) {
    return poly_compose_moebius(q_poly, p);
}

const Calibration& calibration() {
    static std::once_flag flag;
    static Calibration result;
    std::call_once(flag, [] {
        const mpfr_prec_t prec = 200;
        const auto& b = bundle_for(16);

        // P: two instances of the cosh-sum identity. (p, y) = (3, pi) is
        // degenerate because P_3(1/2) = 0, so calibrate at (1, pi) and (3, 2).
        struct PInstance {
            long p;
            BigReal y;
        };
        const BigReal pi = BigReal::pi(prec);
        std::vector<PInstance> p_instances;
        p_instances.push_back({1, pi});
        p_instances.push_back({3, BigReal(2, prec)});
        bool p_found = false;
        for (int sign : {1, -1})
            for (bool alt : {false, true})
                for (bool inv : {false, true}) {
                    Convention cand{sign, alt, inv};
                    bool ok = true;
                    for (const auto& inst : p_instances) {
                        auto mp = ell::modular_point_from_y(inst.y, prec);
                        RatPoly P = apply_convention(b.sd, inst.p, (inst.p - 1) / 2, cand);
                        int eps = ((inst.p - 1) / 2) % 2 ? -1 : 1;
                        BigReal rhs = -eps * pow_si(mp.z, inst.p + 1) *
                                      sqrt(mp.x * (BigReal(1, prec) - mp.x)) *
                                      eval_poly_real(P, mp.x) / 2;
                        BigReal lhs = direct_inv_cosh_half_sum(inst.p, inst.y, prec);
                        if (!agrees_to_40_digits(lhs, rhs)) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        if (p_found) throw CalibrationFailure("P calibration is ambiguous");
                        result.p = cand;
                        p_found = true;
                    }
                }
        if (!p_found)
            throw CalibrationFailure("no sign/factorial convention reconciles the sd table "
                                     "with the cosh-sum identity to 40 digits");

        // Q: instances (3, pi) and (5, pi^2/2) of the sinh-sum identity.
        std::vector<PInstance> q_instances;
        q_instances.push_back({3, pi});
        q_instances.push_back({5, pi * pi / 2});
        bool q_found = false;
        for (int sign : {1, -1})
            for (bool alt : {false, true})
                for (bool inv : {false, true}) {
                    Convention cand{sign, alt, inv};
                    bool ok = true;
                    for (const auto& inst : q_instances) {
                        auto mp = ell::modular_point_from_y(inst.y, prec);
                        RatPoly qp = apply_convention(b.sn2, inst.p - 1, (inst.p - 1) / 2, cand);
                        RatPoly R;
                        try {
                            R = compose_R(qp, inst.p);
                        } catch (const NonPolynomialResult&) {
                            ok = false;
                            break;
                        }
                        BigReal one(1, prec);
                        Rational pref(Int::factorial(static_cast<unsigned long>(inst.p - 1)),
                                      Int::pow2(static_cast<unsigned long>(inst.p + 1)));
                        BigReal rhs = -(BigReal(pref, prec) * mp.x * (one - mp.x) *
                                        pow_si(mp.z, inst.p + 1) * eval_poly_real(R, one - mp.x));
                        BigReal lhs = direct_inv_sinh_sum(inst.p, inst.y, prec);
                        if (!agrees_to_40_digits(lhs, rhs)) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        if (q_found) throw CalibrationFailure("Q calibration is ambiguous");
                        result.q = cand;
                        q_found = true;
                    }
                }
        if (!q_found)
            throw CalibrationFailure("no sign/factorial convention reconciles the sn^2 table "
                                     "with the sinh-sum identity to 40 digits");
    });
    return result;
}

} // namespace

void ensure_calibrated() { calibration(); }

CoefficientTable table_S(long max_index) {
    if (max_index < 0) throw DomainError("table_S: max_index must be >= 0");
    const auto& b = bundle_for(static_cast<std::size_t>(max_index) + 2);
    CoefficientTable t{Family::S, {}, max_index};
    for (long idx = 0; idx <= max_index; idx += 2) {
        long n = idx / 2;
        Rational scale = factorial_q(idx);
        if (n % 2) scale = -scale;
        RatPoly entry = scale * b.cd.term(static_cast<std::size_t>(idx));
        if (!entry.is_integral())
            throw IntegralityViolation("table_S: S_" + std::to_string(idx) + " is not integral");
        t.entries.emplace(idx, std::move(entry));
    }
    return t;
}

CoefficientTable table_A(long max_index) {
    if (max_index < 0) throw DomainError("table_A: max_index must be >= 0");
    const auto& b = bundle_for(static_cast<std::size_t>(max_index) + 2);
    CoefficientTable t{Family::A, {}, max_index};
    for (long idx = 0; idx <= max_index; idx += 2) {
        long n = idx / 2;
        Rational scale = factorial_q(idx);
        if (n % 2) scale = -scale;
        RatPoly entry = scale * b.nd.term(static_cast<std::size_t>(idx));
        if (!entry.is_integral())
            throw IntegralityViolation("table_A: A_" + std::to_string(idx) + " is not integral");
        t.entries.emplace(idx, std::move(entry));
    }
    return t;
}

CoefficientTable table_P(long max_index) {
    if (max_index < 1) throw DomainError("table_P: max_index must be >= 1");
    const Convention& conv = calibration().p;
    const auto& b = bundle_for(static_cast<std::size_t>(max_index) + 2);
    CoefficientTable t{Family::P, {}, max_index};
    for (long idx = 1; idx <= max_index; idx += 2)
        t.entries.emplace(idx, apply_convention(b.sd, idx, (idx - 1) / 2, conv));
    return t;
}

CoefficientTable table_Q(long max_index) {
    if (max_index < 2) throw DomainError("table_Q: max_index must be >= 2");
    const Convention& conv = calibration().q;
    const auto& b = bundle_for(static_cast<std::size_t>(max_index) + 2);
    CoefficientTable t{Family::Q, {}, max_index};
    for (long idx = 2; idx <= max_index; idx += 2)
        t.entries.emplace(idx, apply_convention(b.sn2, idx, idx / 2, conv));
    return t;
}

RatPoly table_R(long p) {
    if (p < 3 || p % 2 == 0) throw DomainError("table_R: p must be odd and >= 3");
    CoefficientTable q = table_Q(p - 1);
    return poly_compose_moebius(q.entries.at(p - 1), p);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::S: return "S";
        case Family::A: return "A";
        case Family::P: return "P";
        case Family::Q: return "Q";
        case Family::R: return "R";
    }
    return "?";
}

std::string table_to_json(const CoefficientTable& table) {
    std::ostringstream os;
    os << "{\"family\": \"" << family_name(table.family) << "\", \"max_index\": " << table.max_index
       << ", \"entries\": [";
    bool first = true;
    for (const auto& [idx, poly] : table.entries) {
        if (!first) os << ", ";
        first = false;
        os << "{\"index\": " << idx << ", \"coefficients\": [";
        for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
            if (i) os << ", ";
            os << '"' << poly.coeffs()[i].to_string() << '"';
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

} // namespace berndt::jacobi

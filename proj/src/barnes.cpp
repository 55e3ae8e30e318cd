#include "berndt/barnes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "berndt/errors.hpp"
#include "berndt/quadrature.hpp"

namespace berndt::barnes {

namespace {

const Rational& bernoulli(std::size_t n) {
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    while (cache.size() <= n) {
        std::size_t m = cache.size();
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        Rational acc(0);
        for (std::size_t k = 0; k < m; ++k)
            acc += Rational(Int::binomial(static_cast<unsigned long>(m + 1),
                                          static_cast<unsigned long>(k)),
                            Int(1)) *
                   cache[k];
        cache.push_back(-acc / Rational(static_cast<long>(m + 1)));
    }
    return cache[n];
}

BigComplex cx_one(mpfr_prec_t p) { return BigComplex(1, 0, p); }

} // namespace

BigComplex hurwitz_zeta(long s, const BigComplex& alpha_in, mpfr_prec_t precision) {
    if (s < 2) throw DomainError("hurwitz_zeta: integer s >= 2 required");
    const mpfr_prec_t wp = precision + 24;
    BigComplex alpha = alpha_in.at_precision(wp);
    if (alpha.real().sgn() <= 0) throw DomainError("hurwitz_zeta: Re(alpha) must be positive");

    double a_min = 0.25 * static_cast<double>(wp) + static_cast<double>(s) + 10.0;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 5) throw NonConvergence("hurwitz_zeta: asymptotic tail did not settle");
        long K = 0;
        double amag = alpha.abs().to_double();
        if (amag < a_min) K = static_cast<long>(std::ceil(a_min - alpha.real().to_double()));
        if (K < 0) K = 0;

        BigComplex head(wp);
        for (long k = 0; k < K; ++k)
            head = head + ipow_neg(alpha + BigComplex(BigReal(k, wp)), static_cast<unsigned long>(s));
        BigComplex beta = alpha + BigComplex(BigReal(K, wp));
        BigComplex beta_ms = ipow_neg(beta, static_cast<unsigned long>(s));  // beta^{-s}
        BigComplex beta_inv = cx_one(wp) / beta;
        // beta^{1-s}/(s-1) + beta^{-s}/2
        BigComplex tail = (beta_ms * beta) / BigComplex(BigReal(s - 1, wp)) +
                          BigComplex(BigReal(Rational(1, 2), wp)) * beta_ms;
        // sum_j B_{2j}/(2j)! (s)_{2j-1} beta^{-s-2j+1}
        BigComplex beta_pow = beta_ms * beta_inv;  // beta^{-s-1}
        BigReal poch(1, wp);                       // (s)_{2j-1} built incrementally
        mpfr_exp_t target = tail.abs().exponent2() - (wp + 4);
        bool diverged = false;
        mpfr_exp_t prev_mag = 0;
        bool have_prev = false;
        for (long j = 1; j <= 400; ++j) {
            // (s)_{2j-1} = s (s+1) ... (s+2j-2)
            if (j == 1) {
                poch = BigReal(s, wp);
            } else {
                poch *= BigReal(s + 2 * j - 3, wp);
                poch *= BigReal(s + 2 * j - 2, wp);
            }
            Rational bfac = bernoulli(static_cast<std::size_t>(2 * j)) /
                            Rational(Int::factorial(static_cast<unsigned long>(2 * j)), Int(1));
            BigComplex term = BigReal(bfac, wp) * (poch * beta_pow);  // beta^{-s-2j+1}
            tail = tail + term;
            mpfr_exp_t mag = term.abs().exponent2();
            if (mag < target) {
                diverged = false;
                break;
            }
            if (have_prev && mag > prev_mag) {
                diverged = true;
                break;
            }
            prev_mag = mag;
            have_prev = true;
            beta_pow = beta_pow * beta_inv * beta_inv;
            if (j == 400) diverged = true;
        }
        if (!diverged) return (head + tail).at_precision(precision);
        a_min *= 1.6;
    }
}

namespace {

// One merged direction: base period, weight shape, and the class signature.
struct Direction {
    enum class Shape {
        plain,       // single period, sigma = +1: W(l) = 1
        alternating, // single period, sigma = -1: W(l) = (-1)^l
        ratio2       // periods {beta, 2 beta}, signs {-1 on beta, +1 on 2 beta}:
                     // W(l) = (-1)^l (floor(l/2) + 1)
    };
    Shape shape;
    BigComplex base;
};

bool near_integer(const BigReal& v, long& out) {
    BigReal r = v + BigReal(0.5, v.precision());
    BigReal fl = floor(r);
    long cand = fl.to_long();
    BigReal diff = abs(v - BigReal(cand, v.precision()));
    if (diff.exponent2() < -40) {
        out = cand;
        return true;
    }
    return false;
}

// Group parallel periods; returns false when the configuration is not one of
// the supported weight shapes.
bool build_directions(const BarnesSpec& spec, mpfr_prec_t wp, std::vector<Direction>& out) {
    struct Member {
        BigComplex c;
        int sign;
        long mult = 1;
    };
    std::vector<std::vector<Member>> classes;
    for (std::size_t i = 0; i < spec.periods.size(); ++i) {
        BigComplex c = spec.periods[i].at_precision(wp);
        bool placed = false;
        for (auto& cls : classes) {
            BigComplex ratio = c / cls[0].c;
            if (ratio.real().sgn() > 0 &&
                (ratio.imag().is_zero() ||
                 ratio.imag().exponent2() - ratio.real().exponent2() < -40)) {
                cls.push_back({c, spec.signs[i], 1});
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({{c, spec.signs[i], 1}});
    }
    for (auto& cls : classes) {
        // base = member of smallest modulus; multiples must be integers
        std::size_t base_idx = 0;
        for (std::size_t i = 1; i < cls.size(); ++i)
            if (cls[i].c.abs() < cls[base_idx].c.abs()) base_idx = i;
        std::swap(cls[0], cls[base_idx]);
        for (std::size_t i = 1; i < cls.size(); ++i) {
            BigComplex ratio = cls[i].c / cls[0].c;
            long m = 0;
            if (!near_integer(ratio.real(), m) || m < 1) return false;
            cls[i].mult = m;
        }
        Direction d;
        d.base = cls[0].c;
        if (cls.size() == 1) {
            d.shape = cls[0].sign > 0 ? Direction::Shape::plain : Direction::Shape::alternating;
        } else if (cls.size() == 2 && cls[0].mult == 1 && cls[1].mult == 2 && cls[0].sign < 0 &&
                   cls[1].sign > 0) {
            d.shape = Direction::Shape::ratio2;
        } else {
            return false;
        }
        out.push_back(d);
    }
    // Innermost direction carries the closed-form reduction; prefer a shaped
    // one there (any works, order is otherwise immaterial).
    return true;
}

// Exact closed form of the innermost direction:
//   sum_l W(l) (A + l beta)^{-s}
BigComplex inner_direction_sum(const Direction& d, long s, const BigComplex& A, mpfr_prec_t wp) {
    if (d.shape == Direction::Shape::plain) {
        // beta^{-s} zeta_H(s, A/beta)
        return ipow_neg(d.base, static_cast<unsigned long>(s)) * hurwitz_zeta(s, A / d.base, wp);
    }
    BigComplex two_beta = d.base + d.base;
    BigComplex scale = ipow_neg(two_beta, static_cast<unsigned long>(s));
    BigComplex a0 = A / two_beta;
    BigComplex a1 = (A + d.base) / two_beta;
    if (d.shape == Direction::Shape::alternating)
        return scale * (hurwitz_zeta(s, a0, wp) - hurwitz_zeta(s, a1, wp));
    // ratio2: h(alpha) = zeta_H(s-1, alpha) + (1 - alpha) zeta_H(s, alpha)
    auto h = [&](const BigComplex& al) {
        return hurwitz_zeta(s - 1, al, wp) +
               (cx_one(wp) - al) * hurwitz_zeta(s, al, wp);
    };
    return scale * (h(a0) - h(a1));
}

struct OuterState {
    const std::vector<Direction>* dirs;
    long s;
    mpfr_prec_t wp;
    mpfr_exp_t stop;
    long budget;
};

BigComplex nested_sum(const OuterState& st, std::size_t level, const BigComplex& A);

// Truncated weighted sum over one outer direction; pairs consecutive terms for
// the sign-alternating shapes and stops once a doubling window adds less than
// the target.
BigComplex outer_direction_sum(const OuterState& st, std::size_t level, const BigComplex& A) {
    const Direction& d = (*st.dirs)[level];
    const bool paired = d.shape != Direction::Shape::plain;
    BigComplex sum(st.wp);
    BigComplex chunk(st.wp);
    long checkpoint = 64;
    for (long a = 0;; ++a) {
        BigComplex contrib(st.wp);
        if (d.shape == Direction::Shape::ratio2) {
            BigReal w(a + 1, st.wp);
            BigComplex g0 = nested_sum(st, level + 1, A + BigReal(2 * a, st.wp) * d.base);
            BigComplex g1 = nested_sum(st, level + 1, A + BigReal(2 * a + 1, st.wp) * d.base);
            contrib = w * (g0 - g1);
        } else if (d.shape == Direction::Shape::alternating) {
            BigComplex g0 = nested_sum(st, level + 1, A + BigReal(2 * a, st.wp) * d.base);
            BigComplex g1 = nested_sum(st, level + 1, A + BigReal(2 * a + 1, st.wp) * d.base);
            contrib = g0 - g1;
        } else {
            contrib = nested_sum(st, level + 1, A + BigReal(a, st.wp) * d.base);
        }
        sum = sum + contrib;
        chunk = chunk + contrib;
        if (a + 1 == checkpoint) {
            mpfr_exp_t scale = std::max(sum.abs().exponent2(), static_cast<mpfr_exp_t>(0));
            if (!chunk.is_zero() && chunk.abs().exponent2() - scale < st.stop) break;
            if (chunk.is_zero() && a > 256) break;
            chunk = BigComplex(st.wp);
            checkpoint *= 2;
            if ((paired ? 2 * checkpoint : checkpoint) > st.budget)
                throw SlowConvergence("barnes_lattice: truncation budget exhausted");
        }
    }
    return sum;
}

BigComplex nested_sum(const OuterState& st, std::size_t level, const BigComplex& A) {
    if (level + 1 == st.dirs->size()) return inner_direction_sum((*st.dirs)[level], st.s, A, st.wp);
    return outer_direction_sum(st, level, A);
}

// Direct truncated lattice sum for configurations outside the supported
// collapse shapes; usable only at modest accuracy targets.
BigComplex direct_lattice(const BarnesSpec& spec, mpfr_prec_t wp, mpfr_exp_t stop) {
    const std::size_t N = spec.periods.size();
    double min_re = 1e300;
    for (const auto& c : spec.periods) min_re = std::min(min_re, c.real().to_double());
    // Comparison with the integral of r^{N-1-s}: conservative per-axis cutoff.
    double tol_digits = -static_cast<double>(stop) * 0.30103;
    double power = static_cast<double>(spec.s - static_cast<long>(N));
    double nmax_d = std::pow(10.0, tol_digits / power) / min_re + 16.0;
    if (nmax_d > 4e6 || std::pow(nmax_d, static_cast<double>(N)) > 2e7)
        throw SlowConvergence("barnes_lattice: direct summation exceeds the term budget");
    long nmax = static_cast<long>(nmax_d);
    std::vector<long> idx(N, 0);
    BigComplex sum(wp);
    for (;;) {
        BigComplex den = spec.w.at_precision(wp);
        int sgn = 1;
        for (std::size_t j = 0; j < N; ++j) {
            den = den + BigReal(idx[j], wp) * spec.periods[j].at_precision(wp);
            if (spec.signs[j] < 0 && (idx[j] & 1)) sgn = -sgn;
        }
        BigComplex term = ipow_neg(den, static_cast<unsigned long>(spec.s));
        sum = sgn > 0 ? sum + term : sum - term;
        std::size_t j = 0;
        for (; j < N; ++j) {
            if (++idx[j] <= nmax) break;
            idx[j] = 0;
        }
        if (j == N) break;
    }
    return sum;
}

} // namespace

BarnesSpec c4_sigma4_spec(long s, mpfr_prec_t prec) {
    BarnesSpec spec;
    spec.s = s;
    spec.w = BigComplex(3, 0, prec);
    spec.periods = {BigComplex(2, 2, prec), BigComplex(2, -2, prec), BigComplex(1, 1, prec),
                    BigComplex(1, -1, prec)};
    spec.signs = {1, 1, -1, -1};
    return spec;
}

BigComplex barnes_lattice(const BarnesSpec& spec, mpfr_prec_t precision) {
    const std::size_t N = spec.periods.size();
    if (N == 0 || spec.signs.size() != N)
        throw DomainError("barnes_lattice: periods/signs must be nonempty and same length");
    if (spec.w.real().sgn() <= 0) throw DomainError("barnes_lattice: Re(w) must be positive");
    for (const auto& c : spec.periods)
        if (c.real().sgn() <= 0) throw DomainError("barnes_lattice: Re(periods) must be positive");
    if (spec.s <= static_cast<long>(N))
        throw SlowConvergence("barnes_lattice: absolute convergence requires s > N; "
                              "use the integral route");

    const mpfr_prec_t wp = precision + 32;
    const mpfr_exp_t stop = -(precision + 4);
    std::vector<Direction> dirs;
    if (build_directions(spec, wp, dirs)) {
        // Shift every direction's lattice to start at the common offset w.
        OuterState st{&dirs, spec.s, wp, stop, 1L << 22};
        return nested_sum(st, 0, spec.w.at_precision(wp)).at_precision(precision);
    }
    return direct_lattice(spec, wp, stop).at_precision(precision);
}

BigComplex barnes_integral(const BarnesSpec& spec, mpfr_prec_t precision) {
    const std::size_t N = spec.periods.size();
    if (N == 0 || spec.signs.size() != N)
        throw DomainError("barnes_integral: periods/signs must be nonempty and same length");
    if (spec.w.real().sgn() <= 0) throw DomainError("barnes_integral: Re(w) must be positive");
    const mpfr_prec_t wp = precision + 32;
    // e^{-wu} prod (1 - sigma e^{-cu})^{-1}
    //   = e^{-(w - sum c/2) u} prod_{+} (2 sinh(cu/2))^{-1} prod_{-} (2 cosh(cu/2))^{-1}
    std::vector<BigComplex> sinh_p, cosh_p;
    BigComplex half_sum(wp);
    long n_sinh = 0;
    for (std::size_t j = 0; j < N; ++j) {
        BigComplex half(spec.periods[j].real().at_precision(wp).ldexp2(-1),
                        spec.periods[j].imag().at_precision(wp).ldexp2(-1));
        half_sum = half_sum + half;
        if (spec.signs[j] > 0) {
            sinh_p.push_back(half);
            ++n_sinh;
        } else {
            cosh_p.push_back(half);
        }
    }
    if (spec.s <= n_sinh)
        throw DomainError("barnes_integral: kernel not integrable at 0 (s <= #positive signs)");
    auto kernel = quad::IntegrandSpec::kernel(spec.s, spec.w.at_precision(wp) - half_sum,
                                              std::move(sinh_p), std::move(cosh_p));
    BigComplex integral = quad::integrate(kernel, wp);
    // Divide by 2^N Gamma(s); s is a positive integer here.
    BigReal scale(Rational(Int(1), Int::factorial(static_cast<unsigned long>(spec.s - 1)) *
                                       Int::pow2(static_cast<unsigned long>(N))),
                  wp);
    return (scale * integral).at_precision(precision);
}

cf::ClosedForm zeta4_closed_form(long m) {
    if (m < 1) throw DomainError("zeta4_closed_form: m must be >= 1");
    Rational scale(Int(1),
                   Int(4) * Int::factorial(static_cast<unsigned long>(4 * m - 1)));
    return cf::berndt_closed_form(m).scaled(scale);
}

} // namespace berndt::barnes

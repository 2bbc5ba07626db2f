#include "freeid/analytic.hpp"

#include "freeid/cumulants.hpp"
#include "freeid/errors.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/numeric/odeint.hpp>

#include <json.hpp>

#include <array>
#include <cmath>
#include <limits>

namespace freeid {

namespace mp = boost::multiprecision;
using Real50 = mp::cpp_bin_float_50;
using Complex50 = mp::cpp_complex_50;

std::string to_string(Precision p) { return p == Precision::Double ? "double" : "extended"; }

Precision parse_precision(std::string_view name) {
    if (name == "double") return Precision::Double;
    if (name == "extended") return Precision::Extended;
    throw ParseError("unknown precision '" + std::string(name) + "'");
}

std::string to_string(Route r) {
    switch (r) {
        case Route::Exact: return "exact";
        case Route::Series: return "series";
        case Route::ContinuedFraction: return "cf";
    }
    return "?";
}

namespace {

void check_c(const Rational& c) {
    if (c < -1) throw DomainError("c must be at least -1, got " + to_string(c));
}

template <class R>
R real_of(const Rational& q) {
    if constexpr (std::is_same_v<R, double>) {
        return to_double(q);
    } else {
        return R(q.get_num().get_str()) / R(q.get_den().get_str());
    }
}

template <class R>
R abs_of(const std::complex<R>& z) {
    return std::abs(z);
}
inline Real50 abs_of(const Complex50& z) { return mp::abs(z); }

template <class R>
struct Cplx;
template <>
struct Cplx<double> {
    using type = std::complex<double>;
};
template <>
struct Cplx<Real50> {
    using type = Complex50;
};

template <class R>
typename Cplx<R>::type lift(Complex z) {
    return typename Cplx<R>::type(R(z.real()), R(z.imag()));
}

template <class C>
Complex lower(const C& z) {
    if constexpr (std::is_same_v<C, Complex>) {
        return z;
    } else {
        return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    }
}

template <class R>
typename Cplx<R>::type cf_backward(const Rational& c, Complex z, long depth) {
    using C = typename Cplx<R>::type;
    const R cr = real_of<R>(c);
    const C zc = lift<R>(z);
    C t = zc;
    for (long n = depth; n >= 1; --n) t = zc - (cr + R(n)) / t;
    return C(R(1)) / t;
}

template <class R>
R gamma_of(const R& x) {
    if constexpr (std::is_same_v<R, double>) {
        return std::tgamma(x);
    } else {
        return boost::math::tgamma(x);
    }
}

// c1 / c = i Gamma((c+1)/2) / (sqrt 2 Gamma(c/2 + 1))
template <class R>
R odd_over_c(const Rational& c) {
    const R cr = real_of<R>(c);
    using std::sqrt;
    return gamma_of<R>((cr + R(1)) / R(2)) / (sqrt(R(2)) * gamma_of<R>(cr / R(2) + R(1)));
}

template <class R>
struct SeriesParts {
    typename Cplx<R>::type e, ep, o, op;  // E~, E~', O, O'
    R max_term = 0;
    int terms = 0;
};

template <class R>
SeriesParts<R> series_parts(const Rational& c, Complex z) {
    using C = typename Cplx<R>::type;
    const R cr = real_of<R>(c);
    const C zc = lift<R>(z);
    const R az = static_cast<R>(std::abs(z));
    const R stop = std::is_same_v<R, double> ? R(1e-20) : R(1e-55);
    SeriesParts<R> s;
    s.e = s.ep = s.o = s.op = C(R(0));
    R et = R(-1) / R(2);  // e~_k, k >= 1
    R ot = R(1);          // o_k, k >= 0
    C p_even = C(R(1));   // z^{2k}
    C p_odd = zc;         // z^{2k-1} for k >= 1 (updated below)
    R mag_even = R(1);
    const int cap = 20000;
    for (int k = 0; k < cap; ++k) {
        // odd part
        C to = p_even * ot;
        s.op += to * R(2 * k + 1);
        s.o += to * zc;
        R m = abs_of(to) * R(2 * k + 1 + 1) * (az + R(1));
        if (k >= 1) {
            C te = p_even * et;
            s.e += te;
            s.ep += p_odd * (et * R(2 * k));
            R me = abs_of(te) * R(2 * k + 1);
            if (me > m) m = me;
            et *= -(cr + R(2 * k)) / (R(2 * k + 1) * R(2 * k + 2));
        }
        if (m > s.max_term) s.max_term = m;
        s.terms = k + 1;
        if (R(k) > az * az && m <= stop * s.max_term) return s;
        ot *= -(cr + R(2 * k + 1)) / (R(2 * k + 2) * R(2 * k + 3));
        p_odd = p_even * zc;
        p_even *= zc * zc;
        mag_even *= az * az;
    }
    throw PrecisionError("power series did not converge", static_cast<double>(s.max_term));
}

template <class R>
std::pair<Complex, double> series_value(const Rational& c, Complex z) {
    using C = typename Cplx<R>::type;
    auto s = series_parts<R>(c, z);
    const R cr = real_of<R>(c);
    const C chat(R(0), odd_over_c<R>(c));
    C num = s.ep + chat * s.op;
    C den = C(R(1)) + (s.e + chat * s.o) * cr;
    const R unit = std::numeric_limits<R>::epsilon();
    R scale = s.max_term * (abs_of(chat) + R(1));
    R den_abs = abs_of(den), num_abs = abs_of(num);
    R ac = cr < 0 ? R(-cr) : cr;
    if (den_abs <= R(64) * unit * scale * (ac + R(1)) * R(s.terms)) {
        // in binary64 this is only lost digits; at 50 digits it is a pole
        if constexpr (std::is_same_v<R, double>) return {Complex(0, 0), std::numeric_limits<double>::infinity()};
        throw PoleError("evaluation point is at a pole of G (zero of phi)", z.real(), z.imag());
    }
    // relative error estimate from cancellation in the sums
    R err = unit * scale * R(s.terms) * (R(1) / (num_abs + std::numeric_limits<R>::min()) + ac / den_abs);
    return {lower(C(-num / den)), static_cast<double>(err)};
}

}  // namespace

Complex cf_approximant(const Rational& c, Complex z, long depth, Precision p) {
    check_c(c);
    if (depth < 0) throw DomainError("negative depth");
    if (c == -1) return 1.0 / z;
    return p == Precision::Double ? cf_backward<double>(c, z, depth) : lower(cf_backward<Real50>(c, z, depth));
}

CfResult cf_eval(const Rational& c, Complex z, const CfOptions& opt) {
    check_c(c);
    if (z == Complex(0, 0)) throw PoleError("continued fraction at z = 0", 0, 0);
    if (c == -1) return {1.0 / z, 0, 0.0};
    long d = 8;
    Complex prev = cf_approximant(c, z, d, opt.precision);
    double change = 0.0;
    while (d < opt.max_depth) {
        d *= 2;
        Complex cur = cf_approximant(c, z, d, opt.precision);
        change = std::abs(cur - prev);
        if (change <= opt.tol * std::abs(cur)) return {cur, d, change};
        prev = cur;
    }
    throw PrecisionError("continued fraction did not converge by depth " + std::to_string(opt.max_depth), change);
}

Complex odd_coefficient_over_c(const Rational& c) {
    check_c(c);
    if (c == -1) throw DomainError("odd coefficient is singular at c = -1");
    return Complex(0, static_cast<double>(odd_over_c<Real50>(c)));
}

Complex calibrate_odd_coefficient_over_c(const Rational& c, Complex z) {
    check_c(c);
    if (c == -1) throw DomainError("odd coefficient is singular at c = -1");
    // G from the continued fraction at 50 digits
    Complex50 g;
    {
        long d = 16;
        Complex50 prev = cf_backward<Real50>(c, z, d);
        for (;;) {
            d *= 2;
            Complex50 cur = cf_backward<Real50>(c, z, d);
            if (mp::abs(cur - prev) < Real50(1e-40) * mp::abs(cur)) {
                g = cur;
                break;
            }
            if (d > (1L << 20)) throw PrecisionError("calibration continued fraction did not converge", 0.0);
            prev = cur;
        }
    }
    auto s = series_parts<Real50>(c, z);
    const Real50 cr = real_of<Real50>(c);
    // G (1 + c(E~ + x O)) = -(E~' + x O')  solved for x
    Complex50 x = -(s.ep + g + g * s.e * cr) / (s.op + g * s.o * cr);
    return lower(x);
}

SeriesResult g_series(const Rational& c, Complex z) {
    check_c(c);
    if (c == -1) return {1.0 / z, 0, Precision::Double};
    auto [v, err] = series_value<double>(c, z);
    if (err < 1e-14 && std::isfinite(v.real()) && std::isfinite(v.imag())) return {v, 0, Precision::Double};
    auto [w, err50] = series_value<Real50>(c, z);
    if (err50 > 1e-15) throw PrecisionError("series cancellation exceeds extended precision", err50);
    return {w, 0, Precision::Extended};
}

GValue G_eval(const Rational& c, Complex z, const CfOptions& opt) {
    check_c(c);
    if (c == -1) {
        if (z == Complex(0, 0)) throw PoleError("G of the point mass at 0", 0, 0);
        return {1.0 / z, Route::Exact};
    }
    const double r = std::abs(z);
    if (r <= 6.0) return {g_series(c, z).value, Route::Series};
    if (z.imag() >= 1.0) return {cf_eval(c, z, opt).value, Route::ContinuedFraction};
    if (r <= 12.0) return {g_series(c, z).value, Route::Series};
    if (z.imag() > 0.0) return {cf_eval(c, z, opt).value, Route::ContinuedFraction};
    throw DomainError("meromorphic continuation is only evaluated for |z| <= 12 below the line Im z = 1");
}

RiccatiResidual riccati_residual(const Rational& c, Complex z, double step) {
    check_c(c);
    if (!(step > 0)) throw DomainError("step must be positive");
    const double cd = to_double(c);
    Complex g = G_eval(c, z).value;
    Complex gp = G_eval(c, z + step).value, gm = G_eval(c, z - step).value;
    if (std::abs(g) > 1e8 || std::abs(gp) > 1e8 || std::abs(gm) > 1e8)
        throw PoleError("Riccati residual requested next to a pole", z.real(), z.imag());
    RiccatiResidual out;
    Complex dg = (gp - gm) / (2 * step);
    out.g_form = std::abs(dg - (cd * g * g - z * g + 1.0));
    Complex f = 1.0 / g, df = (1.0 / gp - 1.0 / gm) / (2 * step);
    out.f_form = std::abs(df - (-f * f + z * f - cd));
    return out;
}

// ------------------------------------------------------------ f trajectory

std::string FTrajectory::to_json() const {
    nlohmann::ordered_json j;
    j["c"] = to_string(c);
    j["q0"] = q0;
    j["s_crit"] = s_crit;
    j["f_at_s"] = f_at_s;
    j["bound"] = bound;
    j["f_above_r"] = f_above_r;
    j["fprime_below_one"] = fprime_below_one;
    j["unique_zero"] = unique_zero;
    j["unique_critical"] = unique_critical;
    j["critical_below_bound"] = critical_below_bound;
    j["samples"] = r.size();
    j["failures"] = failures;
    return j.dump();
}

FTrajectory f_trajectory(const Rational& c, double r_lo, double r_hi, double tol, double sample_step) {
    if (!(c > -1 && c < 0)) throw DomainError("f_trajectory needs -1 < c < 0");
    if (!(r_lo < r_hi) || r_hi < 1.0) throw DomainError("need r_lo < r_hi and r_hi >= 1");
    if (!(sample_step > 0) || !(tol > 0)) throw DomainError("step and tolerance must be positive");
    namespace ode = boost::numeric::odeint;
    using State = std::array<double, 1>;
    const double cd = to_double(c);

    FTrajectory out;
    out.c = c;
    out.bound = -2.0 * std::sqrt(-cd);

    // f(r) = Im F(ir) at the top from the continued fraction
    State x{(1.0 / cf_eval(c, Complex(0, r_hi), {1e-15}).value).imag()};
    auto rhs = [cd](const State& y, State& dy, double r) { dy[0] = y[0] * y[0] - r * y[0] - cd; };

    std::vector<double> times;
    for (long i = 0;; ++i) {
        double r = r_hi - static_cast<double>(i) * sample_step;
        if (r < r_lo) break;
        times.push_back(r);
    }
    auto stepper = ode::make_dense_output(tol, tol, ode::runge_kutta_dopri5<State>());
    ode::integrate_times(stepper, rhs, x, times.begin(), times.end(), -sample_step, [&](const State& y, double r) {
        if (!std::isfinite(y[0])) throw PrecisionError("f trajectory blew up", r);
        out.r.push_back(r);
        out.f.push_back(y[0]);
        out.fprime.push_back(y[0] * y[0] - r * y[0] - cd);
    });

    // roots are refined by re-integrating from the bracketing sample, so they do not depend on the sampling
    auto state_at = [&](std::size_t i, double r) {
        State y{out.f[i]};
        if (r != out.r[i])
            ode::integrate_adaptive(ode::make_controlled(tol, tol, ode::runge_kutta_dopri5<State>()), rhs, y, out.r[i], r,
                                    (r - out.r[i]) / 16);
        return y[0];
    };
    auto refine = [&](std::size_t i, auto&& g) {
        boost::uintmax_t iters = 100;
        auto [a, b] = boost::math::tools::toms748_solve(g, out.r[i], out.r[i - 1], boost::math::tools::eps_tolerance<double>(48), iters);
        return 0.5 * (a + b);
    };
    int zeros = 0, crits = 0;
    for (std::size_t i = 0; i < out.r.size(); ++i) {
        if (!(out.f[i] > out.r[i])) out.f_above_r = false;
        if (!(out.fprime[i] < 1.0)) out.fprime_below_one = false;
        if (i == 0) continue;
        // samples run downward in r
        if ((out.f[i - 1] > 0) != (out.f[i] > 0)) {
            ++zeros;
            out.q0 = refine(i, [&](double r) { return state_at(i - 1, r); });
        }
        if ((out.fprime[i - 1] > 0) != (out.fprime[i] > 0)) {
            ++crits;
            out.s_crit = refine(i, [&](double r) {
                double y = state_at(i - 1, r);
                return y * y - r * y - cd;
            });
            out.f_at_s = state_at(i - 1, out.s_crit);
        }
    }
    out.unique_zero = zeros == 1 && out.q0 < 0;
    out.unique_critical = crits == 1;
    out.critical_below_bound = crits == 1 && out.s_crit < out.bound;
    if (!out.f_above_r) out.failures.push_back("f(r) > r violated");
    if (!out.fprime_below_one) out.failures.push_back("f'(r) < 1 violated");
    if (!out.unique_zero) out.failures.push_back("expected a unique negative zero of f, found " + std::to_string(zeros));
    if (!out.unique_critical) out.failures.push_back("expected a unique critical point, found " + std::to_string(crits));
    if (crits == 1 && !out.critical_below_bound) out.failures.push_back("critical point not below -2 sqrt(-c)");
    return out;
}

// ------------------------------------------------------- Voiculescu transform

VoiculescuValue voiculescu_phi(const Rational& c, Complex z) {
    check_c(c);
    if (!(z.imag() > 0)) throw DomainError("voiculescu_phi needs Im z > 0");
    if (c == -1) return {Complex(0, 0), z, 0, 0.0};
    const double cd = to_double(c);
    const double T = 10.0 * (1.0 + std::abs(z));
    VoiculescuValue out;
    Complex w = z + Complex(0, T);
    auto solve = [&](Complex target) {
        Complex f = F_eval(c, w);
        double res = std::abs(f - target);
        for (int it = 0; it < 60; ++it) {
            if (res <= 1e-13 * (1.0 + std::abs(target))) return res;
            Complex fp = -f * f + w * f - cd;
            if (std::abs(fp) < 1e-300) throw ContinuationError("critical point of F met during continuation", w.real(), w.imag());
            Complex delta = (f - target) / fp;
            double lambda = 1.0;
            for (;;) {
                Complex wn = w - lambda * delta;
                Complex fn;
                bool ok = true;
                try {
                    fn = F_eval(c, wn);
                } catch (const Error&) {
                    ok = false;
                }
                if (ok && std::abs(fn - target) < res) {
                    w = wn;
                    f = fn;
                    res = std::abs(fn - target);
                    break;
                }
                lambda /= 2;
                if (lambda < 1e-8) throw ContinuationError("Newton step could not reduce the residual", w.real(), w.imag());
            }
            ++out.newton_steps;
        }
        if (res <= 1e-10 * (1.0 + std::abs(target))) return res;
        throw ContinuationError("Newton iteration did not converge", w.real(), w.imag());
    };
    for (double t = T; t > 1e-3; t /= 2) solve(z + Complex(0, t));
    out.residual = solve(z);
    out.w = w;
    out.phi = w - z;
    return out;
}

DecompositionResidual decomposition_residual(const Rational& c, Complex z) {
    if (!(c > -1)) throw DomainError("decomposition identity needs c > -1");
    if (!(z.imag() > 0)) throw DomainError("decomposition identity is checked for Im z > 0");
    const Rational c1 = c + 1;
    const double s = std::sqrt(to_double(c1));
    DecompositionResidual out;
    // two independent evaluators: continued fraction for mu_{c+1}, series for mu_c
    Complex g1 = cf_eval(c1, z).value;
    Complex f0 = 1.0 / g_series(c, z).value;
    out.shift = std::abs(g1 - (z - f0) / to_double(c1));
    Complex g1s = cf_eval(c1, s * z).value;
    Complex f0s = 1.0 / g_series(c, s * z).value;
    out.dilation = std::abs(f0s / s - (z - s * g1s));
    return out;
}

double density_eval(const Rational& c, double u, double eps) {
    check_c(c);
    if (c == -1) throw DomainError("the point mass has no density");
    if (!(eps > 0)) throw DomainError("eps must be positive");
    return -G_eval(c, Complex(u, eps)).value.imag() / M_PI;
}

// --------------------------------------------------------------- formal ODE

FormalOdeReport formal_phi_ode_check(const std::vector<Rational>& s, int N) {
    if (N < 0) throw DomainError("negative order");
    if (static_cast<int>(s.size()) < N + 1) throw DomainError("sequence shorter than the requested order");
    FormalOdeReport r;
    if (s[0] != 1) return {false, 0};
    for (int n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (int a = 0; a <= n - 2; ++a) acc += (n - 2 - a + 1) * s[a] * s[n - 2 - a];
        if (acc != s[n]) return {false, n};
    }
    return r;
}

FormalOdeReport formal_phi_ode_check(int N) {
    auto g = gaussian_free_cumulants(N + 2);
    return formal_phi_ode_check(g.shifted.values, N);
}

}  // namespace freeid

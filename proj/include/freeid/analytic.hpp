#pragma once

#include "freeid/rational.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace freeid {

using Complex = std::complex<double>;

enum class Precision { Double, Extended };  // Extended: 50 significant digits
std::string to_string(Precision p);
Precision parse_precision(std::string_view name);

struct CfOptions {
    double tol = 1e-14;             // relative change between approximants
    long max_depth = 1L << 21;
    Precision precision = Precision::Double;
};

struct CfResult {
    Complex value;
    long depth = 0;       // depth of the accepted approximant
    double change = 0.0;  // |G_d - G_{d/2}|
};

// Finite continued fraction with numerators b_1..b_depth of mu_c.
Complex cf_approximant(const Rational& c, Complex z, long depth, Precision p = Precision::Double);
// Adaptive depth (doubling). PrecisionError if the cap is reached.
CfResult cf_eval(const Rational& c, Complex z, const CfOptions& opt = {});

// Odd-part constant of the entire solution phi, normalized as c0 = 1:
// c1 = i sqrt(2) Gamma((c+1)/2) / Gamma(c/2). Returned divided by c (finite at c = 0).
Complex odd_coefficient_over_c(const Rational& c);
// The same constant fitted numerically so that the series matches the
// continued fraction at z (default 10i).
Complex calibrate_odd_coefficient_over_c(const Rational& c, Complex z = Complex(0, 10));

struct SeriesResult {
    Complex value;
    int terms = 0;
    Precision precision = Precision::Double;
};
// G = -(E~' + c1~ O') / (1 + c (E~ + c1~ O)), valid for all c > -1.
SeriesResult g_series(const Rational& c, Complex z);

enum class Route { Exact, Series, ContinuedFraction };
std::string to_string(Route r);

struct GValue {
    Complex value;
    Route route = Route::Exact;
};

// Cauchy transform of mu_c (meromorphic continuation off the upper half-plane).
GValue G_eval(const Rational& c, Complex z, const CfOptions& opt = {});
inline Complex F_eval(const Rational& c, Complex z, const CfOptions& opt = {}) { return 1.0 / G_eval(c, z, opt).value; }

struct RiccatiResidual {
    double g_form = 0.0;  // |G' - (c G^2 - z G + 1)|
    double f_form = 0.0;  // |F' - (-F^2 + z F - c)|
};
RiccatiResidual riccati_residual(const Rational& c, Complex z, double step = 1e-5);

struct FTrajectory {
    Rational c;
    std::vector<double> r, f, fprime;
    double q0 = 0.0;      // zero of f
    double s_crit = 0.0;  // zero of f'
    double f_at_s = 0.0;
    double bound = 0.0;   // -2 sqrt(-c)
    bool f_above_r = true;
    bool fprime_below_one = true;
    bool unique_zero = true;
    bool unique_critical = true;
    bool critical_below_bound = true;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    std::string to_json() const;
};
inline constexpr double kDefaultFTol = 1e-10;
FTrajectory f_trajectory(const Rational& c, double r_lo = -40.0, double r_hi = 12.0, double tol = kDefaultFTol,
                         double sample_step = 0.01);

struct VoiculescuValue {
    Complex phi;
    Complex w;  // F^{-1}(z)
    int newton_steps = 0;
    double residual = 0.0;
};
VoiculescuValue voiculescu_phi(const Rational& c, Complex z);

struct DecompositionResidual {
    double shift = 0.0;     // |G_{c+1}(z) - (z - F_c(z))/(c+1)|
    double dilation = 0.0;  // |F_c(sz)/s - (z - s G_{c+1}(sz))|, s = sqrt(c+1)
};
DecompositionResidual decomposition_residual(const Rational& c, Complex z);

double density_eval(const Rational& c, double u, double eps = 1e-10);

struct FormalOdeReport {
    bool ok = true;
    std::optional<int> failing_order;
};
// Checks s_0 = 1 and s_n = sum_{a+b=n-2} (b+1) s_a s_b through order N.
FormalOdeReport formal_phi_ode_check(const std::vector<Rational>& s, int N);
FormalOdeReport formal_phi_ode_check(int N);

}  // namespace freeid

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freeid/analytic.hpp"
#include "freeid/errors.hpp"
#include "freeid/fid.hpp"
#include "freeid/jacobi.hpp"
#include "freeid/linalg.hpp"

#include <cmath>

using namespace freeid;

namespace {

std::vector<Complex> grid25() {
    std::vector<Complex> g;
    for (double x : {-2.0, -1.0, 0.0, 1.0, 2.5})
        for (double y : {0.5, 1.0, 1.5, 2.0, 3.0}) g.emplace_back(x, y);
    return g;
}

const Rational kAnalyticCs[] = {Rational(-9, 10), Rational(-1, 2), Rational(0), Rational(1, 2)};

// sign of H_k predicted from the pivots: s0^{k+1} prod b_j^{k+1-j}
int predicted_sign(const Rational& s0, const std::vector<Rational>& beta, int k) {
    int s = (k + 1) % 2 == 0 ? 1 : sgn(s0);
    for (int j = 1; j <= k; ++j)
        if ((k + 1 - j) % 2 == 1) s *= sgn(beta[j - 1]);
    return s;
}

}  // namespace

TEST_CASE("jacobi data of mu_c") {
    auto J = mu_c_jacobi(0, 5);
    CHECK(J.beta == std::vector<Rational>{1, 2, 3, 4, 5});
    CHECK(J.alpha == std::vector<Rational>(5, Rational(0)));
    CHECK(mu_c_jacobi(-1, 3).beta == std::vector<Rational>(3, Rational(0)));
    CHECK(mu_c_jacobi(Rational(9, 10), 2).beta == std::vector<Rational>{Rational(19, 10), Rational(29, 10)});
    CHECK_THROWS_AS(mu_c_jacobi(Rational(-11, 10), 3), DomainError);
}

TEST_CASE("moments from jacobi data") {
    auto m = moments_from_jacobi(mu_c_jacobi(0, 10), 20);
    for (int n = 0; n <= 10; ++n) {
        CHECK(m[2 * n] == Rational(double_factorial(2 * n - 1)));
        CHECK(m[2 * n + (n < 10 ? 1 : 0)] == (n < 10 ? Rational(0) : m[20]));
    }
    auto d = moments_from_jacobi(mu_c_jacobi(-1, 4), 8);
    for (int n = 1; n <= 8; ++n) CHECK(d[n] == 0);
    auto one = moments_from_jacobi(mu_c_jacobi(1, 4), 8);
    CHECK(one[2] == 2);
    CHECK(one[4] == 10);  // 2*2 + 2*3
    CHECK(jacobi_from_moments(one).params.beta == std::vector<Rational>{2, 3, 4, 5});
    // nonsymmetric data with both recurrences
    JacobiParams J{{1, Rational(-1, 2), 3, 0}, {2, Rational(1, 3), 5, 7}};
    auto inv = jacobi_from_moments(moments_from_jacobi(J, 8));
    CHECK(inv.params.beta == J.beta);
    CHECK(inv.params.alpha == J.alpha);
    CHECK(moments_from_integer_jacobi({1, 2, 3, 4}, 8) == std::vector<BigInt>{1, 0, 1, 0, 3, 0, 15, 0, 105});
    CHECK_THROWS_AS(moments_from_jacobi(mu_c_jacobi(0, 3), 7), BoundError);
}

TEST_CASE("jacobi inversion") {
    auto inv = jacobi_from_moments(moments_from_jacobi(mu_c_jacobi(0, 40), 80));
    REQUIRE(inv.params.depth() == 40);
    for (int n = 1; n <= 40; ++n) CHECK(inv.params.beta[n - 1] == n);
    CHECK_FALSE(inv.first_nonpositive);
    auto third = mu_c_jacobi(Rational(1, 3), 40);
    CHECK(jacobi_from_moments(moments_from_jacobi(third, 80)).params.beta == third.beta);
    auto g = jacobi_from_moments(gaussian_moments(12));
    CHECK(g.params.beta == std::vector<Rational>{1, 2, 3, 4, 5, 6});
    auto sc = jacobi_from_moments(semicircle_moments(20));
    CHECK(sc.params.beta == std::vector<Rational>(10, Rational(1)));
    // Bernoulli on {-1, 1}: finite support stops the recursion
    std::vector<Rational> bern(9);
    for (int n = 0; n <= 8; ++n) bern[n] = n % 2 == 0 ? 1 : 0;
    auto b = jacobi_from_moments(RationalSeq(bern, SeqRole::Moment));
    CHECK(b.zero_pivot == 2);
    CHECK(b.residual_vanishes);
    // a negative pivot is reported, not thrown
    auto neg = jacobi_from_moments(moments_from_jacobi(JacobiParams{{0, 0, 0}, {1, -2, 3}}, 6));
    CHECK(neg.first_nonpositive == 2);
}

TEST_CASE("free cumulants of mu_c") {
    auto f = free_cumulants_of_mu_c(0, 24);
    for (int n = 1; n <= 8; ++n) CHECK(f[2 * n] == Rational(count_connected_pairings(2 * n)));
    for (int n = 1; n <= 12; ++n) CHECK(f[2 * n - 1] == 0);
    CHECK(f[24] == Rational(gaussian_free_cumulants(24).free[24]));
    auto d = free_cumulants_of_mu_c(-1, 10);
    for (int n = 0; n <= 10; ++n) CHECK(d[n] == 0);
    // integer dilation agrees with the plain rational pipeline
    for (Rational c : {Rational(9, 10), Rational(-3, 4), Rational(5, 3)}) {
        auto direct = free_from_moments(moments_from_jacobi(mu_c_jacobi(c, 12), 24));
        CHECK(free_cumulants_of_mu_c(c, 24) == direct);
    }
    CHECK_THROWS_AS(free_cumulants_of_mu_c(0, kMaxFidOrder + 1), BoundError);
}

TEST_CASE("hankel signs") {
    auto s = gaussian_free_cumulants(12).shifted.values;
    CHECK(hankel_sign(s, 3) == 1);
    CHECK(hankel_sign({Rational(-2)}, 0) == -1);
    CHECK(hankel_sign({Rational(0)}, 0) == 0);
    std::vector<Rational> mixed(moments_from_jacobi(JacobiParams{std::vector<Rational>(11, Rational(0)), {1, -2, 3, -1, 2, 5, -3, 1, 1, 2, 4}}, 22).values);
    auto nine = integer_shifted_sequence(Rational(9, 10), 24);
    std::vector<Rational> nine_r(nine.begin(), nine.end());
    for (const auto* seq : {&s, &mixed, &nine_r}) {
        auto inv = jacobi_from_moments(RationalSeq(*seq, SeqRole::Shifted));
        for (int k = 0; k <= 10 && k <= inv.params.depth(); ++k)
            CHECK(hankel_sign(*seq, k) == predicted_sign((*seq)[0], inv.params.beta, k));
    }
    for (int k = 0; k <= 10; ++k) CHECK(hankel_sign(nine_r, k) == 1);
    CHECK_THROWS_AS(hankel_sign(std::vector<Rational>(100, Rational(1)), kMaxHankelDirect + 1), BoundError);
}

TEST_CASE("free infinite divisibility test") {
    for (Rational c : {Rational(-1), Rational(-3, 4), Rational(-1, 2), Rational(-1, 4), Rational(0)})
        CHECK(fid_test(c, 120).verdict == Verdict::Pass);
    auto r = fid_test(Rational(9, 10), 200);
    CHECK(r.verdict == Verdict::Fail);
    CHECK(r.first_negative_index == 97);
    for (int k = 1; k < 97; ++k) CHECK(r.beta_signs[k - 1] == 1);
    auto one = fid_test(1, 200);
    CHECK(one.verdict == Verdict::Fail);
    CHECK(one.first_negative_index == 83);
    // too short to see the failure
    CHECK(fid_test(Rational(9, 10), 120).verdict == Verdict::Pass);
    CHECK_THROWS_AS(fid_test(0, 3), DomainError);
    CHECK(fid_test(0, 8).to_json().find("\"verdict\":\"PASS\"") != std::string::npos);
}

TEST_CASE("series and continued fraction agree") {
    const Complex pts[] = {{0, 2}, {1, 2}, {-1, 1}, {2, 0.5}, {0.5, 3}, {-3, 1}, {4, 2}, {0, 5}, {-2, 2.5}, {1.5, 1.5}};
    for (const auto& c : kAnalyticCs)
        for (auto z : pts) CHECK(std::abs(g_series(c, z).value - cf_eval(c, z).value) < 1e-10);
    CHECK(std::abs(g_series(Rational(1, 2), {0, 2}).value - cf_eval(Rational(1, 2), {0, 2}).value) < 1e-10);
    CHECK(cf_eval(-1, {0, 3}).value == 1.0 / Complex(0, 3));
    for (const auto& c : kAnalyticCs) {
        // z G(z) = 1 + m_2 / z^2 + ..., m_2 = c + 1
        auto g = G_eval(c, {0, 1000}).value;
        CHECK(std::abs(Complex(0, 1000) * g - 1.0) < 1e-6 * to_double(c + 1) + 1e-12);
        if (c <= 0) CHECK(std::abs(Complex(0, 1000) * g - 1.0) < 1e-6);
    }
}

TEST_CASE("continued fraction against moments and bracketing") {
    // asymptotic series at 10i: sum m_2n z^{-2n-1}
    Complex z(0, 10), acc = 0, zp = 1.0 / z;
    for (int n = 0; n <= 12; ++n) {
        acc += static_cast<double>(double_factorial(2 * n - 1).get_d()) * zp;
        zp /= z * z;
    }
    CHECK(std::abs(cf_eval(0, z).value - acc) < 1e-8);
    const double g = cf_eval(0, {0, 2}).value.imag();
    for (long d = 2; d < 40; d += 2) {
        double even = cf_approximant(0, {0, 2}, d).imag(), odd = cf_approximant(0, {0, 2}, d + 1).imag();
        CHECK((even - g) * (odd - g) <= 0);
    }
    CHECK(std::abs(cf_approximant(0, {0, 2}, 200, Precision::Extended) - cf_approximant(0, {0, 2}, 200)) < 1e-14);
}

TEST_CASE("odd coefficient calibration") {
    for (const auto& c : kAnalyticCs) {
        auto closed = odd_coefficient_over_c(c), fitted = calibrate_odd_coefficient_over_c(c);
        CHECK(std::abs(closed - fitted) < 1e-10 * std::abs(closed));
    }
    CHECK(std::abs(odd_coefficient_over_c(0) - Complex(0, std::sqrt(M_PI / 2))) < 1e-14);
}

TEST_CASE("cauchy transform signs and riccati residuals") {
    for (const auto& c : kAnalyticCs)
        for (auto z : grid25()) {
            CHECK(G_eval(c, z).value.imag() < 0);
            auto r = riccati_residual(c, z);
            CHECK(r.g_form < 1e-6);
            CHECK(r.f_form < 1e-6);
        }
    CHECK(riccati_residual(Rational(1, 2), {1, 2}, 1e-5).g_form < 1e-6);
    CHECK(riccati_residual(0, {0, 2}).g_form < 1e-6);
    // central difference: halving the step quarters the residual
    double r1 = riccati_residual(Rational(1, 2), {1, 2}, 1e-2).g_form;
    double r2 = riccati_residual(Rational(1, 2), {1, 2}, 5e-3).g_form;
    CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("decomposition identity") {
    for (const auto& c : kAnalyticCs)
        for (auto z : grid25()) {
            auto d = decomposition_residual(c, z);
            CHECK(d.shift < 1e-8);
            CHECK(d.dilation < 1e-8);
        }
    CHECK(decomposition_residual(0, {0, 2}).shift < 1e-8);
    CHECK(decomposition_residual(Rational(-1, 2), {1, 1}).shift < 1e-8);
    CHECK_THROWS_AS(decomposition_residual(-1, {0, 1}), DomainError);
    CHECK_THROWS_AS(decomposition_residual(Rational(1, 2), {1, 0}), DomainError);
}

TEST_CASE("densities") {
    const double norm = 1.0 / std::sqrt(2 * M_PI);
    for (double u : {0.0, 1.0, -1.0, 2.0, -2.0}) CHECK(std::abs(density_eval(0, u) - norm * std::exp(-u * u / 2)) < 1e-4);
    for (const auto& c : kAnalyticCs)
        for (double u : {0.3, 1.1, 2.7, 4.0, 7.5}) {
            double p = density_eval(c, u);
            CHECK(p > 0);
            CHECK(std::abs(p - density_eval(c, -u)) < 1e-10);
        }
    CHECK_THROWS_AS(density_eval(-1, 0), DomainError);
}

TEST_CASE("f trajectories") {
    double last_q0 = 1.0;
    for (Rational c : {Rational(-9, 10), Rational(-1, 2), Rational(-1, 10)}) {
        auto t = f_trajectory(c);
        CHECK(t.ok());
        CHECK(t.q0 < 0);
        CHECK(t.s_crit < t.bound);
        CHECK(t.s_crit < t.q0);
        // q0 moves down as c increases towards 0
        CHECK(t.q0 < last_q0);
        last_q0 = t.q0;
        // against F(ir) from the transform at positive r
        for (std::size_t i = 0; i < t.r.size(); i += 150)
            if (t.r[i] >= 1.0) CHECK(std::abs(t.f[i] - (1.0 / G_eval(c, {0, t.r[i]}).value).imag()) < 1e-7);
        // f(r) - r ~ (c+1)/r at the top
        CHECK(std::abs((t.f.front() - t.r.front()) * t.r.front() - to_double(c + 1)) < 0.05);
    }
    auto half = f_trajectory(Rational(-1, 2));
    CHECK(half.s_crit < -2 * std::sqrt(0.5));
    // located roots do not depend on the sample spacing
    for (double h : {0.1, 1.0, 10.0}) {
        auto coarse = f_trajectory(Rational(-1, 2), -40, 12, kDefaultFTol, h);
        CHECK(std::abs(coarse.q0 - half.q0) < 1e-8);
        CHECK(std::abs(coarse.s_crit - half.s_crit) < 1e-8);
    }
    CHECK_THROWS_AS(f_trajectory(0), DomainError);
}

TEST_CASE("voiculescu transform") {
    CHECK(voiculescu_phi(-1, {1, 1}).phi == Complex(0, 0));
    double worst = -1e300;
    for (double x : {-5.0, -2.5, 0.0, 2.5, 5.0})
        for (double y : {0.2, 1.0, 5.0}) {
            auto v = voiculescu_phi(0, {x, y});
            CHECK(std::abs(F_eval(0, v.w) - Complex(x, y)) < 1e-9);
            worst = std::max(worst, v.phi.imag());
        }
    CHECK(worst <= 1e-8);
    for (Rational c : {Rational(-1, 2), Rational(-9, 10)})
        for (double x : {-1.0, 0.0, 2.0}) CHECK(voiculescu_phi(c, {x, 0.5}).phi.imag() <= 1e-8);
    // for c = 1/2 the map is only explored; it must still solve F(w) = z
    auto e = voiculescu_phi(Rational(1, 2), {1, 1});
    CHECK(std::abs(F_eval(Rational(1, 2), e.w) - Complex(1, 1)) < 1e-9);
    CHECK_THROWS_AS(voiculescu_phi(0, {1, 0}), DomainError);
}

TEST_CASE("formal phi equation") {
    CHECK(formal_phi_ode_check(12).ok);
    CHECK(formal_phi_ode_check(2).ok);
    auto s = gaussian_free_cumulants(14).shifted.values;
    s[6] += 1;
    auto r = formal_phi_ode_check(s, 12);
    CHECK_FALSE(r.ok);
    CHECK(r.failing_order == 6);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freeid/cumulants.hpp"
#include "freeid/errors.hpp"

using namespace freeid;

namespace {

RationalSeq moments(std::vector<Rational> v) { return {std::move(v), SeqRole::Moment}; }

std::vector<RationalSeq> test_moment_set(int N) {
    std::vector<RationalSeq> out{gaussian_moments(N), semicircle_moments(N)};
    // Poisson(1): Bell numbers
    std::vector<Rational> bell(N + 1);
    std::vector<std::vector<BigInt>> tri{{1}};
    bell[0] = 1;
    for (int n = 1; n <= N; ++n) {
        std::vector<BigInt> row{tri.back().back()};
        for (auto& x : tri.back()) row.push_back(row.back() + x);
        tri.push_back(row);
        bell[n] = Rational(tri[n][0]);
    }
    out.push_back(moments(bell));
    // uniform on [0,1]
    std::vector<Rational> uni(N + 1);
    for (int n = 0; n <= N; ++n) uni[n] = Rational(1, n + 1);
    out.push_back(moments(uni));
    // an arbitrary non-symmetric rational sequence
    std::vector<Rational> odd(N + 1);
    odd[0] = 1;
    for (int n = 1; n <= N; ++n) odd[n] = Rational(n * n - 3, 2 * n + 1);
    out.push_back(moments(odd));
    return out;
}

}  // namespace

TEST_CASE("classical examples") {
    auto c = classical_from_moments(gaussian_moments(6));
    CHECK(to_strings(c.values) == std::vector<std::string>{"0", "0", "1", "0", "0", "0", "0"});
    auto d = classical_from_moments(moments({1, 0, 0, 0, 0}));
    for (auto& x : d.values) CHECK(x == 0);
    auto e = classical_from_moments(moments({1, 1, 2, 5}));
    CHECK(e[1] == 1);
    CHECK(e[2] == 1);
    CHECK(e[3] == 1);
}

TEST_CASE("free examples") {
    auto f = free_from_moments(gaussian_moments(12));
    CHECK(to_strings(f.values) ==
          std::vector<std::string>{"0", "0", "1", "0", "1", "0", "4", "0", "27", "0", "248", "0", "2830"});
    auto m = moments_from_free(semicircle_free(6));
    CHECK(m[4] == 2);
    CHECK(m[6] == 5);
    auto z = free_from_moments(moments({1, 0, 0, 0}));
    for (auto& x : z.values) CHECK(x == 0);
}

TEST_CASE("boolean examples") {
    auto b = boolean_from_moments(gaussian_moments(6));
    CHECK(b[2] == 1);
    CHECK(b[4] == 2);
    CHECK(b[6] == 10);
    auto z = boolean_from_moments(moments({1, 0, 0}));
    for (auto& x : z.values) CHECK(x == 0);
}

TEST_CASE("round trips") {
    for (const auto& m : test_moment_set(16)) {
        CHECK(moments_from_classical(classical_from_moments(m)) == m);
        CHECK(moments_from_free(free_from_moments(m)) == m);
        CHECK(moments_from_boolean(boolean_from_moments(m)) == m);
    }
}

TEST_CASE("series route equals lattice route") {
    for (const auto& m : test_moment_set(8)) {
        CHECK(classical_from_moments(m) == lattice_cumulants_from_moments(m, LatticeKind::All));
        CHECK(free_from_moments(m) == lattice_cumulants_from_moments(m, LatticeKind::NonCrossing));
        CHECK(boolean_from_moments(m) == lattice_cumulants_from_moments(m, LatticeKind::Interval));
        CHECK(lattice_moments_from_cumulants(classical_from_moments(m), LatticeKind::All) == m);
        CHECK(lattice_moments_from_cumulants(free_from_moments(m), LatticeKind::NonCrossing) == m);
        CHECK(lattice_moments_from_cumulants(boolean_from_moments(m), LatticeKind::Interval) == m);
    }
}

TEST_CASE("free from classical via connected partitions") {
    auto g = gaussian_classical(8);
    CHECK(free_from_classical(g, 6) == 4);
    CHECK(free_from_classical(g, 8) == 27);
    RationalSeq only1({0, 3, 0, 0, 0}, SeqRole::Classical);
    for (int n = 2; n <= 4; ++n) CHECK(free_from_classical(only1, n) == 0);
    for (const auto& m : test_moment_set(9)) {
        auto c = classical_from_moments(m);
        auto f = free_from_moments(m);
        for (int n = 1; n <= 9; ++n) CHECK(free_from_classical(c, n) == f[n]);
    }
}

TEST_CASE("boolean from free via irreducible noncrossing partitions") {
    CHECK(boolean_from_free(semicircle_free(4), 4) == 1);
    auto gf = free_from_moments(gaussian_moments(6));
    CHECK(boolean_from_free(gf, 4) == 2);
    RationalSeq f({0, Rational(7, 3), 1}, SeqRole::Free);
    CHECK(boolean_from_free(f, 1) == Rational(7, 3));
    for (const auto& m : test_moment_set(10)) {
        auto fc = free_from_moments(m);
        auto bc = boolean_from_moments(m);
        for (int n = 1; n <= 10; ++n) CHECK(boolean_from_free(fc, n) == bc[n]);
    }
}

TEST_CASE("gaussian free cumulants and shift consistency") {
    auto g = gaussian_free_cumulants(12);
    CHECK(g.free[10] == 248);
    CHECK(g.free[12] == 2830);
    CHECK(g.shifted[0] == 1);
    CHECK(g.shifted[2] == 1);
    CHECK(g.shifted[4] == 4);
    CHECK(g.shifted[6] == 27);
    for (int n = 1; n <= 12; n += 2) CHECK(g.free[n] == 0);
    for (int n = 0; n + 2 <= 12; n += 2) CHECK(g.shifted[n] == Rational(count_connected_pairings(n + 2)));
    auto g14 = gaussian_free_cumulants(14);
    for (int n = 2; n <= 12; n += 2) CHECK(g14.shifted[n] == Rational(nc_innerpoint_sum(n)));
    auto big = gaussian_free_cumulants(60);
    CHECK(big.free == free_from_moments(gaussian_moments(60)));
}

TEST_CASE("inner point sums") {
    CHECK(nc_innerpoint_sum(2) == 1);
    CHECK(nc_innerpoint_sum(6) == 27);
    CHECK(nc_innerpoint_sum(8) == 248);
    auto r = shifted_by_recursion2(12);
    CHECK(nc_innerpoint_sum(24) == r[12]);
}

TEST_CASE("weighted pairing sums") {
    for (Rational s : {Rational(1, 2), Rational(2), Rational(3)})
        CHECK(weighted_pairing_moment(4, {WeightKind::CcPower, s}) == 2 * s * s + s);
    CHECK(weighted_pairing_moment(4, {WeightKind::CrPower, 1}) == 3);
    CHECK(weighted_pairing_moment(2, {WeightKind::CcPower, Rational(5, 7)}) == Rational(5, 7));
    for (int n = 2; n <= 12; n += 2) {
        CHECK(weighted_pairing_moment(n, {WeightKind::CrPower, 1}) == Rational(double_factorial(n - 1)));
        CHECK(weighted_pairing_moment(n, {WeightKind::CrPower, 0}) == Rational(catalan(n / 2)));
    }
}

TEST_CASE("GBM identity") {
    auto fg = free_from_moments(gaussian_moments(12));
    for (Rational s : {Rational(1, 3), Rational(1, 2), Rational(2), Rational(5)}) {
        std::vector<Rational> scaled = fg.values;
        for (auto& x : scaled) x *= s;
        auto ms = moments_from_free({scaled, SeqRole::Free});
        for (int n = 2; n <= 12; n += 2) CHECK(weighted_pairing_moment(n, {WeightKind::CcPower, s}) == ms[n]);
    }
}

TEST_CASE("BDJ identity with variance dilation") {
    auto fg = free_from_moments(gaussian_moments(10));
    auto fs = semicircle_free(10);
    for (Rational b : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
        auto mix = moments_from_free(free_convolve(dilate_free_by_variance(fg, b), dilate_free_by_variance(fs, 1 - b)));
        for (int n = 2; n <= 10; n += 2) CHECK(weighted_pairing_moment(n, {WeightKind::Bdj, b}) == mix[n]);
    }
    // the b^n reading agrees only at the endpoints
    Rational b(1, 2);
    auto wrong = moments_from_free(free_convolve(dilate_free(fg, b), dilate_free(fs, 1 - b)));
    CHECK(weighted_pairing_moment(4, {WeightKind::Bdj, b}) != wrong[4]);
}

TEST_CASE("dilation and convolution") {
    auto fg = free_from_moments(gaussian_moments(8));
    CHECK(dilate_free(fg, 1) == fg);
    auto two = free_convolve(semicircle_free(6), semicircle_free(6));
    CHECK(two[2] == 2);
    for (int n = 0; n <= 6; ++n)
        if (n != 2) CHECK(two[n] == 0);
    std::vector<Rational> s_fc = fg.values;
    Rational s(3, 5);
    for (auto& x : s_fc) x *= s;
    auto m = moments_from_free({s_fc, SeqRole::Free});
    CHECK(m[4] == s + 2 * s * s);
    CHECK_THROWS_AS(free_convolve(semicircle_free(4), semicircle_free(6)), DomainError);
    CHECK_THROWS_AS(free_convolve(semicircle_free(4), gaussian_classical(4)), DomainError);
    auto bb = boolean_convolve(boolean_from_moments(gaussian_moments(4)), boolean_from_moments(gaussian_moments(4)));
    CHECK(bb[4] == 4);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(RationalSeq({2, 1}, SeqRole::Moment), DomainError);
    CHECK_THROWS_AS(free_from_moments(semicircle_free(4)), DomainError);
    CHECK_THROWS_AS(free_from_classical(gaussian_classical(14), 14), BoundError);
    CHECK_THROWS_AS(lattice_cumulants_from_moments(gaussian_moments(11), LatticeKind::All), BoundError);
}

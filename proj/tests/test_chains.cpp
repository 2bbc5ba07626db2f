#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freeid/chains.hpp"
#include "freeid/cumulants.hpp"
#include "freeid/errors.hpp"

using namespace freeid;

TEST_CASE("linear algebra") {
    RationalMatrix a{{2, 1}, {1, 3}};
    CHECK(determinant(a) == 5);
    auto x = solve_exact(a, {3, 5});
    CHECK(x[0] == Rational(4, 5));
    CHECK(x[1] == Rational(7, 5));
    CHECK(determinant({{Rational(1, 2), 1}, {1, 2}}) == 0);
    CHECK_THROWS_AS(solve_exact({{1, 2}, {2, 4}}, {1, 1}), StructureError);
    // Hilbert matrix 4x4 determinant
    RationalMatrix h(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h[i][j] = Rational(1, i + j + 1);
    CHECK(determinant(h) == Rational(1, 6048000));
}

TEST_CASE("move to root") {
    auto lc = BinaryTree::left_chain(2);
    CHECK(move_to_root(lc, "L") == BinaryTree::right_chain(2));
    CHECK(move_to_root(lc, "") == lc);
    CHECK(move_to_root(BinaryTree::right_chain(2), "R") == lc);
    CHECK_THROWS_AS(move_to_root(lc, "R"), DomainError);
}

TEST_CASE("mtr matrices") {
    auto p1 = mtr_transition_matrix(1);
    CHECK(p1.rows == RationalMatrix{{1}});
    auto p2 = mtr_transition_matrix(2);
    CHECK(p2.rows == RationalMatrix{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}});
    for (int n = 1; n <= 5; ++n) CHECK_NOTHROW(mtr_transition_matrix(n).validate());
}

TEST_CASE("nt matrices") {
    CHECK(nt_transition_matrix(1).rows == RationalMatrix{{1}});
    CHECK(nt_transition_matrix(3).size() == 5);
    CHECK(nt_transition_matrix(4).size() == 14);
    for (int n = 1; n <= 5; ++n) CHECK_NOTHROW(nt_transition_matrix(n).validate());
}

TEST_CASE("stationary distributions are reciprocal factorials") {
    for (int n = 1; n <= 5; ++n) {
        auto P = mtr_transition_matrix(n);
        auto pi = stationary(P);
        CHECK(apply_left(pi.weights, P) == pi.weights);
        for (std::size_t i = 0; i < pi.states.size(); ++i)
            CHECK(pi.weights[i] == 1 / Rational(tree_factorial(BinaryTree::parse(pi.states[i]))));
        auto Q = nt_transition_matrix(n);
        auto rho = stationary(Q);
        CHECK(apply_left(rho.weights, Q) == rho.weights);
        for (std::size_t i = 0; i < rho.states.size(); ++i)
            CHECK(rho.weights[i] == 1 / Rational(dyck_factorial(rho.states[i])));
        // transport through alpha
        for (std::size_t i = 0; i < pi.states.size(); ++i) {
            auto w = tree_to_dyck(BinaryTree::parse(pi.states[i]));
            auto it = std::find(rho.states.begin(), rho.states.end(), w);
            REQUIRE(it != rho.states.end());
            CHECK(rho.weights[it - rho.states.begin()] == pi.weights[i]);
        }
    }
    auto pi3 = stationary(mtr_transition_matrix(3));
    int thirds = 0, sixths = 0;
    for (auto& w : pi3.weights) {
        thirds += w == Rational(1, 3);
        sixths += w == Rational(1, 6);
    }
    CHECK(thirds == 1);
    CHECK(sixths == 4);
}

TEST_CASE("normalization of reciprocal tree factorials") {
    for (int n = 0; n <= 8; ++n) {
        Rational s = 0;
        for (const auto& t : enumerate_trees(n)) s += 1 / Rational(tree_factorial(t));
        CHECK(s == 1);
    }
}

TEST_CASE("return time sums") {
    CHECK(return_time_sum(2, ChainModel::NaimiTrehel).sum == 4);
    CHECK(return_time_sum(3, ChainModel::MoveToRoot).sum == 27);
    CHECK(return_time_sum(4, ChainModel::NaimiTrehel).sum == 248);
    auto g = gaussian_free_cumulants(14);
    for (int n = 1; n <= 6; ++n) {
        auto r = return_time_sum(n, ChainModel::NaimiTrehel);
        CHECK(Rational(r.sum) == g.shifted[2 * n]);
        CHECK(r.mean_return_time * Rational(catalan(n)) == Rational(r.sum));
    }
    CHECK(return_time_sum(5, ChainModel::MoveToRoot).sum == return_time_sum(5, ChainModel::NaimiTrehel).sum);
}

TEST_CASE("reducible chains are rejected") {
    StochasticMatrix P{{"a", "b"}, {{1, 0}, {0, 1}}};
    CHECK(communicating_classes(P).size() == 2);
    CHECK_THROWS_AS(stationary(P), StructureError);
}

TEST_CASE("simulation") {
    auto P = nt_transition_matrix(2);
    auto f = simulate(P, 100000, 42);
    CHECK(total_variation(f, stationary(P).weights) < 0.02);
    CHECK(simulate(P, 100000, 42) == f);
    auto Q = mtr_transition_matrix(3);
    CHECK(total_variation(simulate(Q, 100000, 7), stationary(Q).weights) < 0.02);
    auto z = simulate(Q, 0, 1);
    CHECK(z[0] == 1.0);
}

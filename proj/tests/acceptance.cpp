// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.
#include "freeid/analytic.hpp"
#include "freeid/chains.hpp"
#include "freeid/cumulants.hpp"
#include "freeid/errors.hpp"
#include "freeid/fid.hpp"
#include "freeid/hopf.hpp"
#include "freeid/jacobi.hpp"
#include "freeid/partitions.hpp"
#include "freeid/trees_dyck.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace freeid;

namespace {

// empty string means pass, otherwise the first failure
using Check = std::function<std::string()>;

std::string fail(std::ostringstream& os) { return os.str(); }

const std::vector<BigInt> kA000699 = {1, 1, 4, 27, 248, 2830};

std::string c1_sequences() {
    auto r1 = shifted_by_recursion1(5);
    for (int n = 1; n <= 6; ++n) {
        if (count_connected_pairings(2 * n) != kA000699[n - 1]) return "pairings at 2n=" + std::to_string(2 * n);
        if (r1[n - 1] != kA000699[n - 1]) return "recursion at n=" + std::to_string(n);
        if (s_via_trees(n - 1) != kA000699[n - 1]) return "trees at n=" + std::to_string(n);
    }
    return "";
}

std::vector<RationalSeq> moment_test_set(int N) {
    std::vector<RationalSeq> out{gaussian_moments(N), semicircle_moments(N)};
    // Poisson(1) moments are Bell numbers, via the Bell triangle
    std::vector<Rational> bell(N + 1);
    std::vector<BigInt> row{1};
    bell[0] = 1;
    for (int n = 1; n <= N; ++n) {
        std::vector<BigInt> next{row.back()};
        for (auto& x : row) next.push_back(next.back() + x);
        row = next;
        bell[n] = Rational(row.front());
    }
    out.emplace_back(bell, SeqRole::Moment);
    std::vector<Rational> uni(N + 1), odd(N + 1);
    for (int n = 0; n <= N; ++n) uni[n] = Rational(1, n + 1);
    out.emplace_back(uni, SeqRole::Moment);
    odd[0] = 1;
    for (int n = 1; n <= N; ++n) odd[n] = Rational(n * n - 3, 2 * n + 1);
    out.emplace_back(odd, SeqRole::Moment);
    return out;
}

std::string c2_cumulants() {
    int i = 0;
    for (const auto& m : moment_test_set(10)) {
        if (classical_from_moments(m) != lattice_cumulants_from_moments(m, LatticeKind::All)) return "classical, sequence " + std::to_string(i);
        if (free_from_moments(m) != lattice_cumulants_from_moments(m, LatticeKind::NonCrossing)) return "free, sequence " + std::to_string(i);
        if (boolean_from_moments(m) != lattice_cumulants_from_moments(m, LatticeKind::Interval)) return "boolean, sequence " + std::to_string(i);
        ++i;
    }
    return "";
}

std::string c3_weighted() {
    auto fg = free_from_moments(gaussian_moments(10));
    for (Rational s : {Rational(1, 3), Rational(2), Rational(7, 5)}) {
        auto scaled = fg.values;
        for (auto& x : scaled) x *= s;
        auto ms = moments_from_free({scaled, SeqRole::Free});
        for (int n = 2; n <= 10; n += 2)
            if (weighted_pairing_moment(n, {WeightKind::CcPower, s}) != ms[n]) return "GBM at q=" + to_string(s) + ", n=" + std::to_string(n);
    }
    auto fs = semicircle_free(10);
    for (Rational b : {Rational(1, 4), Rational(1, 2), Rational(2, 3)}) {
        auto mix = moments_from_free(free_convolve(dilate_free_by_variance(fg, b), dilate_free_by_variance(fs, 1 - b)));
        for (int n = 2; n <= 10; n += 2)
            if (weighted_pairing_moment(n, {WeightKind::Bdj, b}) != mix[n]) return "BDJ at b=" + to_string(b) + ", n=" + std::to_string(n);
    }
    return "";
}

std::string c4_chains() {
    for (int n = 1; n <= 5; ++n) {
        auto pi = stationary(mtr_transition_matrix(n));
        for (std::size_t i = 0; i < pi.states.size(); ++i)
            if (pi.weights[i] != 1 / Rational(tree_factorial(BinaryTree::parse(pi.states[i])))) return "MTR weight at n=" + std::to_string(n);
        auto rho = stationary(nt_transition_matrix(n));
        for (std::size_t i = 0; i < rho.states.size(); ++i)
            if (rho.weights[i] != 1 / Rational(dyck_factorial(rho.states[i]))) return "NT weight at n=" + std::to_string(n);
    }
    for (int n = 0; n <= 8; ++n) {
        Rational s = 0;
        for (const auto& t : enumerate_trees(n)) s += 1 / Rational(tree_factorial(t));
        if (s != 1) return "sum of 1/t! at n=" + std::to_string(n);
    }
    for (int n = 1; n <= 5; ++n)
        for (auto model : {ChainModel::MoveToRoot, ChainModel::NaimiTrehel})
            if (n <= 6 && return_time_sum(n, model).sum != kA000699[n]) return "return times at n=" + std::to_string(n);
    return "";
}

OrderedTree tree(const std::string& s) { return s == "[]" ? OrderedTree() : OrderedTree::parse_json(s); }

TensorCombination tensor(std::initializer_list<std::tuple<const char*, const char*, int>> terms) {
    TensorCombination out;
    for (auto [a, b, c] : terms) out[{tree(a), tree(b)}] += c;
    return out;
}

std::string c5_hopf() {
    for (auto [name, law] : {std::pair{"coassociativity", coassociativity_check(4)}, std::pair{"counit", counit_check(4)},
                             std::pair{"antipode", antipode_check(4)}, std::pair{"associativity", associativity_check(4)}})
        if (!law.ok) return std::string(name) + ": " + law.counterexample;
    // closure: every product and coproduct term is an anti-increasing tree of the right size
    for (int n = 0; n <= 4; ++n)
        for (const auto& t : enumerate_ordered_trees(n))
            for (const auto& [p, c] : lr_coproduct_labeled(t.tree()))
                if (!p.first.is_anti_increasing() || !p.second.is_anti_increasing() || p.first.size() + p.second.size() != n)
                    return "coproduct closure at " + t.to_json();
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b)
            for (const auto& s : enumerate_ordered_trees(a))
                for (const auto& t : enumerate_ordered_trees(b))
                    for (const auto& [x, c] : lr_product(s, t))
                        if (x.size() != a + b) return "product closure";
    if (lr_coproduct(tree("[3,[1],[2]]")) != tensor({{"[]", "[3,[1],[2]]", 1},
                                                     {"[1]", "[2,[1],[]]", 1},
                                                     {"[1]", "[2,[],[1]]", 1},
                                                     {"[1,[],[2]]", "[1]", 1},
                                                     {"[2,[1],[]]", "[1]", 1},
                                                     {"[3,[1],[2]]", "[]", 1}}))
        return "printed coproduct example";
    if (bf_coproduct(tree("[1,[],[2]]")) != tensor({{"[1,[],[2]]", "[]", 1}, {"[]", "[1,[],[2]]", 1}})) return "charge example 1";
    if (bf_coproduct(tree("[1,[2],[]]")) != tensor({{"[1,[2],[]]", "[]", 1}, {"[1]", "[1]", 2}, {"[]", "[1,[2],[]]", 1}}))
        return "charge example 2 (coefficient 2)";
    if (bf_coproduct(tree("[1,[],[2,[3],[]]]")) !=
        tensor({{"[1,[],[2,[3],[]]]", "[]", 1}, {"[1]", "[1,[],[2]]", 1}, {"[]", "[1,[],[2,[3],[]]]", 1}}))
        return "charge example 3";
    for (int n = 0; n <= 3; ++n)
        if (hilbert_dimension(n) != std::vector<BigInt>{1, 1, 4, 27}[n]) return "Hilbert dimension at n=" + std::to_string(n);
    return "";
}

std::string c6_dyck() {
    if (mu_operator("UUDUDD") != DyckCombination{{"UUDUDD", 1}, {"UUDDUD", 2}, {"UDUDUD", 1}}) return "worked example";
    for (int n = 0; n <= 5; ++n)
        for (const auto& w : enumerate_dyck_words(n)) {
            Rational sum = 0;
            for (const auto& [v, c] : mu_operator(w)) sum += c;
            if (sum != n + 1) return "coefficient sum at " + w;
        }
    return "";
}

std::string c7_headline() {
    std::ostringstream os;
    for (auto [c, want] : {std::pair{Rational(9, 10), 97}, std::pair{Rational(1), 83}}) {
        auto r = fid_test(c, 200);
        if (r.verdict != Verdict::Fail || r.first_negative_index != want) {
            os << "c=" << to_string(c) << ": got " << to_string(r.verdict) << " at "
               << (r.first_negative_index ? std::to_string(*r.first_negative_index) : "none");
            return fail(os);
        }
        // second route: fraction-free determinants of the integer sequence
        auto s = integer_shifted_sequence(c, 200);
        if (sgn(hankel_determinant_int(s, want - 1, want)) <= 0 || sgn(hankel_determinant_int(s, want, want)) >= 0) {
            os << "c=" << to_string(c) << ": direct determinants disagree at " << want;
            return fail(os);
        }
    }
    return "";
}

std::string c8_positivity() {
    for (Rational c : {Rational(-1), Rational(-3, 4), Rational(-1, 2), Rational(-1, 4), Rational(0)})
        if (fid_test(c, 120).verdict != Verdict::Pass) return "c=" + to_string(c);
    return "";
}

std::string c9_analytic() {
    double worst_r = 0, worst_d = 0, worst_x = 0;
    for (Rational c : {Rational(-9, 10), Rational(-1, 2), Rational(0), Rational(1, 2)}) {
        for (double x : {-2.0, -1.0, 0.0, 1.0, 2.5})
            for (double y : {0.5, 1.0, 1.5, 2.0, 3.0}) {
                auto r = riccati_residual(c, {x, y});
                auto d = decomposition_residual(c, {x, y});
                worst_r = std::max({worst_r, r.g_form, r.f_form});
                worst_d = std::max({worst_d, d.shift, d.dilation});
            }
        const Complex pts[] = {{0, 2}, {1, 2}, {-1, 1}, {2, 0.5}, {0.5, 3}, {-3, 1}, {4, 2}, {0, 5}, {-2, 2.5}, {1.5, 1.5}};
        for (auto z : pts) worst_x = std::max(worst_x, std::abs(G_eval(c, z).value - cf_eval(c, z).value));
    }
    if (worst_r < 1e-6 && worst_d < 1e-8 && worst_x < 1e-10) return "";
    std::ostringstream os;
    os << "max riccati " << worst_r << ", decomposition " << worst_d << ", cross " << worst_x;
    return fail(os);
}

std::string c10_trajectories() {
    for (Rational c : {Rational(-9, 10), Rational(-1, 2), Rational(-1, 10)}) {
        auto t = f_trajectory(c);
        if (!t.ok()) return "c=" + to_string(c) + ": " + t.failures.front();
        if (!(t.q0 < 0) || !(t.s_crit < t.bound)) return "c=" + to_string(c) + ": q0 or s_crit out of range";
    }
    return "";
}

std::string c11_density() {
    for (double u : {0.0, 1.0, -1.0, 2.0, -2.0}) {
        double want = std::exp(-u * u / 2) / std::sqrt(2 * M_PI);
        if (std::abs(density_eval(0, u) - want) >= 1e-4) return "u=" + std::to_string(u);
    }
    return "";
}

std::string c12_formal() {
    if (!formal_phi_ode_check(12).ok) return "unperturbed sequence rejected";
    auto s = gaussian_free_cumulants(14).shifted.values;
    s[6] += 1;
    if (formal_phi_ode_check(s, 12).ok) return "perturbed sequence accepted";
    return "";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget;  // seconds
        Check run;
    };
    const std::vector<Criterion> all = {
        {1, "sequence triple agreement", 10, c1_sequences},
        {2, "cumulant oracle equivalence", 60, c2_cumulants},
        {3, "GBM and BDJ identities", 60, c3_weighted},
        {4, "Markov chain stationary laws and return times", 30, c4_chains},
        {5, "Hopf laws and printed coproducts", 60, c5_hopf},
        {6, "Dyck operator", 10, c6_dyck},
        {7, "FID headline indices 97 and 83", 1800, c7_headline},
        {8, "FID positivity to order 120", 1800, c8_positivity},
        {9, "analytic residuals", 30, c9_analytic},
        {10, "f trajectory lemma numerics", 30, c10_trajectories},
        {11, "Gaussian density", 10, c11_density},
        {12, "formal ODE", 5, c12_formal},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (detail.empty() && secs > c.budget) detail = "over time budget";
        const bool ok = detail.empty();
        failed += !ok;
        std::printf("%s  %2d  %-48s %8.2fs%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs, ok ? "" : "  ", detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed ? 1 : 0;
}

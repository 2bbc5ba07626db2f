#include "freeid/chains.hpp"

#include "freeid/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

namespace freeid {

std::string to_string(ChainModel m) { return m == ChainModel::MoveToRoot ? "mtr" : "nt"; }

ChainModel parse_chain_model(std::string_view name) {
    if (name == "mtr" || name == "MTR") return ChainModel::MoveToRoot;
    if (name == "nt" || name == "NT") return ChainModel::NaimiTrehel;
    throw ParseError("unknown chain model '" + std::string(name) + "'");
}

void StochasticMatrix::validate() const {
    if (rows.size() != states.size()) throw DomainError("matrix and state list disagree");
    for (const auto& row : rows) {
        if (row.size() != states.size()) throw DomainError("matrix is not square");
        Rational s = 0;
        for (const auto& x : row) {
            if (x < 0) throw DomainError("negative transition probability");
            s += x;
        }
        if (s != 1) throw DomainError("row does not sum to 1");
    }
}

BinaryTree move_to_root(const BinaryTree& t, std::string_view path) {
    if (path.empty()) return t;
    if (t.empty()) throw DomainError("path leaves the tree");
    if (path.front() == 'L') {
        BinaryTree c = move_to_root(t.left(), path.substr(1));
        if (c.empty()) throw DomainError("path leaves the tree");
        // rotate right: c becomes the root, t keeps c's right subtree on its left
        return BinaryTree::node(c.left(), BinaryTree::node(c.right(), t.right()));
    }
    if (path.front() == 'R') {
        BinaryTree c = move_to_root(t.right(), path.substr(1));
        if (c.empty()) throw DomainError("path leaves the tree");
        return BinaryTree::node(BinaryTree::node(t.left(), c.left()), c.right());
    }
    throw ParseError("vertex path must use L and R");
}

namespace {

void vertex_paths(const BinaryTree& t, std::string& prefix, std::vector<std::string>& out) {
    if (t.empty()) return;
    out.push_back(prefix);
    prefix.push_back('L');
    vertex_paths(t.left(), prefix, out);
    prefix.back() = 'R';
    vertex_paths(t.right(), prefix, out);
    prefix.pop_back();
}

void check_chain_bound(int n) {
    if (n < 1) throw DomainError("chain size must be positive");
    if (n > kMaxChainN) throw BoundError("chain on size " + std::to_string(n), kMaxChainN);
}

}  // namespace

StochasticMatrix mtr_transition_matrix(int n) {
    check_chain_bound(n);
    auto trees = enumerate_trees(n);
    StochasticMatrix P;
    std::map<std::string, std::size_t> index;
    for (const auto& t : trees) {
        index[t.to_string()] = P.states.size();
        P.states.push_back(t.to_string());
    }
    P.rows.assign(trees.size(), std::vector<Rational>(trees.size(), Rational(0)));
    const Rational w(1, n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
        std::vector<std::string> paths;
        std::string prefix;
        vertex_paths(trees[i], prefix, paths);
        for (const auto& p : paths) P.rows[i][index.at(move_to_root(trees[i], p).to_string())] += w;
    }
    return P;
}

StochasticMatrix nt_transition_matrix(int n) {
    check_chain_bound(n);
    auto a = nt_adjacency(n);
    StochasticMatrix P{a.states, a.rows};
    for (auto& row : P.rows)
        for (auto& x : row) x /= n + 1;
    return P;
}

StochasticMatrix transition_matrix(ChainModel model, int n) {
    return model == ChainModel::MoveToRoot ? mtr_transition_matrix(n) : nt_transition_matrix(n);
}

std::vector<std::vector<std::size_t>> communicating_classes(const StochasticMatrix& P) {
    // Tarjan
    const std::size_t n = P.size();
    std::vector<int> idx(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> classes;
    int counter = 0;
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        idx[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w = 0; w < n; ++w) {
            if (sgn(P.rows[v][w]) == 0) continue;
            if (idx[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], idx[w]);
            }
        }
        if (low[v] == idx[v]) {
            std::vector<std::size_t> cls;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                cls.push_back(w);
            } while (w != v);
            std::sort(cls.begin(), cls.end());
            classes.push_back(std::move(cls));
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        if (idx[v] < 0) visit(v);
    std::sort(classes.begin(), classes.end());
    return classes;
}

Distribution stationary(const StochasticMatrix& P) {
    P.validate();
    const std::size_t n = P.size();
    auto classes = communicating_classes(P);
    if (classes.size() != 1) {
        std::string msg = "reducible chain with communicating classes";
        for (const auto& c : classes) {
            msg += " {";
            for (std::size_t i = 0; i < c.size(); ++i) msg += (i ? "," : "") + P.states[c[i]];
            msg += "}";
        }
        throw StructureError(msg);
    }
    // (P^T - I) pi = 0 with the last equation replaced by sum pi = 1
    RationalMatrix A(n, std::vector<Rational>(n));
    std::vector<Rational> b(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A[i][j] = P.rows[j][i] - (i == j ? 1 : 0);
    for (std::size_t j = 0; j < n; ++j) A[n - 1][j] = 1;
    b[n - 1] = 1;
    return {P.states, solve_exact(A, b)};
}

std::vector<Rational> apply_left(const std::vector<Rational>& pi, const StochasticMatrix& P) {
    if (pi.size() != P.size()) throw DomainError("distribution has the wrong length");
    std::vector<Rational> out(P.size(), Rational(0));
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = 0; j < P.size(); ++j)
            if (sgn(P.rows[i][j]) != 0) out[j] += pi[i] * P.rows[i][j];
    return out;
}

ReturnTimeSum return_time_sum(int n, ChainModel model) {
    auto pi = stationary(transition_matrix(model, n));
    Rational s = 0;
    for (const auto& w : pi.weights) s += 1 / w;
    if (s.get_den() != 1) throw StructureError("return time sum is not an integer");
    BigInt count(static_cast<unsigned long>(pi.states.size()));
    return {s.get_num(), s / Rational(count), count};
}

std::vector<double> simulate(const StochasticMatrix& P, long steps, std::uint64_t seed, int burn_in) {
    P.validate();
    const std::size_t n = P.size();
    std::vector<double> freq(n, 0.0);
    if (steps < 0) throw DomainError("negative step count");
    if (steps == 0) {
        freq[0] = 1.0;
        return freq;
    }
    // splitmix64 whitening of the user seed
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    std::mt19937_64 rng(z);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    std::vector<std::vector<double>> cdf(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (const auto& x : P.rows[i]) cdf[i].push_back(acc += to_double(x));
    }
    std::size_t state = 0;
    auto step = [&] {
        double r = u(rng) * cdf[state].back();
        state = std::upper_bound(cdf[state].begin(), cdf[state].end(), r) - cdf[state].begin();
        if (state >= n) state = n - 1;
    };
    for (int i = 0; i < burn_in; ++i) step();
    for (long i = 0; i < steps; ++i) {
        step();
        freq[state] += 1.0;
    }
    for (auto& f : freq) f /= static_cast<double>(steps);
    return freq;
}

double total_variation(const std::vector<double>& p, const std::vector<Rational>& q) {
    if (p.size() != q.size()) throw DomainError("distributions of different length");
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - to_double(q[i]));
    return s / 2;
}

}  // namespace freeid

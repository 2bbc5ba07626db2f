#pragma once

#include "freeid/linalg.hpp"
#include "freeid/rational.hpp"
#include "freeid/trees_dyck.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace freeid {

enum class ChainModel { MoveToRoot, NaimiTrehel };
std::string to_string(ChainModel m);
ChainModel parse_chain_model(std::string_view name);

// States are tree strings (MTR) or Dyck words (NT).
struct StochasticMatrix {
    std::vector<std::string> states;
    RationalMatrix rows;

    std::size_t size() const noexcept { return states.size(); }
    // Throws DomainError unless square, nonnegative, rows summing to 1.
    void validate() const;
};

struct Distribution {
    std::vector<std::string> states;
    std::vector<Rational> weights;
};

inline constexpr int kMaxChainN = 7;

// Moves vertex `path` (root-relative L/R steps) to the root by rotations.
BinaryTree move_to_root(const BinaryTree& t, std::string_view path);

StochasticMatrix mtr_transition_matrix(int n);
StochasticMatrix nt_transition_matrix(int n);
StochasticMatrix transition_matrix(ChainModel model, int n);

// Communicating classes (strongly connected components), each sorted.
std::vector<std::vector<std::size_t>> communicating_classes(const StochasticMatrix& P);

// Exact solution of pi P = pi, sum pi = 1. Reducible chains raise a
// StructureError naming the classes.
Distribution stationary(const StochasticMatrix& P);

// pi P, exactly.
std::vector<Rational> apply_left(const std::vector<Rational>& pi, const StochasticMatrix& P);

struct ReturnTimeSum {
    BigInt sum;                 // sum over states of 1/pi
    Rational mean_return_time;  // sum / number of states
    BigInt state_count;
};
ReturnTimeSum return_time_sum(int n, ChainModel model);

inline constexpr int kDefaultBurnIn = 1000;

// Empirical occupation frequencies over `steps` transitions after a burn-in,
// started from state 0. steps == 0 yields the point mass at the start state.
std::vector<double> simulate(const StochasticMatrix& P, long steps, std::uint64_t seed, int burn_in = kDefaultBurnIn);

double total_variation(const std::vector<double>& p, const std::vector<Rational>& q);

}  // namespace freeid

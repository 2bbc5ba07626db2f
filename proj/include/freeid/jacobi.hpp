#pragma once

#include "freeid/cumulants.hpp"
#include "freeid/rational.hpp"

#include <optional>
#include <vector>

namespace freeid {

// G(z) = 1/(z - a0 - b1/(z - a1 - b2/(...))). alpha[i] = a_i, beta[i] = b_{i+1}.
struct JacobiParams {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;

    int depth() const noexcept { return static_cast<int>(beta.size()); }
};

// a = 0, b_n = c + n. c = -1 gives the point mass (all b = 0).
JacobiParams mu_c_jacobi(const Rational& c, int N);

// Moments m_0..m_N by weighted Motzkin paths. Needs ceil(N/2) levels of data.
RationalSeq moments_from_jacobi(const JacobiParams& J, int N);
// Same with a = 0 and integer b.
std::vector<BigInt> moments_from_integer_jacobi(const std::vector<BigInt>& beta, int N);

struct JacobiInversion {
    JacobiParams params;                      // levels computed before any breakdown
    std::optional<int> first_nonpositive;     // first k with b_k <= 0 (1-based, like b_k)
    std::optional<int> zero_pivot;            // level at which the recursion had to stop
    bool residual_vanishes = false;           // at a zero pivot: whole sigma row was zero
};

// Chebyshev's algorithm in exact arithmetic; recovers min(depth, floor(N/2)) levels.
JacobiInversion jacobi_from_moments(const RationalSeq& m, int depth = -1);

inline constexpr int kMaxHankelDirect = 40;

// Sign of det[seq_{i+j}]_{0<=i,j<=k} by fraction-free elimination.
int hankel_sign(const std::vector<Rational>& seq, int k);
// max_k lifts the budget for one-off confirmations (cost grows like k^3 big products).
BigInt hankel_determinant_int(const std::vector<BigInt>& seq, int k, int max_k = kMaxHankelDirect);

}  // namespace freeid

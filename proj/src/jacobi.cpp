#include "freeid/jacobi.hpp"

#include "freeid/errors.hpp"
#include "freeid/linalg.hpp"

#include <algorithm>

namespace freeid {

JacobiParams mu_c_jacobi(const Rational& c, int N) {
    if (c < -1) throw DomainError("c must be at least -1, got " + to_string(c));
    if (N < 1) throw DomainError("depth must be positive");
    JacobiParams J;
    J.alpha.assign(N, Rational(0));
    J.beta.resize(N);
    for (int n = 1; n <= N; ++n) J.beta[n - 1] = c == -1 ? Rational(0) : c + n;
    return J;
}

RationalSeq moments_from_jacobi(const JacobiParams& J, int N) {
    if (N < 0) throw DomainError("negative order");
    if (J.alpha.size() < J.beta.size()) throw DomainError("alpha and beta lengths disagree");
    if (N > 2 * J.depth()) throw BoundError("moments from " + std::to_string(J.depth()) + " Jacobi levels", 2 * J.depth());
    // P[k] = weight of paths of the current length ending at height k
    std::vector<Rational> P(N / 2 + 2, Rational(0)), Q(P.size());
    P[0] = 1;
    std::vector<Rational> m(N + 1, Rational(0));
    m[0] = 1;
    for (int n = 1; n <= N; ++n) {
        const int top = std::min(n, N - n);
        for (int k = 0; k <= top; ++k) {
            Rational x = k > 0 ? P[k - 1] : Rational(0);
            if (k < J.depth()) x += J.alpha[k] * P[k] + J.beta[k] * P[k + 1];
            Q[k] = std::move(x);
        }
        for (int k = top + 1; k < static_cast<int>(Q.size()); ++k) Q[k] = 0;
        std::swap(P, Q);
        m[n] = P[0];
    }
    return {m, SeqRole::Moment};
}

std::vector<BigInt> moments_from_integer_jacobi(const std::vector<BigInt>& beta, int N) {
    if (N > 2 * static_cast<int>(beta.size())) throw BoundError("moments from Jacobi levels", 2 * static_cast<int>(beta.size()));
    std::vector<BigInt> P(N / 2 + 2, BigInt(0)), Q(P.size());
    P[0] = 1;
    std::vector<BigInt> m(N + 1, BigInt(0));
    m[0] = 1;
    for (int n = 1; n <= N; ++n) {
        const int top = std::min(n, N - n);
        // parity: only heights with k = n mod 2 are reachable
        for (int k = 0; k < static_cast<int>(Q.size()); ++k) Q[k] = 0;
        for (int k = (n & 1); k <= top; k += 2) {
            if (k < static_cast<int>(beta.size())) Q[k] = beta[k] * P[k + 1];
            if (k > 0) Q[k] += P[k - 1];
        }
        std::swap(P, Q);
        m[n] = P[0];
    }
    return m;
}

JacobiInversion jacobi_from_moments(const RationalSeq& m, int depth) {
    if (m.size() == 0) throw DomainError("empty moment sequence");
    const int N = m.order();
    int levels = N / 2;
    if (depth >= 0) levels = std::min(levels, depth);
    JacobiInversion out;
    // sigma_{k,l} for l = k..N-k; rows k-1 and k-2 kept
    if (sgn(m[0]) == 0) {
        out.zero_pivot = 0;
        out.residual_vanishes = std::all_of(m.values.begin(), m.values.end(), [](const Rational& x) { return sgn(x) == 0; });
        return out;
    }
    std::vector<Rational> prev2(N + 1, Rational(0)), prev(m.values.begin(), m.values.end()), cur(N + 1);
    Rational a_prev = N >= 1 ? m[1] / m[0] : Rational(0);
    Rational b_prev = 0;
    out.params.alpha.push_back(a_prev);
    for (int k = 1; k <= levels; ++k) {
        for (int l = k; l <= N - k; ++l) {
            Rational x = prev[l + 1] - a_prev * prev[l];
            if (k >= 2) x -= b_prev * prev2[l];
            cur[l] = std::move(x);
        }
        if (sgn(cur[k]) == 0) {
            out.zero_pivot = k;
            out.residual_vanishes = std::all_of(cur.begin() + k, cur.begin() + (N - k + 1), [](const Rational& x) { return sgn(x) == 0; });
            break;
        }
        Rational b = cur[k] / prev[k - 1];
        if (sgn(b) <= 0 && !out.first_nonpositive) out.first_nonpositive = k;
        out.params.beta.push_back(b);
        if (k + 1 <= N - k) {
            Rational a = cur[k + 1] / cur[k] - prev[k] / prev[k - 1];
            out.params.alpha.push_back(a);
            a_prev = a;
        } else {
            a_prev = 0;
        }
        b_prev = b;
        std::swap(prev2, prev);
        std::swap(prev, cur);
    }
    out.params.alpha.resize(out.params.beta.size(), Rational(0));
    return out;
}

BigInt hankel_determinant_int(const std::vector<BigInt>& seq, int k, int max_k) {
    if (k < 0) throw DomainError("negative Hankel index");
    if (k > max_k) throw BoundError("direct Hankel determinant", max_k);
    if (static_cast<int>(seq.size()) < 2 * k + 1) throw DomainError("sequence too short for Hankel index " + std::to_string(k));
    IntMatrix a(k + 1, std::vector<BigInt>(k + 1));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) a[i][j] = seq[i + j];
    return bareiss_determinant(std::move(a));
}

int hankel_sign(const std::vector<Rational>& seq, int k) {
    if (k < 0) throw DomainError("negative Hankel index");
    if (static_cast<int>(seq.size()) < 2 * k + 1) throw DomainError("sequence too short for Hankel index " + std::to_string(k));
    // a common positive denominator does not change the sign
    BigInt l = 1;
    for (int i = 0; i <= 2 * k; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), seq[i].get_den_mpz_t());
    std::vector<BigInt> ints(2 * k + 1);
    for (int i = 0; i <= 2 * k; ++i) ints[i] = seq[i].get_num() * (l / seq[i].get_den());
    return sgn(hankel_determinant_int(ints, k));
}

}  // namespace freeid

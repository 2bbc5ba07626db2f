#pragma once

#include "freeid/cumulants.hpp"
#include "freeid/jacobi.hpp"

#include <optional>
#include <string>
#include <vector>

namespace freeid {

inline constexpr int kMaxFidOrder = 400;

// Free cumulants fc_0..fc_N of mu_c (c >= -1), exact.
RationalSeq free_cumulants_of_mu_c(const Rational& c, int N);

enum class Verdict { Pass, Fail };
std::string to_string(Verdict v);

struct FidReport {
    Rational c;
    int order = 0;
    Verdict verdict = Verdict::Pass;
    // k such that det[s_{i+j}]_{0<=i,j<=k} is the first negative Hankel
    // determinant; equals the index of the first nonpositive b_k.
    std::optional<int> first_negative_index;
    std::vector<int> beta_signs;  // signs of b_1, b_2, ...
    std::string note;

    std::string to_json() const;
};

// Positive definiteness of s_n = fc_{n+2}, n = 0..N-2.
FidReport fid_test(const Rational& c, int N);

// The shifted sequence, dilated to integers: returns q^{(n+2)/2} s_n, where
// c = p/q. Hankel signs are unchanged by this positive rescaling.
std::vector<BigInt> integer_shifted_sequence(const Rational& c, int N);

}  // namespace freeid

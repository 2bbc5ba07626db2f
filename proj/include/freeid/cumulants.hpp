#pragma once

#include "freeid/partitions.hpp"
#include "freeid/rational.hpp"

#include <string>
#include <vector>

namespace freeid {

enum class SeqRole { Moment, Classical, Free, Boolean, Shifted };

std::string to_string(SeqRole role);
SeqRole parse_seq_role(std::string_view name);

// values[0..N]. Moment sequences have values[0] == 1; cumulant sequences keep
// a placeholder 0 at index 0 so that values[n] is always the order-n entry.
struct RationalSeq {
    std::vector<Rational> values;
    SeqRole role = SeqRole::Moment;

    RationalSeq() = default;
    RationalSeq(std::vector<Rational> v, SeqRole r);

    std::size_t size() const noexcept { return values.size(); }
    int order() const noexcept { return static_cast<int>(values.size()) - 1; }
    const Rational& operator[](std::size_t i) const { return values.at(i); }

    // JSON array of "p/q" strings.
    std::string to_json() const;
};

bool operator==(const RationalSeq& a, const RationalSeq& b);

// Common test sequences through order N.
RationalSeq gaussian_moments(int N);
RationalSeq semicircle_moments(int N);
RationalSeq gaussian_classical(int N);   // (0, 0, 1, 0, ...)
RationalSeq semicircle_free(int N);      // (0, 0, 1, 0, ...) as free cumulants

// Series routes, triangular recursions.
RationalSeq classical_from_moments(const RationalSeq& m);
RationalSeq moments_from_classical(const RationalSeq& c);
RationalSeq free_from_moments(const RationalSeq& m);
RationalSeq moments_from_free(const RationalSeq& f);
RationalSeq boolean_from_moments(const RationalSeq& m);
RationalSeq moments_from_boolean(const RationalSeq& b);

// Integer kernels of the free conversions, used by the exact FID pipeline.
std::vector<BigInt> free_from_moments_int(const std::vector<BigInt>& m);
std::vector<BigInt> moments_from_free_int(const std::vector<BigInt>& f);

// Lattice routes: k_n = sum_{sigma in L_n} m_sigma mu(sigma, 1_n) and the
// zeta direction m_n = sum_{sigma in L_n} k_sigma. ALL gives classical,
// NONCROSSING free, INTERVAL boolean cumulants. Orders up to kMaxMoebiusN.
RationalSeq lattice_cumulants_from_moments(const RationalSeq& m, LatticeKind kind);
RationalSeq lattice_moments_from_cumulants(const RationalSeq& k, LatticeKind kind);

// fc_n as a sum of classical cumulants over connected partitions of [n].
Rational free_from_classical(const RationalSeq& c, int n);
// bc_n as a sum of free cumulants over irreducible noncrossing partitions.
Rational boolean_from_free(const RationalSeq& f, int n);

struct GaussianFreeCumulants {
    RationalSeq free;     // fc_0..fc_N
    RationalSeq shifted;  // s_n = fc_{n+2}, n = 0..N-2
};

// Riordan's recursion; both shifted-sequence recursions are verified and a
// StructureError is raised if either fails.
GaussianFreeCumulants gaussian_free_cumulants(int N);

// s_{2n} by n * sum s_{2i} s_{2(n-i-1)} and by sum (2i+1) s_{2i} s_{2(n-i-1)}.
std::vector<BigInt> shifted_by_recursion1(int n_max);
std::vector<BigInt> shifted_by_recursion2(int n_max);

enum class WeightKind { CcPower, CrPower, Bdj };
std::string to_string(WeightKind kind);
WeightKind parse_weight_kind(std::string_view name);

struct WeightSpec {
    WeightKind kind;
    Rational parameter;
};

// coeffs[e] = number of pairings of [n] whose weight exponent is e.
std::vector<BigInt> weighted_pairing_polynomial(int n, WeightKind kind);
Rational weighted_pairing_moment(int n, const WeightSpec& w);

// sum over noncrossing pairings of [two_n] of prod (ip(V)+1).
BigInt nc_innerpoint_sum(int two_n);

RationalSeq dilate_free(const RationalSeq& f, const Rational& b);
// Dilation by a variance factor v (scale sqrt(v)) of a sequence whose odd
// entries vanish: entry 2k is multiplied by v^k, so the result stays exact.
RationalSeq dilate_free_by_variance(const RationalSeq& f, const Rational& v);
RationalSeq free_convolve(const RationalSeq& f1, const RationalSeq& f2);
RationalSeq boolean_convolve(const RationalSeq& b1, const RationalSeq& b2);

}  // namespace freeid

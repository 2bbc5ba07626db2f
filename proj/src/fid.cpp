#include "freeid/fid.hpp"

#include "freeid/errors.hpp"

#include <json.hpp>

namespace freeid {

namespace {

void check_c(const Rational& c) {
    if (c < -1) throw DomainError("c must be at least -1, got " + to_string(c));
}

// kappa'_n for the dilated measure with b'_n = p + n q.
std::vector<BigInt> dilated_free_cumulants(const Rational& c, int N) {
    check_c(c);
    if (N < 0) throw DomainError("negative order");
    if (N > kMaxFidOrder) throw BoundError("exact free cumulants of order " + std::to_string(N), kMaxFidOrder);
    const int levels = N / 2 + 1;
    std::vector<BigInt> beta(levels);
    for (int n = 1; n <= levels; ++n) beta[n - 1] = c == -1 ? BigInt(0) : BigInt(c.get_num() + n * c.get_den());
    return free_from_moments_int(moments_from_integer_jacobi(beta, N));
}

}  // namespace

RationalSeq free_cumulants_of_mu_c(const Rational& c, int N) {
    auto k = dilated_free_cumulants(c, N);
    const BigInt q = c.get_den();
    std::vector<Rational> out(N + 1, Rational(0));
    BigInt qpow = 1;
    for (int n = 2; n <= N; n += 2) {
        qpow *= q;
        out[n] = Rational(k[n], qpow);
        out[n].canonicalize();
    }
    for (int n = 1; n <= N; n += 2)
        if (k[n] != 0) throw StructureError("odd free cumulant of a symmetric measure is nonzero");
    return {out, SeqRole::Free};
}

std::vector<BigInt> integer_shifted_sequence(const Rational& c, int N) {
    auto k = dilated_free_cumulants(c, N);
    return std::vector<BigInt>(k.begin() + 2, k.end());
}

std::string to_string(Verdict v) { return v == Verdict::Pass ? "PASS" : "FAIL"; }

FidReport fid_test(const Rational& c, int N) {
    if (N < 4) throw DomainError("fid_test needs order at least 4");
    FidReport r;
    r.c = c;
    r.order = N;
    auto s = integer_shifted_sequence(c, N);
    std::vector<Rational> sr(s.begin(), s.end());
    auto inv = jacobi_from_moments(RationalSeq(sr, SeqRole::Shifted));
    for (const auto& b : inv.params.beta) r.beta_signs.push_back(sgn(b));
    if (inv.first_nonpositive) {
        r.verdict = Verdict::Fail;
        r.first_negative_index = *inv.first_nonpositive;
        r.note = "first negative Hankel determinant at index " + std::to_string(*inv.first_nonpositive);
    } else if (inv.zero_pivot) {
        if (inv.residual_vanishes) {
            r.verdict = Verdict::Pass;
            r.note = "finite support: recursion terminates at level " + std::to_string(*inv.zero_pivot);
        } else {
            r.verdict = Verdict::Fail;
            r.first_negative_index = *inv.zero_pivot;
            r.note = "zero Hankel determinant with nonvanishing remainder at index " + std::to_string(*inv.zero_pivot);
        }
    } else {
        r.verdict = Verdict::Pass;
        r.note = "all " + std::to_string(inv.params.depth()) + " pivots positive";
    }
    return r;
}

std::string FidReport::to_json() const {
    nlohmann::ordered_json j;
    j["c"] = to_string(c);
    j["order"] = order;
    j["verdict"] = to_string(verdict);
    j["first_negative_index"] = first_negative_index ? nlohmann::ordered_json(*first_negative_index) : nlohmann::ordered_json();
    j["beta_signs"] = beta_signs;
    j["note"] = note;
    return j.dump();
}

}  // namespace freeid

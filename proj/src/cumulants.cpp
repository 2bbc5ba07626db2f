#include "freeid/cumulants.hpp"

#include "freeid/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace freeid {

std::string to_string(SeqRole role) {
    switch (role) {
    case SeqRole::Moment: return "moment";
    case SeqRole::Classical: return "classical";
    case SeqRole::Free: return "free";
    case SeqRole::Boolean: return "boolean";
    case SeqRole::Shifted: return "shifted";
    }
    return "?";
}

SeqRole parse_seq_role(std::string_view name) {
    if (name == "moment" || name == "moments") return SeqRole::Moment;
    if (name == "classical") return SeqRole::Classical;
    if (name == "free") return SeqRole::Free;
    if (name == "boolean") return SeqRole::Boolean;
    if (name == "shifted") return SeqRole::Shifted;
    throw ParseError("unknown sequence role '" + std::string(name) + "'");
}

RationalSeq::RationalSeq(std::vector<Rational> v, SeqRole r) : values(std::move(v)), role(r) {
    if (values.empty()) throw DomainError("sequence must have at least one entry");
    for (auto& x : values) x.canonicalize();
    if (role == SeqRole::Moment && values[0] != 1) throw DomainError("moment sequence must start with m0 = 1");
}

std::string RationalSeq::to_json() const {
    nlohmann::json j = to_strings(values);
    return j.dump();
}

bool operator==(const RationalSeq& a, const RationalSeq& b) { return a.role == b.role && a.values == b.values; }

namespace {

void require_role(const RationalSeq& s, SeqRole role, const char* op) {
    if (s.role != role)
        throw DomainError(std::string(op) + " expects a " + to_string(role) + " sequence, got " + to_string(s.role));
}

std::vector<Rational> zeros(int N) { return std::vector<Rational>(N + 1, Rational(0)); }

// Shared kernel for M(z) = C(z M(z)). T[s][k] = [z^k] M(z)^s, filled along
// anti-diagonals s + k = n as soon as m_1..m_{n-1} are known.
template <class Num>
struct PowerTable {
    std::vector<std::vector<Num>> T;  // T[s] holds entries k = 0..N-s

    explicit PowerTable(int N) : T(N + 1) {
        for (int s = 0; s <= N; ++s) T[s].assign(N - s + 1, Num(0));
        T[0][0] = 1;
    }

    // fills T[s][n-s] for s = 1..n using m_0..m_{n-1}
    void fill_diagonal(int n, const std::vector<Num>& m) {
        for (int s = 1; s <= n; ++s) {
            int k = n - s;
            Num acc = 0;
            for (int j = 0; j <= k; ++j) {
                if (sgn(m[j]) == 0) continue;
                const Num& t = T[s - 1][k - j];
                if (sgn(t) == 0) continue;
                acc += m[j] * t;
            }
            T[s][k] = acc;
        }
    }
};

template <class Num>
std::vector<Num> free_from_moments_kernel(const std::vector<Num>& m) {
    const int N = static_cast<int>(m.size()) - 1;
    std::vector<Num> f(N + 1, Num(0));
    PowerTable<Num> P(N);
    for (int n = 1; n <= N; ++n) {
        P.fill_diagonal(n, m);
        Num acc = m[n];
        for (int s = 1; s < n; ++s)
            if (sgn(f[s]) != 0 && sgn(P.T[s][n - s]) != 0) acc -= f[s] * P.T[s][n - s];
        f[n] = acc;
    }
    return f;
}

template <class Num>
std::vector<Num> moments_from_free_kernel(const std::vector<Num>& f) {
    const int N = static_cast<int>(f.size()) - 1;
    std::vector<Num> m(N + 1, Num(0));
    m[0] = 1;
    PowerTable<Num> P(N);
    for (int n = 1; n <= N; ++n) {
        P.fill_diagonal(n, m);
        Num acc = 0;
        for (int s = 1; s <= n; ++s)
            if (sgn(f[s]) != 0 && sgn(P.T[s][n - s]) != 0) acc += f[s] * P.T[s][n - s];
        m[n] = acc;
    }
    return m;
}

// block sizes of an rgs, sorted descending, packed into a key
std::string size_signature(std::span<const std::int8_t> rgs, int blocks) {
    std::array<int, 32> sizes{};
    for (auto r : rgs) ++sizes[r];
    std::sort(sizes.begin(), sizes.begin() + blocks, std::greater<>());
    return std::string(sizes.begin(), sizes.begin() + blocks);
}

Rational product_over_signature(const RationalSeq& seq, const std::string& sig) {
    Rational p = 1;
    for (char size : sig) p *= seq.values[static_cast<std::size_t>(size)];
    return p;
}

}  // namespace

// ----------------------------------------------------------- test sequences

RationalSeq gaussian_moments(int N) {
    auto v = zeros(N);
    v[0] = 1;
    for (int n = 2; n <= N; n += 2) v[n] = Rational(double_factorial(n - 1));
    return {v, SeqRole::Moment};
}

RationalSeq semicircle_moments(int N) {
    auto v = zeros(N);
    for (int n = 0; n <= N; n += 2) v[n] = Rational(catalan(n / 2));
    return {v, SeqRole::Moment};
}

RationalSeq gaussian_classical(int N) {
    auto v = zeros(N);
    if (N >= 2) v[2] = 1;
    return {v, SeqRole::Classical};
}

RationalSeq semicircle_free(int N) {
    auto v = zeros(N);
    if (N >= 2) v[2] = 1;
    return {v, SeqRole::Free};
}

// ------------------------------------------------------------ series routes

RationalSeq classical_from_moments(const RationalSeq& m) {
    require_role(m, SeqRole::Moment, "classical_from_moments");
    const int N = m.order();
    auto k = zeros(N);
    for (int n = 1; n <= N; ++n) {
        Rational acc = m[n];
        for (int j = 1; j < n; ++j)
            if (sgn(k[j]) != 0 && sgn(m[n - j]) != 0) acc -= Rational(binomial(n - 1, j - 1)) * k[j] * m[n - j];
        k[n] = acc;
    }
    return {k, SeqRole::Classical};
}

RationalSeq moments_from_classical(const RationalSeq& c) {
    require_role(c, SeqRole::Classical, "moments_from_classical");
    const int N = c.order();
    auto m = zeros(N);
    m[0] = 1;
    for (int n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (int j = 1; j <= n; ++j)
            if (sgn(c[j]) != 0 && sgn(m[n - j]) != 0) acc += Rational(binomial(n - 1, j - 1)) * c[j] * m[n - j];
        m[n] = acc;
    }
    return {m, SeqRole::Moment};
}

RationalSeq free_from_moments(const RationalSeq& m) {
    require_role(m, SeqRole::Moment, "free_from_moments");
    auto f = free_from_moments_kernel(m.values);
    f[0] = 0;
    return {f, SeqRole::Free};
}

RationalSeq moments_from_free(const RationalSeq& f) {
    require_role(f, SeqRole::Free, "moments_from_free");
    return {moments_from_free_kernel(f.values), SeqRole::Moment};
}

std::vector<BigInt> free_from_moments_int(const std::vector<BigInt>& m) {
    if (m.empty() || m[0] != 1) throw DomainError("moment sequence must start with m0 = 1");
    auto f = free_from_moments_kernel(m);
    f[0] = 0;
    return f;
}

std::vector<BigInt> moments_from_free_int(const std::vector<BigInt>& f) {
    if (f.empty()) throw DomainError("empty cumulant sequence");
    return moments_from_free_kernel(f);
}

RationalSeq boolean_from_moments(const RationalSeq& m) {
    require_role(m, SeqRole::Moment, "boolean_from_moments");
    const int N = m.order();
    auto h = zeros(N);
    for (int n = 1; n <= N; ++n) {
        Rational acc = m[n];
        for (int j = 1; j < n; ++j)
            if (sgn(h[j]) != 0 && sgn(m[n - j]) != 0) acc -= h[j] * m[n - j];
        h[n] = acc;
    }
    return {h, SeqRole::Boolean};
}

RationalSeq moments_from_boolean(const RationalSeq& b) {
    require_role(b, SeqRole::Boolean, "moments_from_boolean");
    const int N = b.order();
    auto m = zeros(N);
    m[0] = 1;
    for (int n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (int j = 1; j <= n; ++j)
            if (sgn(b[j]) != 0 && sgn(m[n - j]) != 0) acc += b[j] * m[n - j];
        m[n] = acc;
    }
    return {m, SeqRole::Moment};
}

// ----------------------------------------------------------- lattice routes

namespace {

SeqRole cumulant_role(LatticeKind kind) {
    switch (kind) {
    case LatticeKind::All: return SeqRole::Classical;
    case LatticeKind::NonCrossing: return SeqRole::Free;
    case LatticeKind::Interval: return SeqRole::Boolean;
    }
    return SeqRole::Free;
}

}  // namespace

RationalSeq lattice_cumulants_from_moments(const RationalSeq& m, LatticeKind kind) {
    require_role(m, SeqRole::Moment, "lattice_cumulants_from_moments");
    const int N = m.order();
    if (N > kMaxMoebiusN) throw BoundError("lattice cumulants of order " + std::to_string(N), kMaxMoebiusN);
    auto k = zeros(N);
    for (int n = 1; n <= N; ++n) {
        std::map<std::string, BigInt> by_sig;
        for (auto& [sigma, mu] : moebius_to_top(kind, n))
            by_sig[size_signature(sigma.rgs(), static_cast<int>(sigma.block_count()))] += mu;
        Rational acc = 0;
        for (auto& [sig, mu] : by_sig) acc += Rational(mu) * product_over_signature(m, sig);
        k[n] = acc;
    }
    return {k, cumulant_role(kind)};
}

RationalSeq lattice_moments_from_cumulants(const RationalSeq& k, LatticeKind kind) {
    require_role(k, cumulant_role(kind), "lattice_moments_from_cumulants");
    const int N = k.order();
    if (N > kMaxMoebiusN) throw BoundError("lattice moments of order " + std::to_string(N), kMaxMoebiusN);
    auto m = zeros(N);
    m[0] = 1;
    for (int n = 1; n <= N; ++n) {
        std::map<std::string, long> by_sig;
        for_each_partition(n, kind, [&](std::span<const std::int8_t> rgs, int blocks) { ++by_sig[size_signature(rgs, blocks)]; });
        Rational acc = 0;
        for (auto& [sig, count] : by_sig) acc += Rational(count) * product_over_signature(k, sig);
        m[n] = acc;
    }
    return {m, SeqRole::Moment};
}

inline constexpr int kMaxConnectedSumN = 12;
inline constexpr int kMaxIrreducibleNcSumN = 16;

Rational free_from_classical(const RationalSeq& c, int n) {
    require_role(c, SeqRole::Classical, "free_from_classical");
    if (n < 1 || n > c.order()) throw DomainError("order outside the given cumulant sequence");
    if (n > kMaxConnectedSumN) throw BoundError("connected-partition sum of order " + std::to_string(n), kMaxConnectedSumN);
    std::map<std::string, long> by_sig;
    for_each_partition(n, LatticeKind::All, [&](std::span<const std::int8_t> rgs, int blocks) {
        if (rgs_connected(rgs)) ++by_sig[size_signature(rgs, blocks)];
    });
    Rational acc = 0;
    for (auto& [sig, count] : by_sig) acc += Rational(count) * product_over_signature(c, sig);
    return acc;
}

Rational boolean_from_free(const RationalSeq& f, int n) {
    require_role(f, SeqRole::Free, "boolean_from_free");
    if (n < 1 || n > f.order()) throw DomainError("order outside the given cumulant sequence");
    if (n > kMaxIrreducibleNcSumN)
        throw BoundError("irreducible noncrossing sum of order " + std::to_string(n), kMaxIrreducibleNcSumN);
    std::map<std::string, long> by_sig;
    // a noncrossing partition is irreducible iff 1 and n share a block
    for_each_partition(n, LatticeKind::NonCrossing, [&](std::span<const std::int8_t> rgs, int blocks) {
        if (rgs.front() == rgs.back()) ++by_sig[size_signature(rgs, blocks)];
    });
    Rational acc = 0;
    for (auto& [sig, count] : by_sig) acc += Rational(count) * product_over_signature(f, sig);
    return acc;
}

// --------------------------------------------------------- Gaussian case

std::vector<BigInt> shifted_by_recursion1(int n_max) {
    std::vector<BigInt> s(n_max + 1);
    s[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        BigInt acc = 0;
        for (int i = 0; i < n; ++i) acc += s[i] * s[n - i - 1];
        s[n] = acc * n;
    }
    return s;  // s[n] holds s_{2n}
}

std::vector<BigInt> shifted_by_recursion2(int n_max) {
    std::vector<BigInt> s(n_max + 1);
    s[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        BigInt acc = 0;
        for (int i = 0; i < n; ++i) acc += (2 * i + 1) * s[i] * s[n - i - 1];
        s[n] = acc;
    }
    return s;
}

GaussianFreeCumulants gaussian_free_cumulants(int N) {
    if (N < 2) throw DomainError("gaussian_free_cumulants needs N >= 2");
    // Riordan: fc_{2n} = (n-1) sum_{i=1}^{n-1} fc_{2i} fc_{2(n-i)}
    std::vector<BigInt> fc2(N / 2 + 1, 0);
    fc2[1] = 1;
    for (int n = 2; n <= N / 2; ++n) {
        BigInt acc = 0;
        for (int i = 1; i < n; ++i) acc += fc2[i] * fc2[n - i];
        fc2[n] = acc * (n - 1);
    }
    auto fc = zeros(N);
    for (int n = 1; n <= N / 2; ++n) fc[2 * n] = Rational(fc2[n]);
    auto s = zeros(N - 2);
    for (int n = 0; n <= N - 2; ++n) s[n] = fc[n + 2];

    const int half = (N - 2) / 2;
    auto r1 = shifted_by_recursion1(half);
    auto r2 = shifted_by_recursion2(half);
    for (int n = 0; n <= half; ++n) {
        if (Rational(r1[n]) != s[2 * n]) throw StructureError("shifted sequence violates recursion 1 at s_" + std::to_string(2 * n));
        if (Rational(r2[n]) != s[2 * n]) throw StructureError("shifted sequence violates recursion 2 at s_" + std::to_string(2 * n));
    }
    return {{fc, SeqRole::Free}, {s, SeqRole::Shifted}};
}

// ------------------------------------------------------ weighted pairings

std::string to_string(WeightKind kind) {
    switch (kind) {
    case WeightKind::CcPower: return "cc";
    case WeightKind::CrPower: return "cr";
    case WeightKind::Bdj: return "bdj";
    }
    return "?";
}

WeightKind parse_weight_kind(std::string_view name) {
    if (name == "cc" || name == "CC_POWER") return WeightKind::CcPower;
    if (name == "cr" || name == "CR_POWER") return WeightKind::CrPower;
    if (name == "bdj" || name == "BDJ") return WeightKind::Bdj;
    throw ParseError("unknown weight kind '" + std::string(name) + "'");
}

std::vector<BigInt> weighted_pairing_polynomial(int n, WeightKind kind) {
    if (n < 2 || n % 2 != 0) throw DomainError("weighted pairing sums need an even order >= 2");
    if (n > kMaxStreamPairings) throw BoundError("weighted pairing sum of order " + std::to_string(n), kMaxStreamPairings);
    const int pairs = n / 2;
    std::vector<unsigned long> counts(pairs * pairs + 1, 0);
    for_each_pairing(n, false, [&](std::span<const std::int8_t> rgs, int) {
        std::array<int, 16> lo, hi;
        lo.fill(-1);
        for (int i = 0; i < n; ++i) {
            if (lo[rgs[i]] < 0)
                lo[rgs[i]] = i;
            else
                hi[rgs[i]] = i;
        }
        std::array<int, 16> parent;
        std::iota(parent.begin(), parent.begin() + pairs, 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int cr = 0;
        for (int a = 0; a < pairs; ++a)
            for (int b = a + 1; b < pairs; ++b) {
                // lo[a] < lo[b] by rgs order
                if (lo[b] < hi[a] && hi[a] < hi[b]) {
                    ++cr;
                    parent[find(a)] = find(b);
                }
            }
        int exponent = 0;
        if (kind == WeightKind::CrPower) {
            exponent = cr;
        } else {
            std::array<int, 16> size{};
            for (int a = 0; a < pairs; ++a) ++size[find(a)];
            int cc = 0, h = 0;
            for (int a = 0; a < pairs; ++a) {
                if (size[a] > 0) ++cc;
                if (size[a] == 1) ++h;
            }
            exponent = kind == WeightKind::CcPower ? cc : pairs - h;
        }
        ++counts[exponent];
    });
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    std::vector<BigInt> out;
    for (auto c : counts) out.emplace_back(c);
    return out;
}

Rational weighted_pairing_moment(int n, const WeightSpec& w) {
    auto coeffs = weighted_pairing_polynomial(n, w.kind);
    Rational acc = 0;
    for (std::size_t e = coeffs.size(); e-- > 0;) acc = acc * w.parameter + Rational(coeffs[e]);
    return acc;
}

BigInt nc_innerpoint_sum(int two_n) {
    if (two_n < 2 || two_n % 2 != 0) throw DomainError("nc_innerpoint_sum needs an even order >= 2");
    if (two_n > kMaxStreamNcPairings) throw BoundError("noncrossing pairing sum of order " + std::to_string(two_n), kMaxStreamNcPairings);
    BigInt total = 0;
    unsigned long long chunk = 0;
    for_each_pairing(two_n, true, [&](std::span<const std::int8_t> rgs, int) {
        std::array<int, 16> lo;
        lo.fill(-1);
        unsigned long long prod = 1;
        for (int i = 0; i < two_n; ++i) {
            if (lo[rgs[i]] < 0)
                lo[rgs[i]] = i;
            else
                prod *= static_cast<unsigned long long>(i - lo[rgs[i]]);  // ip + 1
        }
        if (chunk > (~0ULL) - prod) {
            total += BigInt(static_cast<unsigned long>(chunk));
            chunk = 0;
        }
        chunk += prod;
    });
    total += BigInt(static_cast<unsigned long>(chunk));
    return total;
}

// --------------------------------------------------- dilation / convolution

RationalSeq dilate_free(const RationalSeq& f, const Rational& b) {
    if (f.role == SeqRole::Moment || f.role == SeqRole::Shifted) throw DomainError("dilate_free expects a cumulant sequence");
    auto v = f.values;
    Rational p = 1;
    for (std::size_t n = 1; n < v.size(); ++n) {
        p *= b;
        v[n] *= p;
    }
    return {v, f.role};
}

RationalSeq dilate_free_by_variance(const RationalSeq& f, const Rational& v) {
    if (f.role == SeqRole::Moment || f.role == SeqRole::Shifted) throw DomainError("dilate_free_by_variance expects a cumulant sequence");
    auto out = f.values;
    Rational p = 1;
    for (std::size_t n = 1; n < out.size(); ++n) {
        if (n % 2 == 1) {
            if (sgn(out[n]) != 0) throw DomainError("variance dilation needs vanishing odd cumulants");
            continue;
        }
        p *= v;
        out[n] *= p;
    }
    return {out, f.role};
}

namespace {

RationalSeq add_coordinates(const RationalSeq& a, const RationalSeq& b, SeqRole role, const char* op) {
    require_role(a, role, op);
    require_role(b, role, op);
    if (a.size() != b.size()) throw DomainError(std::string(op) + ": sequences of different length");
    auto v = a.values;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values[i];
    return {v, role};
}

}  // namespace

RationalSeq free_convolve(const RationalSeq& f1, const RationalSeq& f2) {
    return add_coordinates(f1, f2, SeqRole::Free, "free_convolve");
}

RationalSeq boolean_convolve(const RationalSeq& b1, const RationalSeq& b2) {
    return add_coordinates(b1, b2, SeqRole::Boolean, "boolean_convolve");
}

}  // namespace freeid

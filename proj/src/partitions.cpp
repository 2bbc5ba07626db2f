#include "freeid/partitions.hpp"

#include "freeid/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>

namespace freeid {

std::string to_string(LatticeKind kind) {
    switch (kind) {
    case LatticeKind::All: return "all";
    case LatticeKind::NonCrossing: return "noncrossing";
    case LatticeKind::Interval: return "interval";
    }
    return "?";
}

LatticeKind parse_lattice_kind(std::string_view name) {
    if (name == "all" || name == "ALL") return LatticeKind::All;
    if (name == "noncrossing" || name == "NONCROSSING" || name == "nc") return LatticeKind::NonCrossing;
    if (name == "interval" || name == "INTERVAL") return LatticeKind::Interval;
    throw ParseError("unknown lattice kind '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- Partition

Partition::Partition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
    if (n < 1) throw DomainError("partition ground set must be nonempty");
    if (n > 127) throw BoundError("partition ground set too large", 127);
    std::vector<int> seen(n + 1, 0);
    for (auto& b : blocks) {
        if (b.empty()) throw DomainError("partition block must be nonempty");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > n) throw DomainError("partition element " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
            if (seen[x]++) throw DomainError("partition element " + std::to_string(x) + " appears twice");
        }
    }
    for (int x = 1; x <= n; ++x)
        if (!seen[x]) throw DomainError("partition misses element " + std::to_string(x));
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    blocks_ = std::move(blocks);
    rgs_.assign(n, 0);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (int x : blocks_[i]) rgs_[x - 1] = static_cast<std::int8_t>(i);
}

Partition Partition::from_rgs(std::span<const std::int8_t> rgs) {
    if (rgs.empty()) throw DomainError("empty restricted growth string");
    Partition p;
    p.n_ = static_cast<int>(rgs.size());
    p.rgs_.assign(rgs.begin(), rgs.end());
    int top = -1;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        if (rgs[i] < 0 || rgs[i] > top + 1) throw DomainError("not a restricted growth string");
        top = std::max<int>(top, rgs[i]);
    }
    p.blocks_.assign(top + 1, {});
    for (std::size_t i = 0; i < rgs.size(); ++i) p.blocks_[rgs[i]].push_back(static_cast<int>(i) + 1);
    return p;
}

std::string Partition::to_json() const {
    nlohmann::json j = blocks_;
    return j.dump();
}

Partition Partition::parse_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("partition JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("partition JSON must be an array of blocks");
    std::vector<std::vector<int>> blocks;
    int n = 0;
    for (const auto& b : j) {
        if (!b.is_array()) throw ParseError("partition block must be an array");
        std::vector<int> block;
        for (const auto& x : b) {
            if (!x.is_number_integer()) throw ParseError("partition element must be an integer");
            block.push_back(x.get<int>());
            n = std::max(n, block.back());
        }
        blocks.push_back(std::move(block));
    }
    return Partition(n, std::move(blocks));
}

// -------------------------------------------------------------- enumeration

namespace {

using Rgs = std::array<std::int8_t, 32>;

void check_stream_bound(int n, LatticeKind kind) {
    if (n < 1) throw DomainError("n must be positive");
    int bound = kind == LatticeKind::All           ? kMaxStreamAll
                : kind == LatticeKind::NonCrossing ? kMaxStreamNonCrossing
                                                   : kMaxStreamInterval;
    if (n > bound) throw BoundError("partition enumeration of " + to_string(kind) + " lattice for n=" + std::to_string(n), bound);
}

void gen_all(Rgs& rgs, int i, int n, int blocks, const RgsVisitor& visit) {
    if (i == n) {
        visit(std::span<const std::int8_t>(rgs.data(), n), blocks);
        return;
    }
    for (int b = 0; b <= blocks; ++b) {
        rgs[i] = static_cast<std::int8_t>(b);
        gen_all(rgs, i + 1, n, std::max(blocks, b + 1), visit);
    }
}

// Open blocks form a stack; joining a block closes every block above it.
void gen_nc(Rgs& rgs, int i, int n, int blocks, std::array<std::int8_t, 32>& stack, int depth, const RgsVisitor& visit) {
    if (i == n) {
        visit(std::span<const std::int8_t>(rgs.data(), n), blocks);
        return;
    }
    for (int j = 0; j < depth; ++j) {
        rgs[i] = stack[j];
        gen_nc(rgs, i + 1, n, blocks, stack, j + 1, visit);
    }
    rgs[i] = static_cast<std::int8_t>(blocks);
    auto saved = stack[depth];
    stack[depth] = static_cast<std::int8_t>(blocks);
    gen_nc(rgs, i + 1, n, blocks + 1, stack, depth + 1, visit);
    stack[depth] = saved;
}

void gen_interval(Rgs& rgs, int i, int n, const RgsVisitor& visit) {
    if (i == n) {
        visit(std::span<const std::int8_t>(rgs.data(), n), rgs[n - 1] + 1);
        return;
    }
    rgs[i] = rgs[i - 1];
    gen_interval(rgs, i + 1, n, visit);
    rgs[i] = static_cast<std::int8_t>(rgs[i - 1] + 1);
    gen_interval(rgs, i + 1, n, visit);
}

// open[] holds the block ids of pairs still waiting for their second element
void gen_pairings(Rgs& rgs, int i, int n, int blocks, std::array<std::int8_t, 32> open, int open_count,
                  bool noncrossing, const RgsVisitor& visit) {
    if (i == n) {
        visit(std::span<const std::int8_t>(rgs.data(), n), blocks);
        return;
    }
    // close an open pair (ascending block id = ascending rgs value)
    if (noncrossing) {
        if (open_count > 0) {
            rgs[i] = open[open_count - 1];
            gen_pairings(rgs, i + 1, n, blocks, open, open_count - 1, noncrossing, visit);
        }
    } else {
        for (int j = 0; j < open_count; ++j) {
            auto closed = open[j];
            rgs[i] = closed;
            std::array<std::int8_t, 32> rest{};
            int k = 0;
            for (int m = 0; m < open_count; ++m)
                if (m != j) rest[k++] = open[m];
            gen_pairings(rgs, i + 1, n, blocks, rest, open_count - 1, noncrossing, visit);
        }
    }
    if (open_count + 1 <= n - i - 1) {
        rgs[i] = static_cast<std::int8_t>(blocks);
        open[open_count] = static_cast<std::int8_t>(blocks);
        gen_pairings(rgs, i + 1, n, blocks + 1, open, open_count + 1, noncrossing, visit);
    }
}

}  // namespace

void for_each_partition(int n, LatticeKind kind, const RgsVisitor& visit) {
    check_stream_bound(n, kind);
    Rgs rgs{};
    rgs[0] = 0;
    switch (kind) {
    case LatticeKind::All: gen_all(rgs, 1, n, 1, visit); break;
    case LatticeKind::NonCrossing: {
        std::array<std::int8_t, 32> stack{};
        stack[0] = 0;
        gen_nc(rgs, 1, n, 1, stack, 1, visit);
        break;
    }
    case LatticeKind::Interval: gen_interval(rgs, 1, n, visit); break;
    }
}

std::vector<Partition> enumerate_partitions(int n, LatticeKind kind) {
    int bound = kind == LatticeKind::All           ? kMaxListAll
                : kind == LatticeKind::NonCrossing ? kMaxListNonCrossing
                                                   : kMaxListInterval;
    if (n > bound)
        throw BoundError("materialized " + to_string(kind) + " partition list for n=" + std::to_string(n) +
                             "; use for_each_partition",
                         bound);
    std::vector<Partition> out;
    for_each_partition(n, kind, [&](std::span<const std::int8_t> rgs, int) { out.push_back(Partition::from_rgs(rgs)); });
    return out;
}

void for_each_pairing(int n, bool noncrossing_only, const RgsVisitor& visit) {
    if (n < 1) throw DomainError("n must be positive");
    if (n > kMaxStreamPairings && !noncrossing_only)
        throw BoundError("pairing enumeration for n=" + std::to_string(n), kMaxStreamPairings);
    if (n > kMaxStreamNcPairings && noncrossing_only)
        throw BoundError("noncrossing pairing enumeration for n=" + std::to_string(n), kMaxStreamNcPairings);
    if (n % 2 != 0) return;
    Rgs rgs{};
    std::array<std::int8_t, 32> open{};
    gen_pairings(rgs, 0, n, 0, open, 0, noncrossing_only, visit);
}

std::vector<Partition> enumerate_pairings(int n) {
    if (n > kMaxListPairings) throw BoundError("materialized pairing list for n=" + std::to_string(n), kMaxListPairings);
    std::vector<Partition> out;
    for_each_pairing(n, false, [&](std::span<const std::int8_t> rgs, int) { out.push_back(Partition::from_rgs(rgs)); });
    return out;
}

std::vector<Partition> enumerate_noncrossing_pairings(int n) {
    if (n > 2 * kMaxListNonCrossing)
        throw BoundError("materialized noncrossing pairing list for n=" + std::to_string(n), 2 * kMaxListNonCrossing);
    std::vector<Partition> out;
    for_each_pairing(n, true, [&](std::span<const std::int8_t> rgs, int) { out.push_back(Partition::from_rgs(rgs)); });
    return out;
}

// --------------------------------------------------------------- predicates

bool rgs_connected(std::span<const std::int8_t> rgs) {
    const int n = static_cast<int>(rgs.size());
    std::array<int, 32> lo{}, hi{};
    lo.fill(n);
    hi.fill(-1);
    for (int i = 0; i < n; ++i) {
        lo[rgs[i]] = std::min(lo[rgs[i]], i);
        hi[rgs[i]] = std::max(hi[rgs[i]], i);
    }
    // [a,b] is a union of blocks iff every element's block stays inside it
    for (int a = 0; a < n; ++a) {
        int min_lo = n, max_hi = -1;
        for (int b = a; b < n; ++b) {
            min_lo = std::min(min_lo, lo[rgs[b]]);
            max_hi = std::max(max_hi, hi[rgs[b]]);
            if (min_lo < a) break;
            if (max_hi <= b && !(a == 0 && b == n - 1)) return false;
        }
    }
    return true;
}

bool rgs_noncrossing(std::span<const std::int8_t> rgs) {
    const int n = static_cast<int>(rgs.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (rgs[b] == rgs[a]) continue;
            for (int c = b + 1; c < n; ++c) {
                if (rgs[c] != rgs[a]) continue;
                for (int d = c + 1; d < n; ++d)
                    if (rgs[d] == rgs[b]) return false;
            }
        }
    return true;
}

namespace {

// Union-find of blocks under the "cross" relation.
std::vector<int> crossing_components(std::span<const std::int8_t> rgs, int blocks) {
    const int n = static_cast<int>(rgs.size());
    std::vector<int> parent(blocks);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < blocks; ++i)
        for (int j = i + 1; j < blocks; ++j) {
            // restricted word over {i, j} with runs collapsed; crossing iff length >= 4
            int runs = 0, last = -1;
            for (int x = 0; x < n && runs < 4; ++x) {
                if (rgs[x] != i && rgs[x] != j) continue;
                if (rgs[x] != last) {
                    ++runs;
                    last = rgs[x];
                }
            }
            if (runs >= 4) parent[find(i)] = find(j);
        }
    for (int i = 0; i < blocks; ++i) parent[i] = find(i);
    return parent;
}

int block_count_of(std::span<const std::int8_t> rgs) {
    int top = -1;
    for (auto r : rgs) top = std::max<int>(top, r);
    return top + 1;
}

}  // namespace

bool rgs_irreducible(std::span<const std::int8_t> rgs) {
    auto comp = crossing_components(rgs, block_count_of(rgs));
    return comp[rgs.front()] == comp[rgs.back()];
}

PartitionFlags classify(const Partition& p) {
    PartitionFlags f;
    std::span<const std::int8_t> rgs(p.rgs());
    f.connected = rgs_connected(rgs);
    f.irreducible = rgs_irreducible(rgs);
    f.noncrossing = rgs_noncrossing(rgs);
    f.interval = std::all_of(p.blocks().begin(), p.blocks().end(),
                             [](const auto& b) { return b.back() - b.front() + 1 == static_cast<int>(b.size()); });
    return f;
}

PartitionStats statistics(const Partition& p) {
    PartitionStats s;
    std::span<const std::int8_t> rgs(p.rgs());
    const int n = p.n();
    const int k = static_cast<int>(p.block_count());
    s.component = crossing_components(rgs, k);
    std::vector<int> comp_size(k, 0);
    for (int b = 0; b < k; ++b) ++comp_size[s.component[b]];
    for (int c = 0; c < k; ++c)
        if (comp_size[c] > 0) ++s.cc;
    for (int b = 0; b < k; ++b)
        if (comp_size[s.component[b]] == 1 && p.blocks()[b].size() == 2) ++s.h;
    // renumber components densely in order of first block
    std::vector<int> dense(k, -1);
    int next = 0;
    for (int b = 0; b < k; ++b) {
        int& d = dense[s.component[b]];
        if (d < 0) d = next++;
        s.component[b] = d;
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (rgs[b] == rgs[a]) continue;
            for (int c = b + 1; c < n; ++c) {
                if (rgs[c] != rgs[a]) continue;
                for (int d = c + 1; d < n; ++d)
                    if (rgs[d] == rgs[b]) ++s.cr;
            }
        }
    for (const auto& b : p.blocks())
        s.ip.push_back(b.back() - b.front() + 1 - static_cast<int>(b.size()));
    return s;
}

bool belongs_to(const Partition& p, LatticeKind kind) {
    switch (kind) {
    case LatticeKind::All: return true;
    case LatticeKind::NonCrossing: return rgs_noncrossing(p.rgs());
    case LatticeKind::Interval: return classify(p).interval;
    }
    return false;
}

BigInt count_connected_pairings(int two_n) {
    if (two_n < 2 || two_n % 2 != 0) throw DomainError("count_connected_pairings needs an even positive order");
    if (two_n > kMaxConnectedPairingCount)
        throw BoundError("connected pairing count for order " + std::to_string(two_n), kMaxConnectedPairingCount);
    unsigned long count = 0;
    for_each_pairing(two_n, false, [&](std::span<const std::int8_t> rgs, int) {
        if (rgs_connected(rgs)) ++count;
    });
    return BigInt(count);
}

// ------------------------------------------------------------------ Möbius

bool refines(const Partition& sigma, const Partition& pi) {
    if (sigma.n() != pi.n()) throw DomainError("partitions of different ground sets");
    for (const auto& b : sigma.blocks()) {
        int owner = pi.block_of(b.front());
        for (int x : b)
            if (pi.block_of(x) != owner) return false;
    }
    return true;
}

namespace {

std::uint64_t pack(std::span<const std::int8_t> rgs) {
    std::uint64_t key = 0;
    for (auto r : rgs) key = (key << 4) | static_cast<std::uint64_t>(r);
    return key;
}

// Canonical rgs of the partition obtained from `base` by merging its blocks
// according to `group` (group[b] = new id of block b).
void merged_rgs(std::span<const std::int8_t> base, std::span<const std::int8_t> group, Rgs& out) {
    std::array<std::int8_t, 32> relabel;
    relabel.fill(-1);
    std::int8_t next = 0;
    for (std::size_t i = 0; i < base.size(); ++i) {
        auto g = group[base[i]];
        if (relabel[g] < 0) relabel[g] = next++;
        out[i] = relabel[g];
    }
}

class MoebiusSolver {
public:
    MoebiusSolver(LatticeKind kind, const Partition& top) : kind_(kind), top_(top) {}

    // mu(x, top) for x <= top in the lattice.
    long long to_top(std::span<const std::int8_t> x) {
        std::uint64_t key = pack(x);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int n = static_cast<int>(x.size());
        if (std::equal(x.begin(), x.end(), top_.rgs().begin())) return memo_[key] = 1;

        const int k = block_count_of(x);
        // block b of x sits inside top block owner[b]
        std::array<std::int8_t, 32> owner{};
        for (int i = 0; i < n; ++i) owner[x[i]] = top_.rgs()[i];

        long long sum = 0;
        Rgs group{}, merged{};
        std::vector<std::pair<std::uint64_t, Rgs>> strictly_above;
        // set partitions of the k blocks of x that never merge across top blocks
        std::function<void(int, int)> rec = [&](int b, int groups) {
            if (b == k) {
                if (groups == k) return;  // x itself
                merged_rgs(x, std::span<const std::int8_t>(group.data(), k), merged);
                std::span<const std::int8_t> m(merged.data(), n);
                if (kind_ == LatticeKind::NonCrossing && !rgs_noncrossing(m)) return;
                if (kind_ == LatticeKind::Interval && !is_interval(m)) return;
                strictly_above.emplace_back(pack(m), merged);
                return;
            }
            for (int g = 0; g < groups; ++g) {
                if (owner[first_block_in_group(g, b, group)] != owner[b]) continue;
                group[b] = static_cast<std::int8_t>(g);
                rec(b + 1, groups);
            }
            group[b] = static_cast<std::int8_t>(groups);
            rec(b + 1, groups + 1);
        };
        rec(0, 0);
        for (auto& [k2, r] : strictly_above) sum += to_top(std::span<const std::int8_t>(r.data(), n));
        return memo_[key] = -sum;
    }

    const std::unordered_map<std::uint64_t, long long>& memo() const { return memo_; }

private:
    static int first_block_in_group(int g, int upto, const Rgs& group) {
        for (int b = 0; b < upto; ++b)
            if (group[b] == g) return b;
        return 0;
    }
    static bool is_interval(std::span<const std::int8_t> rgs) {
        for (std::size_t i = 1; i < rgs.size(); ++i)
            if (rgs[i] != rgs[i - 1] && rgs[i] != rgs[i - 1] + 1) return false;
        return true;
    }

    LatticeKind kind_;
    const Partition& top_;
    std::unordered_map<std::uint64_t, long long> memo_;
};

}  // namespace

BigInt moebius(LatticeKind kind, const Partition& sigma, const Partition& pi) {
    if (sigma.n() != pi.n()) throw DomainError("partitions of different ground sets");
    if (sigma.n() > kMaxMoebiusN) throw BoundError("Möbius interval for n=" + std::to_string(sigma.n()), kMaxMoebiusN);
    if (!belongs_to(sigma, kind) || !belongs_to(pi, kind))
        throw DomainError("partition not in the " + to_string(kind) + " lattice");
    if (!refines(sigma, pi)) throw OrderError(sigma.to_json() + " is not below " + pi.to_json());
    MoebiusSolver solver(kind, pi);
    return BigInt(static_cast<long>(solver.to_top(sigma.rgs())));
}

std::vector<std::pair<Partition, BigInt>> moebius_to_top(LatticeKind kind, int n) {
    if (n < 1) throw DomainError("n must be positive");
    if (n > kMaxMoebiusN) throw BoundError("Möbius table for n=" + std::to_string(n), kMaxMoebiusN);
    Partition top = Partition::from_rgs(std::vector<std::int8_t>(n, 0));
    MoebiusSolver solver(kind, top);
    std::vector<std::pair<Partition, BigInt>> out;
    for_each_partition(n, kind, [&](std::span<const std::int8_t> rgs, int) {
        out.emplace_back(Partition::from_rgs(rgs), BigInt(static_cast<long>(solver.to_top(rgs))));
    });
    return out;
}

}  // namespace freeid

#pragma once

#include "freeid/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace freeid {

enum class LatticeKind { All, NonCrossing, Interval };

std::string to_string(LatticeKind kind);
LatticeKind parse_lattice_kind(std::string_view name);

// A set partition of {1..n}. Blocks are stored sorted, ordered by least
// element; two partitions compare by their restricted growth strings.
class Partition {
public:
    Partition(int n, std::vector<std::vector<int>> blocks);

    // rgs[i] is the 0-based block index of element i+1; must be a
    // restricted growth string (rgs[0] == 0, rgs[i] <= max(rgs[<i]) + 1).
    static Partition from_rgs(std::span<const std::int8_t> rgs);

    int n() const noexcept { return n_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
    const std::vector<std::int8_t>& rgs() const noexcept { return rgs_; }
    int block_of(int element) const { return rgs_.at(element - 1); }

    // Sorted block lists in JSON, e.g. [[1,3],[2,4]].
    std::string to_json() const;
    static Partition parse_json(std::string_view text);

    friend bool operator==(const Partition& a, const Partition& b) { return a.rgs_ == b.rgs_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.rgs_ <=> b.rgs_;
    }

private:
    Partition() = default;
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<std::int8_t> rgs_;
};

struct PartitionFlags {
    bool connected = false;
    bool irreducible = false;
    bool noncrossing = false;
    bool interval = false;
};

struct PartitionStats {
    int cc = 0;            // connected components of the crossing graph
    long cr = 0;           // quadruples a<b<c<d, a~c, b~d, in distinct blocks
    int h = 0;             // components made of exactly one 2-element block
    std::vector<int> ip;   // inner points per block, aligned with blocks()
    std::vector<int> component;  // component index per block
};

// Streaming bounds (visitor API) and materializing bounds (list API).
inline constexpr int kMaxStreamAll = 14;
inline constexpr int kMaxStreamNonCrossing = 18;
inline constexpr int kMaxStreamInterval = 24;
inline constexpr int kMaxListAll = 11;
inline constexpr int kMaxListNonCrossing = 13;
inline constexpr int kMaxListInterval = 20;
inline constexpr int kMaxStreamPairings = 18;
inline constexpr int kMaxListPairings = 14;
inline constexpr int kMaxStreamNcPairings = 30;
inline constexpr int kMaxConnectedPairingCount = 16;
inline constexpr int kMaxMoebiusN = 10;

using RgsVisitor = std::function<void(std::span<const std::int8_t> rgs, int block_count)>;

// Visits every partition of the given kind in restricted-growth-string
// lexicographic order without materializing the list.
void for_each_partition(int n, LatticeKind kind, const RgsVisitor& visit);
std::vector<Partition> enumerate_partitions(int n, LatticeKind kind);

// All pair partitions of [n] (empty when n is odd), same order as above.
void for_each_pairing(int n, bool noncrossing_only, const RgsVisitor& visit);
std::vector<Partition> enumerate_pairings(int n);
std::vector<Partition> enumerate_noncrossing_pairings(int n);

PartitionFlags classify(const Partition& p);
PartitionStats statistics(const Partition& p);
bool belongs_to(const Partition& p, LatticeKind kind);

// Fast predicates on a raw restricted growth string.
bool rgs_connected(std::span<const std::int8_t> rgs);
bool rgs_noncrossing(std::span<const std::int8_t> rgs);
bool rgs_irreducible(std::span<const std::int8_t> rgs);

BigInt count_connected_pairings(int two_n);

// sigma <= pi in refinement order (every block of sigma inside a block of pi).
bool refines(const Partition& sigma, const Partition& pi);

// Möbius function of the chosen lattice on [sigma, pi], by memoized zeta
// inversion over the interval.
BigInt moebius(LatticeKind kind, const Partition& sigma, const Partition& pi);

// mu(sigma, 1_n) for every sigma in the lattice, in enumeration order.
std::vector<std::pair<Partition, BigInt>> moebius_to_top(LatticeKind kind, int n);

}  // namespace freeid

#pragma once

#include "mms/block_partition.hpp"
#include "mms/hypergraph.hpp"
#include "mms/json_io.hpp"
#include "mms/limits.hpp"
#include "mms/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace mms {

/// Partitions of [0, m*n) into n blocks of size m.
struct PartitionFamily {
    std::size_t n = 0;
    std::size_t m = 1;
    std::vector<BlockPartition> members;
};

/// Same ground set and shape for every member, members pairwise distinct as set
/// partitions. Throws ValidationError naming the offending member.
void validate(const PartitionFamily& family);

/// No two distinct members have k blocks each with the same union. Every
/// k-block union of every member goes into one hash table, so a collision
/// between members is found in a single pass. CapacityError when the number of
/// unions exceeds limits.max_conflict_unions.
bool is_conflictless(const PartitionFamily& family, std::size_t k, const Limits& limits = {});

bool is_odd_prime(std::uint64_t p);

/// Pairings {{x, p + (a*x + b mod p)} : x in Z_p} for a = 1..(p-1)/2 and b in Z_p,
/// in that order; binom(p, 2) members.
PartitionFamily prime_pairings(std::uint64_t p);

/// Partitions of Z_p x Z_m, (x, t) encoded as x + t*p, with block x equal to
/// {(x, 0), (a_1 x + b_1, 1), ..., (a_{m-1} x + b_{m-1}, m-1)}. Members run
/// lexicographically over the (a_t, b_t) tuples; binom(p, 2)^(m-1) of them.
PartitionFamily layered_partitions(std::uint64_t p, std::size_t m, const Limits& limits = {});

/// floor(binom(nm, km) / binom(n, k)).
BigInt maxm_upper_bound(std::size_t n, std::size_t m, std::size_t k);

/// (nm)! / ((m!)^n n!).
BigInt partition_count(std::size_t n, std::size_t m);

/// All partitions of [0, nm) into m-blocks, each with blocks ordered by their
/// least element, in lexicographic order. CapacityError above limits.max_partitions.
std::vector<BlockPartition> enumerate_partitions(std::size_t n, std::size_t m, const Limits& limits = {});

/// A largest conflictless family: maximum independent set of the conflict graph
/// on all partitions.
PartitionFamily maxm_bruteforce_family(std::size_t n, std::size_t m, std::size_t k, const Limits& limits = {});
std::uint64_t maxm_bruteforce(std::size_t n, std::size_t m, std::size_t k, const Limits& limits = {});

/// Vertices are the 2m-subsets of [0, nm) ranked lexicographically; each
/// partition (in enumerate_partitions order) contributes the edge of its
/// binom(n, 2) two-block unions. Requires n >= 3 so that edges are distinct.
Hypergraph auxiliary_hypergraph(std::size_t n, std::size_t m, const Limits& limits = {});

/// 1/2 * binom(2m, m) * ((n-2)m)! / ((m!)^(n-2) (n-2)!).
BigInt auxiliary_degree(std::size_t n, std::size_t m);

/// Lexicographic rank of a sorted r-subset of [0, ground).
std::uint64_t subset_rank(const VertexSet& subset, std::size_t ground);

/// Randomized greedy conflictless (k = 2) family. Walks all partitions in a
/// seeded random order when there are at most limits.max_partitions of them,
/// otherwise limits.greedy_samples random partitions, keeping a partition when
/// none of its two-block unions is already used.
PartitionFamily greedy_conflictless(std::size_t n, std::size_t m, std::uint64_t seed, const Limits& limits = {});

// {"n": n, "m": m, "members": [[[block], ...], ...]}
Json to_json(const PartitionFamily& family);
PartitionFamily family_from_json(const Json& doc);
PartitionFamily parse_family(std::string_view text);

} // namespace mms

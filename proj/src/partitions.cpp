#include "mms/partitions.hpp"

#include "mms/errors.hpp"
#include "mms/independent_set.hpp"
#include "mms/prng.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace mms {

namespace {

// Union of blocks as a packed bitset over the ground set.
using UnionKey = std::vector<std::uint64_t>;

struct UnionKeyHash {
    std::size_t operator()(const UnionKey& key) const { return boost::hash_range(key.begin(), key.end()); }
};

UnionKey block_union(const BlockPartition& p, const std::vector<std::size_t>& chosen) {
    UnionKey key((p.ground_size() + 63) / 64, 0);
    for (auto b : chosen) {
        for (Vertex v : p.block(b)) key[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    return key;
}

template <typename Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        visit(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void check_union_budget(std::size_t members, std::size_t n, std::size_t k, const Limits& limits) {
    const BigInt total = binomial(n, k) * members;
    if (total > BigInt(std::to_string(limits.max_conflict_unions))) {
        throw CapacityError("conflict check needs " + total.get_str() + " block unions, over the budget of " +
                            std::to_string(limits.max_conflict_unions));
    }
}

BlockPartition canonical(const BlockPartition& p) { return BlockPartition(p.block_size(), p.as_set_partition()); }

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) out *= base;
    return out;
}

} // namespace

void validate(const PartitionFamily& family) {
    std::set<std::vector<VertexSet>> seen;
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        const BlockPartition& p = family.members[i];
        const std::string where = "members[" + std::to_string(i) + "]";
        if (p.block_size() != family.m || p.block_count() != family.n) {
            throw ValidationError(where + ": expected " + std::to_string(family.n) + " blocks of size " +
                                  std::to_string(family.m));
        }
        if (!seen.insert(p.as_set_partition()).second) throw ValidationError(where + ": repeats an earlier member");
    }
}

bool is_conflictless(const PartitionFamily& family, std::size_t k, const Limits& limits) {
    if (k < 2) throw PreconditionError("is_conflictless: k must be at least 2");
    validate(family);
    if (k > family.n || family.members.size() < 2) return true;
    check_union_budget(family.members.size(), family.n, k, limits);
    std::unordered_map<UnionKey, std::size_t, UnionKeyHash> owner;
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        bool clash = false;
        for_each_combination(family.n, k, [&](const std::vector<std::size_t>& chosen) {
            if (clash) return;
            auto [it, inserted] = owner.emplace(block_union(family.members[i], chosen), i);
            if (!inserted && it->second != i) clash = true;
        });
        if (clash) return false;
    }
    return true;
}

bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

PartitionFamily prime_pairings(std::uint64_t p) { return layered_partitions(p, 2); }

PartitionFamily layered_partitions(std::uint64_t p, std::size_t m, const Limits& limits) {
    if (!is_odd_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not an odd prime");
    if (m == 0) throw PreconditionError("m must be at least 1");
    const std::uint64_t maps = p * (p - 1) / 2; // (a, b) with 1 <= a <= (p-1)/2
    BigInt total = 1;
    for (std::size_t t = 1; t < m; ++t) total *= static_cast<unsigned long>(maps);
    if (total > BigInt(std::to_string(limits.max_family_size))) {
        throw CapacityError("layered_partitions(" + std::to_string(p) + ", " + std::to_string(m) + ") has " +
                            total.get_str() + " members, over the budget of " + std::to_string(limits.max_family_size));
    }
    const std::uint64_t size = ipow(maps, m - 1);

    PartitionFamily family{static_cast<std::size_t>(p), m, {}};
    family.members.reserve(size);
    std::vector<std::uint64_t> digits(m - 1, 0); // map index per layer, most significant first
    for (std::uint64_t index = 0; index < size; ++index) {
        std::uint64_t rest = index;
        for (std::size_t t = m - 1; t-- > 0;) {
            digits[t] = rest % maps;
            rest /= maps;
        }
        std::vector<VertexSet> blocks(p);
        for (std::uint64_t x = 0; x < p; ++x) {
            blocks[x].push_back(static_cast<Vertex>(x));
            for (std::size_t t = 1; t < m; ++t) {
                const std::uint64_t a = 1 + digits[t - 1] / p;
                const std::uint64_t b = digits[t - 1] % p;
                blocks[x].push_back(static_cast<Vertex>((a * x + b) % p + t * p));
            }
        }
        family.members.emplace_back(m, std::move(blocks));
    }
    return family;
}

BigInt maxm_upper_bound(std::size_t n, std::size_t m, std::size_t k) {
    if (k > n) throw PreconditionError("maxm_upper_bound: k must not exceed n");
    BigInt q = binomial(n * m, k * m);
    BigInt d = binomial(n, k);
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t());
    return out;
}

BigInt partition_count(std::size_t n, std::size_t m) {
    BigInt denom = factorial(n);
    const BigInt mf = factorial(m);
    for (std::size_t i = 0; i < n; ++i) denom *= mf;
    return factorial(n * m) / denom;
}

std::vector<BlockPartition> enumerate_partitions(std::size_t n, std::size_t m, const Limits& limits) {
    if (m == 0) throw PreconditionError("block size must be positive");
    const BigInt count = partition_count(n, m);
    if (count > BigInt(std::to_string(limits.max_partitions))) {
        throw CapacityError("there are " + count.get_str() + " partitions of [" + std::to_string(n * m) +
                            "] into blocks of size " + std::to_string(m) + ", over the budget of " +
                            std::to_string(limits.max_partitions));
    }
    const std::size_t ground = n * m;
    std::vector<BlockPartition> out;
    out.reserve(to_u64(count));
    std::vector<bool> used(ground, false);
    std::vector<VertexSet> blocks;
    VertexSet current;

    // Fills the open block from elements above `from`; a new block starts at the
    // least unused element.
    auto recurse = [&](auto&& self, Vertex from) -> void {
        if (current.size() == m) {
            blocks.push_back(current);
            current.clear();
            if (blocks.size() == n) {
                out.emplace_back(m, blocks);
            } else {
                Vertex first = 0;
                while (used[first]) ++first;
                used[first] = true;
                current.push_back(first);
                self(self, first + 1);
                current.pop_back();
                used[first] = false;
            }
            current = blocks.back();
            blocks.pop_back();
            return;
        }
        for (Vertex v = from; v < ground; ++v) {
            if (used[v]) continue;
            used[v] = true;
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
            used[v] = false;
        }
    };
    if (n == 0) return out;
    used[0] = true;
    current.push_back(0);
    recurse(recurse, 1);
    return out;
}

PartitionFamily maxm_bruteforce_family(std::size_t n, std::size_t m, std::size_t k, const Limits& limits) {
    if (k < 2) throw PreconditionError("maxm_bruteforce: k must be at least 2");
    const auto all = enumerate_partitions(n, m, limits);
    PartitionFamily family{n, m, {}};
    if (k > n) {
        family.members = all;
        return family;
    }
    check_union_budget(all.size(), n, k, limits);
    std::vector<Bitset> adjacency(all.size(), Bitset(all.size()));
    std::unordered_map<UnionKey, std::vector<std::size_t>, UnionKeyHash> owners;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for_each_combination(n, k, [&](const std::vector<std::size_t>& chosen) {
            auto& list = owners[block_union(all[i], chosen)];
            for (auto j : list) {
                adjacency[i].set(j);
                adjacency[j].set(i);
            }
            list.push_back(i);
        });
    }
    for (auto i : maximum_independent_set(adjacency)) family.members.push_back(all[i]);
    return family;
}

std::uint64_t maxm_bruteforce(std::size_t n, std::size_t m, std::size_t k, const Limits& limits) {
    return maxm_bruteforce_family(n, m, k, limits).members.size();
}

std::uint64_t subset_rank(const VertexSet& subset, std::size_t ground) {
    const std::size_t r = subset.size();
    std::uint64_t rank = 0;
    Vertex next = 0;
    for (std::size_t i = 0; i < r; ++i) {
        for (Vertex v = next; v < subset[i]; ++v) rank += to_u64(binomial(ground - 1 - v, r - 1 - i));
        next = subset[i] + 1;
    }
    return rank;
}

Hypergraph auxiliary_hypergraph(std::size_t n, std::size_t m, const Limits& limits) {
    if (n < 3) throw PreconditionError("auxiliary_hypergraph: n must be at least 3");
    if (m == 0) throw PreconditionError("auxiliary_hypergraph: m must be at least 1");
    const std::size_t ground = n * m;
    const BigInt vertices = binomial(ground, 2 * m);
    if (vertices > BigInt(std::to_string(limits.max_aux_vertices))) {
        throw CapacityError("auxiliary hypergraph would have " + vertices.get_str() + " vertices, over the budget of " +
                            std::to_string(limits.max_aux_vertices));
    }
    const auto partitions = enumerate_partitions(n, m, limits);
    std::vector<Edge> edges;
    edges.reserve(partitions.size());
    for (const auto& p : partitions) {
        Edge e;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                VertexSet u = p.block(a);
                u.insert(u.end(), p.block(b).begin(), p.block(b).end());
                std::sort(u.begin(), u.end());
                e.push_back(static_cast<Vertex>(subset_rank(u, ground)));
            }
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph(to_u64(vertices), n * (n - 1) / 2, std::move(edges));
}

BigInt auxiliary_degree(std::size_t n, std::size_t m) {
    if (n < 2) throw PreconditionError("auxiliary_degree: n must be at least 2");
    // binom(2m, m)/2 ways to split the pair, times the partitions of the rest.
    return binomial(2 * m, m) * partition_count(n - 2, m) / 2;
}

PartitionFamily greedy_conflictless(std::size_t n, std::size_t m, std::uint64_t seed, const Limits& limits) {
    if (n < 2 || m == 0) throw PreconditionError("greedy_conflictless: need n >= 2 and m >= 1");
    Prng rng(seed);
    PartitionFamily family{n, m, {}};
    std::unordered_set<UnionKey, UnionKeyHash> used;
    std::set<std::vector<VertexSet>> kept;

    auto offer = [&](const BlockPartition& p) {
        std::vector<UnionKey> keys;
        bool ok = true;
        for_each_combination(n, 2, [&](const std::vector<std::size_t>& chosen) {
            if (!ok) return;
            keys.push_back(block_union(p, chosen));
            if (used.count(keys.back()) > 0) ok = false;
        });
        if (!ok) return;
        for (auto& key : keys) used.insert(std::move(key));
        family.members.push_back(p);
        kept.insert(p.as_set_partition());
    };

    if (partition_count(n, m) <= BigInt(std::to_string(limits.max_partitions))) {
        auto all = enumerate_partitions(n, m, limits);
        rng.shuffle(std::span<BlockPartition>(all));
        for (const auto& p : all) offer(p);
    } else {
        std::vector<Vertex> perm(n * m);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::uint64_t s = 0; s < limits.greedy_samples; ++s) {
            rng.shuffle(std::span<Vertex>(perm));
            std::vector<VertexSet> blocks(n);
            for (std::size_t i = 0; i < n * m; ++i) blocks[i / m].push_back(perm[i]);
            offer(canonical(BlockPartition(m, std::move(blocks))));
        }
    }
    return family;
}

Json to_json(const PartitionFamily& family) {
    Json members = Json::array();
    for (const auto& p : family.members) members.push_back(p.blocks());
    Json doc = Json::object();
    doc["n"] = family.n;
    doc["m"] = family.m;
    doc["members"] = std::move(members);
    return doc;
}

PartitionFamily family_from_json(const Json& doc) {
    PartitionFamily family;
    family.n = require_uint(doc, "n");
    family.m = require_uint(doc, "m");
    if (family.m == 0) throw ValidationError("field \"m\" must be positive");
    if (!doc.contains("members") || !doc.at("members").is_array()) {
        throw ValidationError("field \"members\" must be an array");
    }
    const Json& list = doc.at("members");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "members[" + std::to_string(i) + "]";
        const Json& item = list[i];
        if (!item.is_array()) throw ValidationError(where + " must be an array of blocks");
        std::vector<VertexSet> blocks;
        for (std::size_t b = 0; b < item.size(); ++b) {
            const std::string block_where = where + "[" + std::to_string(b) + "]";
            if (!item[b].is_array()) throw ValidationError(block_where + " must be an array");
            VertexSet block;
            for (const Json& v : item[b]) {
                if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
                    throw ValidationError(block_where + " must hold non-negative integers");
                }
                block.push_back(static_cast<Vertex>(v.get<std::uint64_t>()));
            }
            blocks.push_back(std::move(block));
        }
        if (blocks.size() != family.n) {
            throw ValidationError(where + ": expected " + std::to_string(family.n) + " blocks");
        }
        try {
            family.members.emplace_back(family.m, std::move(blocks));
        } catch (const ValidationError& e) {
            throw ValidationError(where + ": " + e.what());
        }
    }
    validate(family);
    return family;
}

PartitionFamily parse_family(std::string_view text) { return family_from_json(parse_json_document(text)); }

} // namespace mms

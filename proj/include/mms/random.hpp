#pragma once

#include "mms/hypergraph.hpp"
#include "mms/json_io.hpp"
#include "mms/limits.hpp"
#include "mms/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mms {

/// G(n, p): one Bernoulli(p) draw per pair {i, j}, i < j, pairs in
/// lexicographic order, from Prng(seed).
Graph sample_gnp(std::size_t n, const Rational& p, std::uint64_t seed);

/// Simple d-regular graph from the configuration model, restarting on loops or
/// repeated edges. When d > (n-1)/2 the complement is sampled instead, since
/// dense pairings almost never come out simple. CapacityError after
/// limits.max_regular_attempts restarts.
Graph sample_regular(std::size_t n, std::size_t d, std::uint64_t seed, const Limits& limits = {});

/// Exact; CapacityError above limits.max_exact_alpha_vertices.
std::size_t independence_number(const Graph& g, const Limits& limits = {});

/// Size of a greedy independent set.
std::size_t independence_lower_bound(const Graph& g);

struct TrialRecord {
    std::uint64_t trial = 0;
    std::size_t delta = 0;
    std::size_t alpha = 0;
    bool alpha_exact = true;
    bool mms = true;
};

struct ExperimentReport {
    std::size_t n = 0;
    Rational p;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<TrialRecord> records;

    [[nodiscard]] Rational frequency() const;
    /// Minimum degree -> number of trials.
    [[nodiscard]] std::map<std::size_t, std::uint64_t> delta_histogram() const;
};

/// Trial i samples G(n, p) with derive_seed(seed, i) and runs check_mms_graph,
/// except that a graph with an isolated vertex is recorded as holding.
ExperimentReport mms_experiment(std::size_t n, std::uint64_t trials, const Rational& p, std::uint64_t seed,
                                const Limits& limits = {});

Json to_json(const ExperimentReport& report);
/// Header "trial,delta,alpha,alpha_exact,mms", one row per trial.
std::string to_csv(const ExperimentReport& report);

} // namespace mms

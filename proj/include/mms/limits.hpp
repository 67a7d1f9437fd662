#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace mms {

/// Work caps shared by the exhaustive procedures. Exceeding one raises CapacityError.
struct Limits {
    std::size_t max_graph_vertices = 24;      // check_mms_graph subset enumeration
    std::uint64_t max_lp_solves = 250'000;    // check_mms_lp simplex instances
    std::uint64_t max_exhaustive = 50'000'000; // (deleted set, vertex set) pairs, subset sums
    std::size_t max_lebensold_side = 20;      // |A| for lebensold_check
    std::uint64_t max_partitions = 10'000;    // enumerated set partitions
    std::uint64_t max_family_size = 1'000'000; // layered_partitions members
    std::uint64_t max_aux_vertices = 1'000'000;
    std::uint64_t max_conflict_unions = 20'000'000;
    std::size_t max_exact_alpha_vertices = 30;
    std::uint64_t max_regular_attempts = 100'000;
    std::uint64_t greedy_samples = 100'000;   // sampled partitions once enumeration is over budget

    /// Applies a single work budget to every enumeration cap.
    [[nodiscard]] Limits with_work_budget(std::uint64_t budget) const;

    /// Defaults, overridden by MMS_LAB_BUDGET when set to a positive integer.
    [[nodiscard]] static Limits from_environment();
};

} // namespace mms

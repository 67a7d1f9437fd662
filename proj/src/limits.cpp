#include "mms/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace mms {

Limits Limits::with_work_budget(std::uint64_t budget) const {
    Limits out = *this;
    out.max_lp_solves = budget;
    out.max_exhaustive = budget;
    out.max_partitions = budget;
    out.max_family_size = budget;
    out.max_aux_vertices = budget;
    out.max_conflict_unions = budget;
    return out;
}

Limits Limits::from_environment() {
    Limits out;
    const char* raw = std::getenv("MMS_LAB_BUDGET");
    if (raw == nullptr) return out;
    std::uint64_t budget = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, budget);
    if (ec == std::errc{} && ptr == end && budget > 0) return out.with_work_budget(budget);
    return out;
}

} // namespace mms

#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

namespace mms {

using Bitset = boost::dynamic_bitset<>;

/// Exact maximum independent set by branch and bound, bounding each branch
/// with a greedy clique cover of the remaining candidates. `adjacency[v]` is
/// the neighbourhood bitset of v (symmetric, no self loops). Returns the
/// vertices of one maximum independent set, increasing.
std::vector<std::size_t> maximum_independent_set(const std::vector<Bitset>& adjacency);

/// Greedy minimum-degree independent set; a lower bound on the independence number.
std::vector<std::size_t> greedy_independent_set(const std::vector<Bitset>& adjacency);

} // namespace mms

#pragma once

#include "mms/hypergraph.hpp"

#include <cstdint>
#include <vector>

namespace mms {

/// Modulus n and generators s_i. Valid when 0 < s_i < n and the s_i are distinct.
struct CirculantSpec {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> generators;
};

void validate(const CirculantSpec& spec);

/// Vertices Z_n; {i, j} is an edge iff i - j ≡ ±s for some generator s.
Graph build_circulant(const CirculantSpec& spec);

/// gcd(n, s_i) = 1 for every i and n does not divide s_i + s_j for i != j.
bool is_coprime_circulant(const CirculantSpec& spec);

/// min(l, n - l) for a residue 0 <= l < n.
std::uint64_t abs_mod(std::uint64_t l, std::uint64_t n);

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n);

/// For odd n and a coprime spec: true iff for every i the set
/// { |t_i^{-1} t_j mod n| : j } is not contained in {1, 3}. Equivalent to the
/// MMS property of the circulant. PreconditionError for even n or a non-coprime spec.
bool circulant_mms_criterion(const CirculantSpec& spec);

std::uint64_t euler_phi(std::uint64_t n);

/// Generators used by construct_regular_mms (sorted, contains 1).
std::vector<std::uint64_t> regular_mms_generators(std::uint64_t n, std::uint64_t d);

/// Connected d-regular circulant on n vertices with the MMS property, for odd n
/// with phi(n) >= 8 and even 4 <= d <= phi(n). For d = 2r >= 6 the generators are
/// the r smallest units up to n/2 (so 1 is among them); for d = 4 they are
/// {1, k} with k the smallest unit such that |k| is not 1 or 3 and |k^{-1}| != 3.
Graph construct_regular_mms(std::uint64_t n, std::uint64_t d);

} // namespace mms

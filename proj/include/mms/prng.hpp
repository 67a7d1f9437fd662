#pragma once

#include "mms/rational.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace mms {

/// Seeded generator with a fixed, platform-independent output stream.
///
/// The engine is std::mt19937_64 (its output sequence is fixed by the C++
/// standard). Distributions are implemented here rather than with <random>'s
/// distribution templates, whose algorithms are implementation-defined:
/// uniform_below uses rejection on the full 64-bit range.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t uniform_below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
    /// True with probability exactly p (0 <= p <= 1, numerator/denominator < 2^64).
    bool bernoulli(const Rational& p);

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[uniform_below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Per-trial seed: splitmix64(seed ^ splitmix64(index + 1)).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

std::uint64_t splitmix64(std::uint64_t x);

} // namespace mms

#include "mms/prng.hpp"

#include "mms/errors.hpp"

namespace mms {

std::uint64_t Prng::uniform_below(std::uint64_t bound) {
    if (bound == 0) throw PreconditionError("uniform_below: bound must be positive");
    // Values below 2^64 mod bound would bias the low residues.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x >= threshold) return x % bound;
    }
}

std::int64_t Prng::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw PreconditionError("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    return lo + static_cast<std::int64_t>(uniform_below(span));
}

bool Prng::bernoulli(const Rational& p) {
    if (sgn(p) < 0 || p > 1) throw PreconditionError("bernoulli: p must lie in [0,1]");
    const std::uint64_t num = to_u64(p.get_num());
    const std::uint64_t den = to_u64(p.get_den());
    return uniform_below(den) < num;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed ^ splitmix64(index + 1)); }

} // namespace mms

#include "mms/circulant.hpp"

#include "mms/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mms {

void validate(const CirculantSpec& spec) {
    if (spec.n == 0) throw ValidationError("circulant: n must be positive");
    std::vector<std::uint64_t> seen;
    for (auto s : spec.generators) {
        if (s == 0 || s >= spec.n) {
            throw ValidationError("circulant: generator " + std::to_string(s) + " outside (0, " + std::to_string(spec.n) + ")");
        }
        if (std::find(seen.begin(), seen.end(), s) != seen.end()) {
            throw ValidationError("circulant: repeated generator " + std::to_string(s));
        }
        seen.push_back(s);
    }
}

Graph build_circulant(const CirculantSpec& spec) {
    validate(spec);
    const auto n = spec.n;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::uint64_t i = 0; i < n; ++i) {
        for (auto s : spec.generators) {
            const auto j = (i + s) % n;
            edges.emplace_back(static_cast<Vertex>(std::min(i, j)), static_cast<Vertex>(std::max(i, j)));
        }
    }
    // s and n - s (and s = n/2 from both ends) produce the same edge twice.
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, edges);
}

bool is_coprime_circulant(const CirculantSpec& spec) {
    validate(spec);
    const auto& gens = spec.generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (std::gcd(spec.n, gens[i]) != 1) return false;
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if ((gens[i] + gens[j]) % spec.n == 0) return false;
        }
    }
    return true;
}

std::uint64_t abs_mod(std::uint64_t l, std::uint64_t n) {
    if (l >= n) throw PreconditionError("abs_mod: residue must lie in [0, n)");
    return std::min(l, n - l);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n) {
    std::int64_t r0 = static_cast<std::int64_t>(n), r1 = static_cast<std::int64_t>(a % n);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const auto q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0 != 1) throw PreconditionError(std::to_string(a) + " is not invertible modulo " + std::to_string(n));
    const auto m = static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(((t0 % m) + m) % m);
}

bool circulant_mms_criterion(const CirculantSpec& spec) {
    if (spec.n % 2 == 0) throw PreconditionError("circulant_mms_criterion: n must be odd");
    if (!is_coprime_circulant(spec)) throw PreconditionError("circulant_mms_criterion: spec is not coprime");
    const auto n = spec.n;
    // The residue 3 read through |.|; only differs from 3 when n = 5.
    const auto three = abs_mod(3 % n, n);
    for (auto ti : spec.generators) {
        const auto inv = mod_inverse(ti, n);
        const bool inside = std::all_of(spec.generators.begin(), spec.generators.end(), [&](std::uint64_t tj) {
            const auto a = abs_mod(static_cast<std::uint64_t>((static_cast<unsigned __int128>(inv) * tj) % n), n);
            return a == 1 || a == three;
        });
        if (inside) return false;
    }
    return true;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw PreconditionError("euler_phi: n must be positive");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::uint64_t> regular_mms_generators(std::uint64_t n, std::uint64_t d) {
    if (n % 2 == 0 || euler_phi(n) < 8 || d % 2 != 0 || d < 4 || d > euler_phi(n)) {
        throw PreconditionError("construct_regular_mms: need odd n, phi(n) >= 8, even d in [4, phi(n)]; got n=" +
                                std::to_string(n) + ", d=" + std::to_string(d));
    }
    const auto r = d / 2;
    std::vector<std::uint64_t> gens;
    if (r >= 3) {
        // Each pair {a, -a} of units has exactly one representative in [1, n/2].
        for (std::uint64_t u = 1; u <= n / 2 && gens.size() < r; ++u) {
            if (std::gcd(u, n) == 1) gens.push_back(u);
        }
    } else {
        for (std::uint64_t k = 2; k < n; ++k) {
            if (std::gcd(k, n) != 1) continue;
            const auto size = abs_mod(k, n);
            if (size == 1 || size == 3 || abs_mod(mod_inverse(k, n), n) == 3) continue;
            gens = {1, size};
            break;
        }
    }
    if (gens.size() != r) throw InternalError("construct_regular_mms: not enough units");
    return gens;
}

Graph construct_regular_mms(std::uint64_t n, std::uint64_t d) {
    const CirculantSpec spec{n, regular_mms_generators(n, d)};
    if (!is_coprime_circulant(spec) || !circulant_mms_criterion(spec)) {
        throw InternalError("construct_regular_mms: chosen generators fail the criterion");
    }
    Graph g = build_circulant(spec);
    if (!is_regular(g, d)) throw InternalError("construct_regular_mms: output is not regular");
    return g;
}

} // namespace mms

#include "mms/verify.hpp"

#include "mms/errors.hpp"
#include "mms/independent_set.hpp"
#include "mms/prng.hpp"
#include "mms/simplex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace mms {

namespace {

using Mask = std::uint64_t;

VertexSet mask_to_set(Mask mask) {
    VertexSet out;
    while (mask != 0) {
        out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

// Visits every k-subset of {0..n-1} in lexicographic order until `visit` returns false.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Neighbours of s reachable through edges not in `deleted`.
VertexSet surviving_neighbourhood(const Graph& g, const VertexSet& s, const EdgeSet& deleted) {
    std::vector<bool> in_s(g.vertex_count(), false);
    for (Vertex v : s) in_s[v] = true;
    VertexSet out;
    for (Vertex v : s) {
        for (Vertex w : g.neighbours(v)) {
            if (in_s[w] || deleted.contains(*g.edge_id(v, w))) continue;
            out.push_back(w);
        }
    }
    return make_vertex_set(std::move(out), g.vertex_count());
}

} // namespace

// ---------------------------------------------------------------------------
// Graph decision procedure

MmsVerdict check_mms_graph(const Graph& g, const Limits& limits) {
    const std::size_t n = g.vertex_count();
    const std::size_t delta = min_degree(g);
    if (delta == 0) return {};
    if (n > limits.max_graph_vertices || n > 63) {
        throw CapacityError("check_mms_graph: " + std::to_string(n) + " vertices exceeds the cap of " +
                            std::to_string(std::min<std::size_t>(limits.max_graph_vertices, 63)) +
                            "; use check_mms_random to falsify larger graphs");
    }
    std::vector<Mask> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e[0]] |= Mask{1} << e[1];
        adj[e[1]] |= Mask{1} << e[0];
    }

    std::size_t best_cost = delta; // only costs <= delta - 1 are of interest
    Mask best_set = 0;
    std::vector<std::size_t> into_s;
    for (std::size_t size = 1; size <= n && best_cost > 0; ++size) {
        for_each_combination(n, size, [&](const std::vector<std::size_t>& idx) {
            Mask s = 0;
            for (auto v : idx) s |= Mask{1} << v;
            std::size_t twice_internal = 0;
            Mask outside = 0;
            for (auto v : idx) {
                twice_internal += static_cast<std::size_t>(std::popcount(adj[v] & s));
                outside |= adj[v];
            }
            outside &= ~s;
            std::size_t cost = twice_internal / 2;
            if (cost >= best_cost) return true;
            const auto external = static_cast<std::size_t>(std::popcount(outside));
            if (external + 1 > size) {
                const std::size_t drop = external + 1 - size;
                into_s.clear();
                for (Mask rest = outside; rest != 0; rest &= rest - 1) {
                    into_s.push_back(static_cast<std::size_t>(std::popcount(adj[std::countr_zero(rest)] & s)));
                }
                std::partial_sort(into_s.begin(), into_s.begin() + static_cast<std::ptrdiff_t>(drop), into_s.end());
                cost += std::accumulate(into_s.begin(), into_s.begin() + static_cast<std::ptrdiff_t>(drop), std::size_t{0});
            }
            if (cost < best_cost) {
                best_cost = cost;
                best_set = s;
            }
            return best_cost > 0;
        });
    }
    if (best_set == 0) return {};

    // Rebuild E' for the winning set: its internal edges, then every edge into
    // the neighbours with the fewest edges into S (ties to the lower vertex).
    const VertexSet s = mask_to_set(best_set);
    std::vector<EdgeId> deleted;
    Mask outside = 0;
    for (Vertex v : s) outside |= adj[v];
    outside &= ~best_set;
    std::vector<std::pair<std::size_t, Vertex>> ranked;
    for (Vertex w : mask_to_set(outside)) {
        ranked.emplace_back(static_cast<std::size_t>(std::popcount(adj[w] & best_set)), w);
    }
    std::sort(ranked.begin(), ranked.end());
    const std::size_t drop = ranked.size() + 1 > s.size() ? ranked.size() + 1 - s.size() : 0;
    Mask dropped = 0;
    for (std::size_t i = 0; i < drop; ++i) dropped |= Mask{1} << ranked[i].second;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Mask ends = (Mask{1} << g.edge(id)[0]) | (Mask{1} << g.edge(id)[1]);
        const bool internal = (ends & best_set) == ends;
        const bool to_dropped = (ends & best_set) != 0 && (ends & dropped) != 0;
        if (internal || to_dropped) deleted.push_back(id);
    }
    EdgeSet deleted_set(g, std::move(deleted));
    if (deleted_set.size() != best_cost) throw InternalError("check_mms_graph: witness cost mismatch");
    Weighting f = witness_weighting(g, s, deleted_set);
    return {false, FailureWitness{std::move(deleted_set), s, std::move(f)}};
}

Weighting witness_weighting(const Graph& g, const VertexSet& s, const EdgeSet& deleted) {
    const std::size_t n = g.vertex_count();
    if (s.empty()) throw PreconditionError("witness_weighting: S must be nonempty");
    for (EdgeId id : deleted.ids()) {
        if (id >= g.edge_count()) throw PreconditionError("witness_weighting: deleted edge out of range");
    }
    const VertexSet set = make_vertex_set(s, n);
    if (deleted.size() + 1 > min_degree(g)) {
        throw PreconditionError("witness_weighting: |deleted| must be at most delta - 1");
    }
    if (!is_independent(g, set, deleted)) {
        throw PreconditionError("witness_weighting: S is not independent in G - deleted");
    }
    const VertexSet nbhd = surviving_neighbourhood(g, set, deleted);
    if (nbhd.size() >= set.size()) {
        throw PreconditionError("witness_weighting: S does not violate Hall's condition");
    }

    const Rational size_s(static_cast<long>(set.size()));
    const Rational size_v(static_cast<long>(n));
    if (nbhd.empty()) {
        Weighting f(n, Rational(-1) / size_v);
        for (Vertex v : set) f[v] = 1;
        return f;
    }
    const Rational size_n(static_cast<long>(nbhd.size()));
    const Rational eps = (size_s / size_n - 1) / 2;
    Weighting f(n, -eps / size_v);
    for (Vertex v : set) f[v] = 1;
    for (Vertex v : nbhd) f[v] = (eps - size_s) / size_n;
    return f;
}

// ---------------------------------------------------------------------------
// LP oracle

namespace {

class LpOracle {
public:
    LpOracle(const Hypergraph& h, const Limits& limits)
        : h_(h), limits_(limits), target_(min_degree(h) - 1) {}

    std::optional<Weighting> run() {
        Bitset chosen(h_.edge_count());
        Bitset forbidden(h_.edge_count());
        search(chosen, forbidden, 0);
        return std::move(witness_);
    }

private:
    // Explores deletion sets T containing `chosen` and avoiding `forbidden`.
    void search(Bitset& chosen, Bitset& forbidden, std::size_t size) {
        if (witness_) return;
        if (++nodes_ > limits_.max_exhaustive) throw CapacityError("check_mms_lp: search node budget exceeded");
        const Bitset* blocker = nullptr;
        std::size_t blocker_width = 0;
        for (const Bitset& c : certificates_) {
            if (c.intersects(chosen)) continue;
            const std::size_t width = (c - forbidden).count();
            if (blocker == nullptr || width < blocker_width) {
                blocker = &c;
                blocker_width = width;
            }
        }
        if (blocker == nullptr) {
            if (!solve(chosen)) return; // witness found
            blocker = &certificates_.back();
        }
        // Every T in this subtree avoiding the blocker's support is infeasible,
        // so T must take one of its edges: branch on them, excluding earlier picks.
        if (size == target_) return;
        const Bitset branch = *blocker - forbidden;
        std::vector<std::size_t> added;
        for (auto e = branch.find_first(); e != Bitset::npos; e = branch.find_next(e)) {
            chosen.set(e);
            search(chosen, forbidden, size + 1);
            chosen.reset(e);
            if (witness_) break;
            forbidden.set(e);
            added.push_back(e);
        }
        for (auto e : added) forbidden.reset(e);
    }

    // Decides one T. Returns true and stores a certificate when H - T has a
    // fractional perfect matching; otherwise stores the weighting and returns false.
    bool solve(const Bitset& deleted) {
        if (++solves_ > limits_.max_lp_solves) throw CapacityError("check_mms_lp: LP budget exceeded");
        const std::size_t n = h_.vertex_count();
        std::vector<EdgeId> columns;
        for (EdgeId e = 0; e < h_.edge_count(); ++e) {
            if (!deleted.test(e)) columns.push_back(e);
        }
        std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(columns.size(), 0));
        for (std::size_t j = 0; j < columns.size(); ++j) {
            for (Vertex v : h_.edge(columns[j])) rows[v][j] = 1;
        }
        const auto result = solve_equality_feasibility(rows, std::vector<Rational>(n, 1));

        if (result.feasible) {
            Bitset support(h_.edge_count());
            std::vector<Rational> load(n, 0);
            for (std::size_t j = 0; j < columns.size(); ++j) {
                if (sgn(result.solution[j]) < 0) throw InternalError("check_mms_lp: negative matching weight");
                if (sgn(result.solution[j]) == 0) continue;
                support.set(columns[j]);
                for (Vertex v : h_.edge(columns[j])) load[v] += result.solution[j];
            }
            for (const auto& x : load) {
                if (x != 1) throw InternalError("check_mms_lp: fractional matching certificate fails");
            }
            certificates_.push_back(std::move(support));
            return true;
        }

        // Farkas vector y: every surviving edge has y-sum <= 0 and sum(y) > 0.
        // Shifting by the mean makes the total 0 and every surviving edge
        // strictly negative; rescale so those edges sit at <= -1.
        const auto& y = result.farkas;
        Rational total = 0;
        for (const auto& x : y) total += x;
        const Rational k(static_cast<long>(h_.uniformity()));
        const Rational size_v(static_cast<long>(n));
        const Rational shift = total / size_v;
        const Rational scale = size_v / (k * total);
        Weighting f(n, 0);
        for (std::size_t v = 0; v < n; ++v) f[v] = (y[v] - shift) * scale;
        if (sgn(total) <= 0 || sgn(f.sum()) < 0) throw InternalError("check_mms_lp: invalid Farkas certificate");
        for (EdgeId e : columns) {
            if (edge_sum(h_, e, f) > -1) throw InternalError("check_mms_lp: weighting violates an edge constraint");
        }
        witness_ = std::move(f);
        return false;
    }

    const Hypergraph& h_;
    const Limits& limits_;
    std::size_t target_;
    std::vector<Bitset> certificates_;
    std::optional<Weighting> witness_;
    std::uint64_t solves_ = 0;
    std::uint64_t nodes_ = 0;
};

} // namespace

MmsVerdict check_mms_lp(const Hypergraph& h, const Limits& limits) {
    if (min_degree(h) == 0) return {};
    auto f = LpOracle(h, limits).run();
    if (!f) return {};
    std::vector<EdgeId> nonneg;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        if (sgn(edge_sum(h, e, *f)) >= 0) nonneg.push_back(e);
    }
    EdgeSet deleted(h, std::move(nonneg));
    if (deleted.size() >= min_degree(h)) throw InternalError("check_mms_lp: witness has too many nonnegative edges");
    return {false, FailureWitness{std::move(deleted), {}, std::move(*f)}};
}

// ---------------------------------------------------------------------------
// Randomized falsifier

std::optional<Weighting> check_mms_random(const Hypergraph& h, std::uint64_t trials, std::uint64_t seed) {
    const std::size_t n = h.vertex_count();
    const std::size_t delta = min_degree(h);
    if (delta == 0 || n == 0) return std::nullopt;
    Prng rng(seed);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    const Rational size_v(static_cast<long>(n));

    for (std::uint64_t t = 0; t < trials; ++t) {
        Weighting f(n, 0);
        switch (rng.uniform_below(3)) {
        case 0: { // one vertex at 1, the rest share -1
            const auto v = rng.uniform_below(n);
            for (std::size_t u = 0; u < n; ++u) f[u] = n == 1 ? Rational(0) : Rational(-1, static_cast<long>(n - 1));
            f[v] = n == 1 ? Rational(0) : Rational(1);
            break;
        }
        case 1: { // boundary pattern around a random small vertex set
            const std::size_t size = std::min<std::size_t>(n, 1 + rng.uniform_below(n / 2 + 1));
            rng.shuffle(std::span<Vertex>(order));
            std::vector<bool> in_s(n, false);
            for (std::size_t i = 0; i < size; ++i) in_s[order[i]] = true;
            std::vector<bool> in_n(n, false);
            std::size_t nbhd = 0;
            for (const Edge& e : h.edges()) {
                if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return in_s[v]; })) continue;
                for (Vertex v : e) {
                    if (!in_s[v] && !in_n[v]) {
                        in_n[v] = true;
                        ++nbhd;
                    }
                }
            }
            const Rational size_s(static_cast<long>(size));
            const Rational eps_choices[] = {Rational(1, 2), Rational(1, 8), Rational(1) / (2 * size_v)};
            const Rational eps = eps_choices[rng.uniform_below(3)];
            for (std::size_t v = 0; v < n; ++v) {
                if (in_s[v]) {
                    f[v] = 1;
                } else if (in_n[v]) {
                    f[v] = (eps - size_s) / Rational(static_cast<long>(nbhd));
                } else {
                    f[v] = nbhd == 0 ? Rational(-size_s / Rational(static_cast<long>(n - size))) : Rational(-eps / size_v);
                }
            }
            break;
        }
        default: { // random integers re-centred to total 0
            for (std::size_t v = 0; v < n; ++v) f[v] = rng.uniform_int(-10, 10);
            const Rational mean = f.sum() / size_v;
            for (std::size_t v = 0; v < n; ++v) f[v] -= mean;
            break;
        }
        }
        if (sgn(f.sum()) >= 0 && nonneg_edge_count(h, f) < delta) return f;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Pseudo-matchings

namespace {

class PseudoMatchingSearch {
public:
    PseudoMatchingSearch(const Hypergraph& h, std::vector<Bitset> edge_masks)
        : h_(h), masks_(std::move(edge_masks)) {}

    // `usable[e]` marks the edges of H - E'.
    std::optional<std::vector<EdgeId>> find(const Bitset& target, const std::vector<bool>& usable) {
        chosen_.clear();
        target_ = &target;
        usable_ = &usable;
        Bitset used_outside(h_.vertex_count());
        if (extend(target, used_outside)) return chosen_;
        return std::nullopt;
    }

private:
    bool extend(const Bitset& uncovered, const Bitset& used_outside) {
        const auto a = uncovered.find_first();
        if (a == Bitset::npos) return true;
        // Some edge must cover the lowest uncovered vertex; edges may overlap
        // only inside the target.
        for (EdgeId e : h_.incident_edges(static_cast<Vertex>(a))) {
            if (!(*usable_)[e]) continue;
            const Bitset outside = masks_[e] - *target_;
            if (outside.intersects(used_outside)) continue;
            chosen_.push_back(e);
            if (extend(uncovered - masks_[e], used_outside | outside)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const Hypergraph& h_;
    std::vector<Bitset> masks_;
    std::vector<EdgeId> chosen_;
    const Bitset* target_ = nullptr;
    const std::vector<bool>* usable_ = nullptr;
};

std::vector<Bitset> edge_masks(const Hypergraph& h) {
    std::vector<Bitset> out;
    out.reserve(h.edge_count());
    for (const Edge& e : h.edges()) {
        Bitset mask(h.vertex_count());
        for (Vertex v : e) mask.set(v);
        out.push_back(std::move(mask));
    }
    return out;
}

} // namespace

std::optional<PseudoMatching> find_pseudo_matching(const Hypergraph& h, const VertexSet& a, const EdgeSet& deleted) {
    const VertexSet target_set = make_vertex_set(a, h.vertex_count());
    Bitset target(h.vertex_count());
    for (Vertex v : target_set) target.set(v);
    std::vector<bool> usable(h.edge_count(), true);
    for (EdgeId e : deleted.ids()) {
        if (e >= h.edge_count()) throw ValidationError("deleted edge id out of range");
        usable[e] = false;
    }
    PseudoMatchingSearch search(h, edge_masks(h));
    auto found = search.find(target, usable);
    if (!found) return std::nullopt;
    std::sort(found->begin(), found->end());
    return PseudoMatching{std::move(*found)};
}

bool check_pseudo_matching_sufficient(const Hypergraph& h, const Limits& limits) {
    const std::size_t n = h.vertex_count();
    const std::size_t delta = min_degree(h);
    if (delta == 0) return true;
    if (n > 40) throw CapacityError("check_pseudo_matching_sufficient: too many vertices to enumerate");
    BigInt deletion_sets = 0;
    for (std::size_t j = 0; j < delta; ++j) deletion_sets += binomial(h.edge_count(), j);
    const BigInt work = deletion_sets * (BigInt(1) << static_cast<mp_bitcnt_t>(n));
    if (work > BigInt(std::to_string(limits.max_exhaustive))) {
        throw CapacityError("check_pseudo_matching_sufficient: " + work.get_str() + " cases exceed the budget");
    }

    std::vector<Mask> masks;
    for (const Edge& e : h.edges()) {
        Mask m = 0;
        for (Vertex v : e) m |= Mask{1} << v;
        masks.push_back(m);
    }
    PseudoMatchingSearch search(h, edge_masks(h));
    std::vector<bool> usable(h.edge_count(), true);
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;

    for (std::size_t j = 0; j < delta; ++j) {
        const bool ok = for_each_combination(h.edge_count(), j, [&](const std::vector<std::size_t>& removed) {
            std::fill(usable.begin(), usable.end(), true);
            for (auto e : removed) usable[e] = false;
            for (Mask a = 1; a <= all && a != 0; ++a) {
                bool independent = true;
                for (EdgeId e = 0; e < masks.size() && independent; ++e) {
                    if (usable[e] && (masks[e] & a) == masks[e]) independent = false;
                }
                if (!independent) continue;
                Bitset target(n);
                for (Vertex v : mask_to_set(a)) target.set(v);
                if (!search.find(target, usable)) return false;
            }
            return true;
        });
        if (!ok) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

Json to_json(const Hypergraph& host, const MmsVerdict& verdict) {
    Json doc = Json::object();
    doc["holds"] = verdict.holds;
    if (!verdict.witness) {
        doc["witness"] = nullptr;
        return doc;
    }
    const FailureWitness& w = *verdict.witness;
    Json deleted = Json::array();
    for (EdgeId e : w.deleted.ids()) deleted.push_back(host.edge(e));
    Json witness = Json::object();
    witness["deleted"] = std::move(deleted);
    witness["hall_set"] = w.hall_set;
    witness["weighting"] = to_json(w.weighting)["values"];
    doc["witness"] = std::move(witness);
    return doc;
}

} // namespace mms

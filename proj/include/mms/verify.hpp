#pragma once

#include "mms/hypergraph.hpp"
#include "mms/json_io.hpp"
#include "mms/limits.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mms {

/// Certificate that a hypergraph lacks the MMS property.
///
/// For graph verdicts `deleted` is the edge set E' and `hall_set` the set S that
/// is independent in G - E' with |N(S)| < |S|. Verdicts from the LP oracle leave
/// `hall_set` empty and put the weighting's nonnegative edges in `deleted`.
struct FailureWitness {
    EdgeSet deleted;
    VertexSet hall_set;
    Weighting weighting;
};

struct MmsVerdict {
    bool holds = true;
    std::optional<FailureWitness> witness; // present iff !holds
};

/// Edges pairwise meeting only inside a target set A, jointly covering A.
struct PseudoMatching {
    std::vector<EdgeId> edges;
};

/// Exact decision for graphs via Hall-violating sets.
///
/// G fails iff some nonempty S has cost(S) <= delta - 1, where cost(S) counts the
/// edges inside S plus the cheapest deletions that leave S fewer than |S|
/// outside neighbours (drop the neighbours with fewest edges into S). Subsets are
/// scanned by increasing size, lexicographically within a size; the witness is
/// the first minimum-cost set. Throws CapacityError above
/// limits.max_graph_vertices vertices.
MmsVerdict check_mms_graph(const Graph& g, const Limits& limits = {});

/// The failure weighting for a Hall-violating S in G - deleted: 1 on S,
/// (-|S| + eps) / |N(S)| on N(S), -eps / n elsewhere, eps = (|S|/|N(S)| - 1) / 2.
/// With N(S) empty: 1 on S and -1/n elsewhere. Throws PreconditionError unless S is
/// nonempty and independent in G - deleted, |N(S)| < |S| and |deleted| <= delta - 1.
Weighting witness_weighting(const Graph& g, const VertexSet& s, const EdgeSet& deleted);

/// Exact LP oracle for any uniform hypergraph.
///
/// H fails iff for some edge set T with |T| = delta - 1 there is f with sum f >= 0
/// and every edge outside T summing to <= -1. By Farkas' lemma that system is
/// infeasible exactly when H - T has a fractional perfect matching, so each T is
/// decided by one exact phase-one simplex that returns either the matching or f.
/// A matching found for T also rules out every T' avoiding its support, which
/// drives a branching search over T instead of plain enumeration.
/// Throws CapacityError after limits.max_lp_solves simplex runs.
MmsVerdict check_mms_lp(const Hypergraph& h, const Limits& limits = {});

/// One-sided randomized falsifier; deterministic for a given seed. A returned
/// weighting has sum >= 0 and fewer than delta nonnegative edges.
std::optional<Weighting> check_mms_random(const Hypergraph& h, std::uint64_t trials, std::uint64_t seed);

/// Exhaustive backtracking search in H - deleted for a pseudo-matching saturating `a`.
std::optional<PseudoMatching> find_pseudo_matching(const Hypergraph& h, const VertexSet& a, const EdgeSet& deleted);

/// True iff for every E' with |E'| <= delta - 1 every independent set of H - E'
/// has a saturating pseudo-matching there. Sufficient for the MMS property.
bool check_pseudo_matching_sufficient(const Hypergraph& h, const Limits& limits = {});

/// {"holds": bool, "witness": {"deleted": [[u,v],...], "hall_set": [...], "weighting": [...]} | null}
Json to_json(const Hypergraph& host, const MmsVerdict& verdict);

} // namespace mms

#include "mms/random.hpp"

#include "mms/errors.hpp"
#include "mms/independent_set.hpp"
#include "mms/prng.hpp"
#include "mms/verify.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace mms {

namespace {

std::vector<Bitset> adjacency_bitsets(const Graph& g) {
    std::vector<Bitset> adj(g.vertex_count(), Bitset(g.vertex_count()));
    for (const Edge& e : g.edges()) {
        adj[e[0]].set(e[1]);
        adj[e[1]].set(e[0]);
    }
    return adj;
}

Graph complement(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (!g.adjacent(i, j)) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

Graph configuration_model(std::size_t n, std::size_t d, Prng& rng, const Limits& limits) {
    std::vector<Vertex> points;
    points.reserve(n * d);
    for (std::size_t v = 0; v < n; ++v) points.insert(points.end(), d, static_cast<Vertex>(v));
    for (std::uint64_t attempt = 0; attempt < limits.max_regular_attempts; ++attempt) {
        rng.shuffle(std::span<Vertex>(points));
        std::set<std::pair<Vertex, Vertex>> edges;
        bool simple = true;
        for (std::size_t i = 0; simple && i < points.size(); i += 2) {
            Vertex a = points[i];
            Vertex b = points[i + 1];
            if (a == b) {
                simple = false;
                break;
            }
            if (a > b) std::swap(a, b);
            simple = edges.emplace(a, b).second;
        }
        if (simple) return Graph(n, std::vector<std::pair<Vertex, Vertex>>(edges.begin(), edges.end()));
    }
    throw CapacityError("sample_regular(" + std::to_string(n) + ", " + std::to_string(d) + "): no simple pairing in " +
                        std::to_string(limits.max_regular_attempts) + " attempts");
}

} // namespace

Graph sample_gnp(std::size_t n, const Rational& p, std::uint64_t seed) {
    if (p < 0 || p > 1) throw PreconditionError("sample_gnp: p must lie in [0, 1]");
    Prng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

Graph sample_regular(std::size_t n, std::size_t d, std::uint64_t seed, const Limits& limits) {
    if (d >= n && !(n == 0 && d == 0)) throw PreconditionError("sample_regular: need d < n");
    if ((n * d) % 2 != 0) throw PreconditionError("sample_regular: n * d must be even");
    Prng rng(seed);
    if (2 * d > n - 1) return complement(configuration_model(n, n - 1 - d, rng, limits));
    return configuration_model(n, d, rng, limits);
}

std::size_t independence_number(const Graph& g, const Limits& limits) {
    if (g.vertex_count() > limits.max_exact_alpha_vertices) {
        throw CapacityError("exact independence number limited to " + std::to_string(limits.max_exact_alpha_vertices) +
                            " vertices");
    }
    return maximum_independent_set(adjacency_bitsets(g)).size();
}

std::size_t independence_lower_bound(const Graph& g) { return greedy_independent_set(adjacency_bitsets(g)).size(); }

Rational ExperimentReport::frequency() const {
    if (records.empty()) return Rational(0);
    std::uint64_t holds = 0;
    for (const auto& r : records) holds += r.mms ? 1 : 0;
    Rational out(static_cast<unsigned long>(holds), static_cast<unsigned long>(records.size()));
    out.canonicalize();
    return out;
}

std::map<std::size_t, std::uint64_t> ExperimentReport::delta_histogram() const {
    std::map<std::size_t, std::uint64_t> out;
    for (const auto& r : records) ++out[r.delta];
    return out;
}

ExperimentReport mms_experiment(std::size_t n, std::uint64_t trials, const Rational& p, std::uint64_t seed,
                                const Limits& limits) {
    if (n > limits.max_graph_vertices) {
        throw CapacityError("mms_experiment: n = " + std::to_string(n) + " exceeds the graph check limit of " +
                            std::to_string(limits.max_graph_vertices));
    }
    ExperimentReport report{n, p, trials, seed, {}};
    report.records.reserve(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Graph g = sample_gnp(n, p, derive_seed(seed, t));
        TrialRecord rec;
        rec.trial = t;
        rec.delta = min_degree(g);
        rec.alpha_exact = n <= limits.max_exact_alpha_vertices;
        rec.alpha = rec.alpha_exact ? independence_number(g, limits) : independence_lower_bound(g);
        rec.mms = rec.delta == 0 || check_mms_graph(g, limits).holds;
        report.records.push_back(rec);
    }
    return report;
}

Json to_json(const ExperimentReport& report) {
    Json doc = Json::object();
    doc["n"] = report.n;
    doc["p"] = to_fraction_string(report.p);
    doc["trials"] = report.trials;
    doc["seed"] = report.seed;
    doc["frequency"] = to_fraction_string(report.frequency());
    Json histogram = Json::object();
    for (const auto& [delta, count] : report.delta_histogram()) histogram[std::to_string(delta)] = count;
    doc["delta_histogram"] = std::move(histogram);
    Json records = Json::array();
    for (const auto& r : report.records) {
        records.push_back(Json{{"trial", r.trial}, {"delta", r.delta}, {"alpha", r.alpha},
                               {"alpha_exact", r.alpha_exact}, {"mms", r.mms}});
    }
    doc["records"] = std::move(records);
    return doc;
}

std::string to_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "trial,delta,alpha,alpha_exact,mms\n";
    for (const auto& r : report.records) {
        out << r.trial << ',' << r.delta << ',' << r.alpha << ',' << (r.alpha_exact ? "true" : "false") << ','
            << (r.mms ? "true" : "false") << '\n';
    }
    return out.str();
}

} // namespace mms

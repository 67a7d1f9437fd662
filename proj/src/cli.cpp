#include "mms/cli.hpp"

#include "mms/circulant.hpp"
#include "mms/construct.hpp"
#include "mms/errors.hpp"
#include "mms/json_io.hpp"
#include "mms/partitions.hpp"
#include "mms/random.hpp"
#include "mms/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace mms::cli {

namespace {

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> budget;
    std::string out_path;

    [[nodiscard]] Limits limits() const {
        Limits base = Limits::from_environment();
        return budget ? base.with_work_budget(*budget) : base;
    }

    std::string read(const std::string& path) const {
        if (path == "-") {
            std::ostringstream buf;
            buf << in.rdbuf();
            return buf.str();
        }
        std::ifstream file(path);
        if (!file) throw ValidationError("cannot open " + path);
        std::ostringstream buf;
        buf << file.rdbuf();
        return buf.str();
    }

    void emit(const std::string& payload) const {
        if (out_path.empty()) {
            out << payload << '\n';
            return;
        }
        std::ofstream file(out_path);
        if (!file) throw ValidationError("cannot write " + out_path);
        file << payload << '\n';
    }

    void emit(const Json& doc) const { emit(doc.dump()); }
};

std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
            throw ValidationError("expected a comma-separated list of non-negative integers, got \"" + text + "\"");
        }
        out.push_back(std::stoull(item));
    }
    return out;
}

Json family_report(const PartitionFamily& family) {
    Json doc = to_json(family);
    return doc;
}

int check_mms(Context& ctx, const std::string& file, const std::string& method, std::uint64_t trials) {
    const Hypergraph h = parse_hypergraph(ctx.read(file));
    const Limits limits = ctx.limits();
    if (method == "graph") {
        const Graph g(h);
        const MmsVerdict verdict = check_mms_graph(g, limits);
        ctx.emit(to_json(g, verdict));
        return verdict.holds ? kSuccess : kNegative;
    }
    if (method == "lp") {
        const MmsVerdict verdict = check_mms_lp(h, limits);
        ctx.emit(to_json(h, verdict));
        return verdict.holds ? kSuccess : kNegative;
    }
    if (method == "fuzz") {
        const auto found = check_mms_random(h, trials, ctx.seed);
        Json doc = Json::object();
        doc["falsified"] = found.has_value();
        doc["weighting"] = found ? to_json(*found)["values"] : Json(nullptr);
        if (found) doc["nonnegative_edges"] = nonneg_edge_count(h, *found);
        ctx.emit(doc);
        return found ? kNegative : kSuccess;
    }
    const bool sufficient = check_pseudo_matching_sufficient(h, limits);
    ctx.emit(Json{{"pseudo_matching_sufficient", sufficient}});
    return sufficient ? kSuccess : kNegative;
}

Json circulant_report(const CirculantSpec& spec) {
    Json doc = Json::object();
    doc["n"] = spec.n;
    doc["generators"] = spec.generators;
    const bool coprime = is_coprime_circulant(spec);
    doc["coprime"] = coprime;
    if (coprime && spec.n % 2 == 1) {
        doc["criterion"] = circulant_mms_criterion(spec);
    } else {
        doc["criterion"] = nullptr;
    }
    return doc;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Context ctx{in, out, err, 0, std::nullopt, {}};
    std::function<int()> action;

    CLI::App app{"Exact tools for the MMS property of graphs and uniform hypergraphs", "mmslab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--seed", ctx.seed, "Seed for every randomized step");
    app.add_option("--budget", ctx.budget, "Work budget for exhaustive searches (overrides MMS_LAB_BUDGET)");
    app.add_option("--out", ctx.out_path, "Write the payload to this file instead of standard output");

    // check
    auto* check = app.add_subcommand("check", "Decide a property");
    check->require_subcommand(1);
    std::string mms_file;
    std::string method = "lp";
    std::uint64_t fuzz_trials = 10000;
    auto* check_mms_cmd = check->add_subcommand("mms", "Decide the MMS property of a hypergraph");
    check_mms_cmd->add_option("file", mms_file, "Hypergraph JSON, or - for standard input")->required();
    check_mms_cmd->add_option("--method", method, "graph | lp | fuzz | pseudo")
        ->check(CLI::IsMember({"graph", "lp", "fuzz", "pseudo"}));
    check_mms_cmd->add_option("--trials", fuzz_trials, "Weightings tried by --method fuzz");
    check_mms_cmd->callback([&] { action = [&] { return check_mms(ctx, mms_file, method, fuzz_trials); }; });

    CirculantSpec circ;
    std::string gens_text;
    auto* check_circ = check->add_subcommand("circulant", "Evaluate the coprime circulant criterion");
    check_circ->add_option("--n", circ.n, "Number of vertices")->required();
    check_circ->add_option("--gens", gens_text, "Generators, comma separated")->required();
    check_circ->callback([&] {
        action = [&] {
            circ.generators = parse_list(gens_text);
            validate(circ);
            const bool verdict = circulant_mms_criterion(circ);
            ctx.emit(circulant_report(circ));
            return verdict ? kSuccess : kNegative;
        };
    });

    // gen
    auto* gen = app.add_subcommand("gen", "Generate graphs and hypergraphs");
    gen->require_subcommand(1);
    auto* gen_circ = gen->add_subcommand("circulant", "Circulant graph; criterion report on standard error");
    gen_circ->add_option("--n", circ.n, "Number of vertices")->required();
    gen_circ->add_option("--gens", gens_text, "Generators, comma separated")->required();
    gen_circ->callback([&] {
        action = [&] {
            circ.generators = parse_list(gens_text);
            const Graph g = build_circulant(circ);
            ctx.err << circulant_report(circ).dump() << '\n';
            ctx.emit(to_json(g));
            return kSuccess;
        };
    });

    std::uint64_t reg_n = 0;
    std::uint64_t reg_d = 0;
    auto* gen_reg = gen->add_subcommand("regular-mms", "Connected d-regular circulant with the MMS property");
    gen_reg->add_option("--n", reg_n, "Odd number of vertices with phi(n) >= 8")->required();
    gen_reg->add_option("--d", reg_d, "Even degree, 4 <= d <= phi(n)")->required();
    gen_reg->callback([&] { action = [&] { ctx.emit(to_json(construct_regular_mms(reg_n, reg_d))); return kSuccess; }; });

    std::string blow_file;
    std::string blow_partition;
    std::size_t blow_m = 1;
    auto* gen_blow = gen->add_subcommand("blowout", "Replace each vertex by a class of m vertices");
    gen_blow->add_option("file", blow_file, "Hypergraph JSON, or - for standard input")->required();
    gen_blow->add_option("--m", blow_m, "Class size")->required();
    gen_blow->add_option("--partition", blow_partition, "JSON file {\"blocks\": [[...], ...]} giving the classes");
    gen_blow->callback([&] {
        action = [&] {
            const Hypergraph h = parse_hypergraph(ctx.read(blow_file));
            std::optional<BlockPartition> classes;
            if (!blow_partition.empty()) {
                const Json doc = parse_json_document(ctx.read(blow_partition));
                if (!doc.is_object() || !doc.contains("blocks")) throw ValidationError("partition: missing field \"blocks\"");
                classes = BlockPartition(blow_m, doc.at("blocks").get<std::vector<VertexSet>>());
            }
            ctx.emit(to_json(blowout(h, blow_m, classes)));
            return kSuccess;
        };
    });

    std::size_t ce_k = 1;
    auto* gen_ce = gen->add_subcommand("counterexample", "(2k+2)-regular graph on 4k+1 vertices without the MMS property");
    gen_ce->add_option("--k", ce_k, "Parameter k >= 1")->required();
    gen_ce->callback([&] { action = [&] { ctx.emit(to_json(counterexample_regular(ce_k))); return kSuccess; }; });

    std::vector<std::string> union_files;
    std::string union_family;
    auto* gen_union = gen->add_subcommand("union", "Edge-disjoint union; with --family, of blowouts over its members");
    gen_union->add_option("files", union_files, "Hypergraph JSON files")->required();
    gen_union->add_option("--family", union_family, "Partition family JSON; one graph per member");
    gen_union->callback([&] {
        action = [&] {
            std::vector<Hypergraph> parts;
            for (const auto& f : union_files) parts.push_back(parse_hypergraph(ctx.read(f)));
            if (union_family.empty()) {
                ctx.emit(to_json(edge_disjoint_union(parts)));
                return kSuccess;
            }
            const PartitionFamily family = parse_family(ctx.read(union_family));
            std::vector<Graph> graphs;
            for (const auto& h : parts) graphs.emplace_back(h);
            ctx.emit(to_json(blowout_union_from_family(family, graphs)));
            return kSuccess;
        };
    });

    // partitions
    auto* parts_cmd = app.add_subcommand("partitions", "Conflictless partition families");
    parts_cmd->require_subcommand(1);
    std::uint64_t prime = 3;
    std::size_t block_m = 2;
    auto* pp = parts_cmd->add_subcommand("prime", "binom(p, 2) conflictless pairings of [2p]");
    pp->add_option("--p", prime, "Odd prime")->required();
    pp->callback([&] { action = [&] { ctx.emit(family_report(prime_pairings(prime))); return kSuccess; }; });

    auto* pl = parts_cmd->add_subcommand("layered", "binom(p, 2)^(m-1) conflictless partitions of [pm]");
    pl->add_option("--p", prime, "Odd prime")->required();
    pl->add_option("--m", block_m, "Block size")->required();
    pl->callback([&] {
        action = [&] { ctx.emit(family_report(layered_partitions(prime, block_m, ctx.limits()))); return kSuccess; };
    });

    std::string family_file;
    std::size_t conflict_k = 2;
    auto* pv = parts_cmd->add_subcommand("verify", "Check that a family is conflictless");
    pv->add_option("file", family_file, "Family JSON, or - for standard input")->required();
    pv->add_option("--k", conflict_k, "Number of blocks per union");
    pv->callback([&] {
        action = [&] {
            const PartitionFamily family = parse_family(ctx.read(family_file));
            const bool ok = is_conflictless(family, conflict_k, ctx.limits());
            ctx.emit(Json{{"size", family.members.size()}, {"k", conflict_k}, {"conflictless", ok}});
            return ok ? kSuccess : kNegative;
        };
    });

    std::size_t mx_n = 0;
    std::size_t mx_m = 0;
    std::size_t mx_k = 2;
    bool exact = false;
    bool greedy = false;
    auto* pm = parts_cmd->add_subcommand("maxm", "Largest conflictless family: bound, exact value or greedy family");
    pm->add_option("--n", mx_n, "Blocks per partition")->required();
    pm->add_option("--m", mx_m, "Block size")->required();
    pm->add_option("--k", mx_k, "Blocks per union")->required();
    auto* exact_flag = pm->add_flag("--exact", exact, "Exact value by exhaustive search");
    pm->add_flag("--greedy", greedy, "Randomized greedy family (k = 2)")->excludes(exact_flag);
    pm->callback([&] {
        action = [&] {
            if (mx_k < 2 || mx_m == 0) throw PreconditionError("need k >= 2 and m >= 1");
            if (exact) {
                ctx.emit(std::to_string(maxm_bruteforce(mx_n, mx_m, mx_k, ctx.limits())));
                return kSuccess;
            }
            if (greedy) {
                if (mx_k != 2) throw PreconditionError("--greedy builds families for k = 2 only");
                const PartitionFamily family = greedy_conflictless(mx_n, mx_m, ctx.seed, ctx.limits());
                Json doc = Json::object();
                doc["size"] = family.members.size();
                doc["upper_bound"] = maxm_upper_bound(mx_n, mx_m, 2).get_str();
                doc["family"] = to_json(family);
                ctx.emit(doc);
                return kSuccess;
            }
            ctx.emit(maxm_upper_bound(mx_n, mx_m, mx_k).get_str());
            return kSuccess;
        };
    });

    // random
    auto* rnd = app.add_subcommand("random", "Random graph experiments");
    rnd->require_subcommand(1);
    std::size_t ex_n = 0;
    std::string ex_p;
    std::uint64_t ex_trials = 0;
    bool csv = false;
    auto* exp = rnd->add_subcommand("experiment", "MMS frequency of G(n, p)");
    exp->add_option("--n", ex_n, "Number of vertices")->required();
    exp->add_option("--p", ex_p, "Edge probability P/Q")->required();
    exp->add_option("--trials", ex_trials, "Number of samples")->required();
    exp->add_flag("--csv", csv, "CSV instead of JSON (implied by an --out path ending in .csv)");
    exp->callback([&] {
        action = [&] {
            const ExperimentReport report = mms_experiment(ex_n, ex_trials, parse_rational(ex_p), ctx.seed, ctx.limits());
            const bool as_csv = csv || (ctx.out_path.size() >= 4 && ctx.out_path.ends_with(".csv"));
            if (as_csv) {
                std::string text = to_csv(report);
                text.pop_back();
                ctx.emit(text);
            } else {
                ctx.emit(to_json(report));
            }
            return kSuccess;
        };
    });

    std::string witness_file;
    auto* wit = app.add_subcommand("witness", "Weighting showing that a graph lacks the MMS property");
    wit->add_option("file", witness_file, "Graph JSON, or - for standard input")->required();
    wit->callback([&] {
        action = [&] {
            const Graph g(parse_hypergraph(ctx.read(witness_file)));
            const MmsVerdict verdict = check_mms_graph(g, ctx.limits());
            if (verdict.holds) {
                ctx.err << "the graph has the MMS property; no witness exists\n";
                return kNegative;
            }
            ctx.emit(to_json(verdict.witness->weighting));
            return kSuccess;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    if (!action) {
        err << app.help();
        return kUsage;
    }
    try {
        return action();
    } catch (const CapacityError& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kCapacity;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 4;
    }
}

} // namespace mms::cli

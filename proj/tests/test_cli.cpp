#include "mms/cli.hpp"
#include "mms/partitions.hpp"
#include "mms/verify.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace mms;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return oracle::fixture_path(name + ".json"); }

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() / ("mmslab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                                                          ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    [[nodiscard]] std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

} // namespace

TEST(Cli, CheckMmsC5Graph) {
    const auto r = run({"check", "mms", fx("c5"), "--method", "graph"});
    EXPECT_EQ(r.code, 1);
    const Json doc = Json::parse(r.out);
    EXPECT_FALSE(doc["holds"].get<bool>());
    EXPECT_EQ(doc["witness"]["hall_set"], Json::parse("[0,1,3]"));
    const Weighting f = weighting_from_json(Json{{"values", doc["witness"]["weighting"]}});
    EXPECT_GE(f.sum(), 0);
    EXPECT_LT(oracle::count_nonneg(oracle::cycle(5), f), 2u);
}

TEST(Cli, CounterexamplePipesIntoCheck) {
    const auto gen = run({"gen", "counterexample", "--k", "2"});
    ASSERT_EQ(gen.code, 0);
    const Hypergraph h = parse_hypergraph(gen.out);
    EXPECT_EQ(h.vertex_count(), 9u);
    EXPECT_TRUE(is_regular(h, 6));
    EXPECT_EQ(run({"check", "mms", "-", "--method", "graph"}, gen.out).code, 1);
    EXPECT_EQ(run({"check", "mms", "-", "--method", "lp"}, gen.out).code, 1);
}

TEST(Cli, MaxmOutputs) {
    const auto exact = run({"partitions", "maxm", "--n", "2", "--m", "2", "--k", "2", "--exact"});
    EXPECT_EQ(exact.code, 0);
    EXPECT_EQ(exact.out, "1\n");
    EXPECT_EQ(run({"partitions", "maxm", "--n", "3", "--m", "2", "--k", "2"}).out, "5\n");
    EXPECT_EQ(run({"partitions", "maxm", "--n", "5", "--m", "2", "--k", "2"}).out, "21\n");

    const auto greedy = run({"partitions", "maxm", "--n", "3", "--m", "2", "--k", "2", "--greedy", "--seed", "4"});
    ASSERT_EQ(greedy.code, 0);
    const Json doc = Json::parse(greedy.out);
    EXPECT_EQ(doc["upper_bound"], "5");
    const auto family = family_from_json(doc["family"]);
    EXPECT_EQ(doc["size"].get<std::size_t>(), family.members.size());
    EXPECT_TRUE(is_conflictless(family, 2));
    EXPECT_EQ(run({"partitions", "maxm", "--n", "3", "--m", "2", "--k", "2", "--greedy", "--seed", "4"}).out, greedy.out);
    EXPECT_EQ(run({"partitions", "maxm", "--n", "3", "--m", "2", "--k", "2", "--exact", "--greedy"}).code, 2);
}

TEST(Cli, GraphAndLpAgreeOnFixtures) {
    for (const auto& name : oracle::fixture_names()) {
        const Hypergraph h = oracle::fixture(name);
        const auto lp = run({"check", "mms", fx(name), "--method", "lp"});
        ASSERT_TRUE(lp.code == 0 || lp.code == 1) << name << lp.err;
        if (h.uniformity() == 2) {
            const auto graph = run({"check", "mms", fx(name), "--method", "graph"});
            EXPECT_EQ(graph.code, lp.code) << name;
            EXPECT_EQ(graph.code == 0, oracle::graph_mms(Graph(h))) << name;
        } else {
            EXPECT_EQ(run({"check", "mms", fx(name), "--method", "graph"}).code, 2) << name;
        }
    }
    // Default method is the LP.
    EXPECT_EQ(run({"check", "mms", fx("k5")}).code, 1);
    EXPECT_EQ(run({"check", "mms", fx("cube")}).code, 0);
}

TEST(Cli, FuzzAndPseudo) {
    const auto fuzz = run({"check", "mms", fx("cube"), "--method", "fuzz", "--trials", "500", "--seed", "3"});
    EXPECT_EQ(fuzz.code, 0);
    EXPECT_FALSE(Json::parse(fuzz.out)["falsified"].get<bool>());

    const auto k5 = run({"check", "mms", fx("k5"), "--method", "fuzz", "--trials", "2000"});
    if (k5.code == 1) {
        const Json doc = Json::parse(k5.out);
        const Weighting f = weighting_from_json(Json{{"values", doc["weighting"]}});
        EXPECT_GE(f.sum(), 0);
        EXPECT_LT(doc["nonnegative_edges"].get<std::size_t>(), 4u);
    }

    const auto pseudo = run({"check", "mms", fx("k4_3"), "--method", "pseudo"});
    ASSERT_TRUE(pseudo.code == 0 || pseudo.code == 1) << pseudo.err;
    EXPECT_TRUE(Json::parse(pseudo.out).contains("pseudo_matching_sufficient"));
    EXPECT_EQ(run({"check", "mms", fx("c5"), "--method", "magic"}).code, 2);
}

TEST(Cli, Circulant) {
    const auto yes = run({"check", "circulant", "--n", "11", "--gens", "1,2,3"});
    EXPECT_EQ(yes.code, 0);
    EXPECT_TRUE(Json::parse(yes.out)["criterion"].get<bool>());
    EXPECT_EQ(run({"check", "circulant", "--n", "7", "--gens", "1,2"}).code, 1);
    EXPECT_EQ(run({"check", "circulant", "--n", "8", "--gens", "1,3"}).code, 2);
    EXPECT_EQ(run({"check", "circulant", "--n", "9", "--gens", "1,x"}).code, 2);

    const auto gen = run({"gen", "circulant", "--n", "11", "--gens", "1,3"});
    ASSERT_EQ(gen.code, 0);
    EXPECT_FALSE(Json::parse(gen.err)["criterion"].get<bool>());
    const Hypergraph g = parse_hypergraph(gen.out);
    EXPECT_TRUE(is_regular(g, 4));
    EXPECT_EQ(run({"check", "mms", "-", "--method", "graph"}, gen.out).code, 1);
}

TEST(Cli, GeneratedOutputsReparse) {
    TempDir dir;
    const auto reg = run({"gen", "regular-mms", "--n", "15", "--d", "4"});
    ASSERT_EQ(reg.code, 0);
    const Graph g(parse_hypergraph(reg.out));
    EXPECT_TRUE(is_regular(g, 4));
    EXPECT_EQ(run({"gen", "regular-mms", "--n", "9", "--d", "4"}).code, 2);

    const auto blow = run({"gen", "blowout", fx("c4"), "--m", "2"});
    ASSERT_EQ(blow.code, 0);
    EXPECT_EQ(parse_hypergraph(blow.out), oracle::fixture("c4_blowout2"));

    write(dir.file("classes.json"), R"({"blocks":[[0,1],[2,3],[4,5],[6,7]]})");
    const auto custom = run({"gen", "blowout", fx("c4"), "--m", "2", "--partition", dir.file("classes.json")});
    ASSERT_EQ(custom.code, 0);
    EXPECT_EQ(parse_hypergraph(custom.out).edge(0), (Edge{0, 1, 2, 3}));
    write(dir.file("bad.json"), R"({"blocks":[[0,1],[1,3],[4,5],[6,7]]})");
    EXPECT_EQ(run({"gen", "blowout", fx("c4"), "--m", "2", "--partition", dir.file("bad.json")}).code, 2);

    write(dir.file("m1.json"), R"({"n":4,"k":2,"edges":[[0,1],[2,3]]})");
    write(dir.file("m2.json"), R"({"n":4,"k":2,"edges":[[1,2],[0,3]]})");
    const auto uni = run({"gen", "union", dir.file("m1.json"), dir.file("m2.json")});
    ASSERT_EQ(uni.code, 0);
    EXPECT_EQ(parse_hypergraph(uni.out), static_cast<const Hypergraph&>(oracle::cycle(4)));
    EXPECT_EQ(run({"gen", "union", dir.file("m1.json"), dir.file("m1.json")}).code, 2);

    // The worked example through the family route: two pairings of [22] carrying K11 and C11^{1,2,3}.
    auto family = prime_pairings(11);
    family.members.resize(2);
    write(dir.file("family.json"), to_json(family).dump());
    write(dir.file("k11.json"), serialize(oracle::complete_graph(11)));
    write(dir.file("c11.json"), run({"gen", "circulant", "--n", "11", "--gens", "1,2,3"}).out);
    const auto ex = run({"gen", "union", dir.file("k11.json"), dir.file("c11.json"), "--family", dir.file("family.json")});
    ASSERT_EQ(ex.code, 0) << ex.err;
    const Hypergraph h = parse_hypergraph(ex.out);
    EXPECT_EQ(h.vertex_count(), 22u);
    EXPECT_EQ(h.uniformity(), 4u);
    EXPECT_TRUE(is_regular(h, 16));
}

TEST(Cli, PartitionFamilies) {
    const auto prime = run({"partitions", "prime", "--p", "5"});
    ASSERT_EQ(prime.code, 0);
    EXPECT_EQ(parse_family(prime.out).members.size(), 10u);
    const auto verify = run({"partitions", "verify", "-"}, prime.out);
    EXPECT_EQ(verify.code, 0);
    EXPECT_TRUE(Json::parse(verify.out)["conflictless"].get<bool>());

    const auto layered = run({"partitions", "layered", "--p", "3", "--m", "3"});
    ASSERT_EQ(layered.code, 0);
    EXPECT_EQ(parse_family(layered.out).members.size(), 9u);
    EXPECT_EQ(run({"partitions", "prime", "--p", "4"}).code, 2);

    const std::string clash = R"({"n":2,"m":2,"members":[[[0,1],[2,3]],[[0,2],[1,3]]]})";
    EXPECT_EQ(run({"partitions", "verify", "-"}, clash).code, 1);
    EXPECT_EQ(run({"partitions", "verify", "-", "--k", "3"}, prime.out).code, 0);
}

TEST(Cli, RandomExperiment) {
    TempDir dir;
    const auto json = run({"random", "experiment", "--n", "8", "--p", "1/2", "--trials", "5", "--seed", "9"});
    ASSERT_EQ(json.code, 0);
    const Json doc = Json::parse(json.out);
    EXPECT_EQ(doc["records"].size(), 5u);
    EXPECT_EQ(run({"random", "experiment", "--n", "8", "--p", "1/2", "--trials", "5", "--seed", "9"}).out, json.out);
    EXPECT_EQ(run({"--seed", "9", "random", "experiment", "--n", "8", "--p", "1/2", "--trials", "5"}).out, json.out);

    const auto csv = run({"random", "experiment", "--n", "8", "--p", "1/2", "--trials", "5", "--csv"});
    EXPECT_EQ(csv.out.rfind("trial,delta,alpha,alpha_exact,mms\n", 0), 0u);
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 6);

    const auto to_file = run({"random", "experiment", "--n", "8", "--p", "1/2", "--trials", "5", "--out", dir.file("r.csv")});
    EXPECT_EQ(to_file.code, 0);
    EXPECT_TRUE(to_file.out.empty());
    EXPECT_EQ(oracle::read_file(dir.file("r.csv")), csv.out);

    EXPECT_EQ(run({"random", "experiment", "--n", "8", "--p", "3/2", "--trials", "5"}).code, 2);
    EXPECT_EQ(run({"random", "experiment", "--n", "30", "--p", "1/2", "--trials", "1"}).code, 3);
}

TEST(Cli, Witness) {
    const auto c5 = run({"witness", fx("c5")});
    ASSERT_EQ(c5.code, 0);
    const Weighting f = parse_weighting(c5.out);
    EXPECT_GE(f.sum(), 0);
    EXPECT_LT(oracle::count_nonneg(oracle::cycle(5), f), 2u);

    const auto cube = run({"witness", fx("cube")});
    EXPECT_EQ(cube.code, 1);
    EXPECT_TRUE(cube.out.empty());
    EXPECT_FALSE(cube.err.empty());
}

TEST(Cli, OutFlagWritesFile) {
    TempDir dir;
    const auto r = run({"check", "mms", fx("c5"), "--method", "graph", "--out", dir.file("v.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(Json::parse(oracle::read_file(dir.file("v.json")))["holds"].get<bool>());
}

TEST(Cli, UsageAndBudgetErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"check"}).code, 2);
    EXPECT_EQ(run({"gen", "counterexample"}).code, 2);
    EXPECT_EQ(run({"check", "mms", "/nonexistent/graph.json"}).code, 2);
    EXPECT_EQ(run({"check", "mms", "-"}, "{not json").code, 2);
    EXPECT_EQ(run({"check", "mms", "-"}, R"({"n":3,"k":2,"edges":[[0,3]]})").code, 2);
    EXPECT_EQ(run({"gen", "counterexample", "--k", "0"}).code, 2);

    const auto help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("partitions"), std::string::npos);

    EXPECT_EQ(run({"--budget", "5", "check", "mms", fx("petersen"), "--method", "lp"}).code, 3);
    EXPECT_EQ(run({"--budget", "5", "partitions", "maxm", "--n", "4", "--m", "2", "--k", "2", "--exact"}).code, 3);
}

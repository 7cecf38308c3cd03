#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "cgclust/graph.hpp"

using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

const fs::path kScratch = "cli_scratch_unit";

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void spill(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    REQUIRE(out.good());
}

fs::path scratch_file(const std::string& name) {
    fs::create_directories(kScratch);
    return kScratch / name;
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_file("stdout_" + std::to_string(counter));
    const fs::path err = scratch_file("stderr_" + std::to_string(counter));
    ++counter;
    const std::string cmd = std::string("\"") + CGCLUST_BIN + "\" " + args +
                            " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

fs::path triangle_file() {
    const fs::path p = scratch_file("triangle.txt");
    spill(p, "0 1\n1 2\n0 2\n");
    return p;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

std::string drop_last_field(const std::string& line) {
    return line.substr(0, line.rfind(','));
}

}  // namespace

TEST_CASE("run greedy prints the report with stable keys and values") {
    const CliResult r =
        run_cli("run --input " + triangle_file().string() + " --algo greedy");
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out ==
          "{\n"
          "  \"kal\": 1,\n"
          "  \"cc\": 0.0,\n"
          "  \"cpl\": 0.3333333333333333,\n"
          "  \"cluster_count\": 2\n"
          "}\n");
}

TEST_CASE("run writes the report to a file when asked") {
    const fs::path report = scratch_file("report.json");
    const CliResult r = run_cli("run --input " + triangle_file().string() +
                                " --algo greedy --report " + report.string());
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(contains(slurp(report), "\"kal\": 1"));
}

TEST_CASE("run ga appends the seed metrics after the final ones") {
    const CliResult r = run_cli("run --input " + triangle_file().string() +
                                " --algo ga --seed 7");
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& item : doc.items()) keys.push_back(item.key());
    CHECK(keys == std::vector<std::string>{"kal", "cc", "cpl", "cluster_count",
                                           "seed_kal", "seed_cc", "seed_cpl",
                                           "seed_cluster_count"});
    CHECK(doc["seed_kal"] == 1);
    CHECK(doc["seed_cluster_count"] == 2);
    CHECK(doc["kal"].get<long long>() >= 1);
}

TEST_CASE("run ga writes a well-formed iteration trace") {
    const fs::path trace = scratch_file("trace.csv");
    const CliResult r = run_cli("run --gen 30,60 --seed 5 --algo ga --trace " +
                                trace.string());
    REQUIRE(r.code == 0);
    const auto lines = split_lines(slurp(trace));
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == "iteration,candidate_kappa,best_kappa,accepted");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_lines([&] {
            std::string s = lines[i];
            for (char& ch : s) {
                if (ch == ',') ch = '\n';
            }
            return s;
        }());
        REQUIRE(fields.size() == 4);
        CHECK(fields[0] == std::to_string(i));
        CHECK((fields[3] == "0" || fields[3] == "1"));
    }
}

TEST_CASE("run ga is byte-for-byte reproducible for a fixed seed") {
    const fs::path r1 = scratch_file("rep1.json");
    const fs::path r2 = scratch_file("rep2.json");
    const fs::path t1 = scratch_file("tr1.csv");
    const fs::path t2 = scratch_file("tr2.csv");
    const std::string base = "run --gen 30,60 --seed 11 --algo ga";
    CHECK(run_cli(base + " --report " + r1.string() + " --trace " + t1.string())
              .code == 0);
    CHECK(run_cli(base + " --report " + r2.string() + " --trace " + t2.string())
              .code == 0);
    CHECK(slurp(r1) == slurp(r2));
    CHECK(slurp(t1) == slurp(t2));
    CHECK_FALSE(slurp(t1).empty());
}

TEST_CASE("every emitted clustering passes the metrics validator") {
    for (const std::string algo : {"greedy", "ga", "mc"}) {
        const fs::path clusters = scratch_file("clusters_" + algo + ".json");
        const CliResult run = run_cli("run --gen 25,40 --seed 3 --algo " + algo +
                                      " --clusters " + clusters.string() +
                                      " --report /dev/null");
        REQUIRE(run.code == 0);
        const CliResult metrics = run_cli("metrics --gen 25,40 --seed 3 "
                                          "--clusters " +
                                          clusters.string());
        CHECK(metrics.code == 0);
        CHECK(contains(metrics.out, "\"kal\""));
    }
}

TEST_CASE("metrics reproduces the pinned hand-checked reports") {
    const fs::path single = scratch_file("single.json");
    spill(single, "[[0, 1, 2]]\n");
    const CliResult whole = run_cli("metrics --input " +
                                    triangle_file().string() + " --clusters " +
                                    single.string());
    REQUIRE(whole.code == 0);
    auto doc = json::parse(whole.out);
    CHECK(doc["kal"] == 4);
    CHECK(doc["cc"] == 1.0);
    CHECK(doc["cpl"] == 1.0);
    CHECK(doc["cluster_count"] == 1);

    const fs::path path_graph = scratch_file("path.txt");
    spill(path_graph, "0 1\n1 2\n");
    const fs::path singletons = scratch_file("singletons.json");
    spill(singletons, "[[0], [1], [2]]\n");
    const CliResult split = run_cli("metrics --input " + path_graph.string() +
                                    " --clusters " + singletons.string());
    REQUIRE(split.code == 0);
    doc = json::parse(split.out);
    CHECK(doc["kal"] == 1);
    CHECK(doc["cc"] == 0.0);
    CHECK(doc["cpl"] == 0.0);
    CHECK(doc["cluster_count"] == 3);
}

TEST_CASE("generate and --gen produce the same graph for the same seed") {
    const fs::path edges = scratch_file("generated.txt");
    const CliResult gen = run_cli("generate --n 14 --m 31 --seed 9 --out " +
                                  edges.string());
    REQUIRE(gen.code == 0);

    std::ifstream in(edges);
    const cgclust::Graph g = cgclust::load_edge_list(in);
    CHECK(g.vertex_count() == 14);
    CHECK(g.edge_count() == 31);

    const CliResult from_file =
        run_cli("run --input " + edges.string() + " --algo greedy");
    const CliResult from_gen = run_cli("run --gen 14,31 --seed 9 --algo greedy");
    REQUIRE(from_file.code == 0);
    REQUIRE(from_gen.code == 0);
    CHECK(from_file.out == from_gen.out);

    const CliResult to_stdout = run_cli("generate --n 14 --m 31 --seed 9");
    CHECK(to_stdout.out == slurp(edges));
}

TEST_CASE("omitting the seed samples one and reports it on stderr") {
    const CliResult run = run_cli("run --gen 10,20 --algo greedy");
    CHECK(run.code == 0);
    CHECK(contains(run.err, "seed: "));

    const CliResult gen = run_cli("generate --n 5 --m 4 --out /dev/null");
    CHECK(gen.code == 0);
    CHECK(contains(gen.err, "seed: "));

    // a greedy run on a file consumes no randomness, so no seed is sampled
    const CliResult file_run =
        run_cli("run --input " + triangle_file().string() + " --algo greedy");
    CHECK(file_run.err.empty());
}

TEST_CASE("usage problems exit 1") {
    CHECK(run_cli("").code == 1);
    CHECK(run_cli("frobnicate").code == 1);
    CHECK(run_cli("run --gen 5,4 --bogus").code == 1);
    CHECK(run_cli("--help").code == 0);

    const CliResult no_source = run_cli("run --algo greedy");
    CHECK(no_source.code == 1);
    CHECK(contains(no_source.err, "one of --input or --gen is required"));

    const std::string tri = triangle_file().string();
    CHECK(run_cli("run --input " + tri + " --gen 3,3").code == 1);
    CHECK(run_cli("run --gen 3,3 --seed 1 --algo bogus").code == 1);

    const CliResult greedy_eps =
        run_cli("run --input " + tri + " --algo greedy --epsilon 0.3");
    CHECK(greedy_eps.code == 1);
    CHECK(contains(greedy_eps.err, "--epsilon only applies to --algo ga"));

    const CliResult ga_trials =
        run_cli("run --input " + tri + " --algo ga --seed 1 --trials 5");
    CHECK(ga_trials.code == 1);
    CHECK(contains(ga_trials.err, "--trials only applies to --algo mc"));

    const CliResult bad_eps =
        run_cli("run --input " + tri + " --algo ga --seed 1 --epsilon 1.5");
    CHECK(bad_eps.code == 1);
    CHECK(contains(bad_eps.err, "--epsilon must be in [0, 1]"));

    const CliResult infeasible = run_cli("run --gen 5,100 --seed 1");
    CHECK(infeasible.code == 1);
    CHECK(contains(infeasible.err, "do not fit in a simple graph"));

    CHECK(run_cli("generate --n 5 --m 100 --seed 1 --out /dev/null").code == 1);
    CHECK(run_cli("metrics --gen 3,3 --seed 1").code == 1);
    CHECK(run_cli("compare --gen 5,4 --seed 1 --seeds ,").code == 1);
}

TEST_CASE("input problems exit 2") {
    const CliResult missing = run_cli("run --input no_such_file --algo greedy");
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "cannot open no_such_file"));

    const fs::path mangled = scratch_file("mangled.txt");
    spill(mangled, "0 1 2\n");
    const CliResult parse = run_cli("run --input " + mangled.string() +
                                    " --algo greedy");
    CHECK(parse.code == 2);
    CHECK(contains(parse.err, "line 1"));

    const fs::path overlap = scratch_file("overlap.json");
    spill(overlap, "[[0, 1], [1, 2]]\n");
    const CliResult bad_clusters =
        run_cli("metrics --input " + triangle_file().string() + " --clusters " +
                overlap.string());
    CHECK(bad_clusters.code == 2);
    CHECK(contains(bad_clusters.err, "vertex 1 appears in clusters 0 and 1"));

    const fs::path garbage = scratch_file("garbage.json");
    spill(garbage, "{not json\n");
    const CliResult bad_json =
        run_cli("metrics --input " + triangle_file().string() + " --clusters " +
                garbage.string());
    CHECK(bad_json.code == 2);
    CHECK(contains(bad_json.err, garbage.string()));
}

TEST_CASE("compare emits one deterministic row per algorithm and seed") {
    const fs::path c1 = scratch_file("cmp1.csv");
    const fs::path c2 = scratch_file("cmp2.csv");
    const std::string base =
        "compare --gen 20,35 --seed 4 --seeds 4,9 --trials 10 --out ";
    REQUIRE(run_cli(base + c1.string()).code == 0);
    REQUIRE(run_cli(base + c2.string()).code == 0);

    const auto lines = split_lines(slurp(c1));
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == "algorithm,seed,kal,cc,cpl,cluster_count,iterations,wall_ms");
    CHECK(lines[1].rfind("greedy,4,", 0) == 0);
    CHECK(lines[2].rfind("ga,4,", 0) == 0);
    CHECK(lines[3].rfind("mc,4,", 0) == 0);
    CHECK(lines[4].rfind("greedy,9,", 0) == 0);
    CHECK(lines[5].rfind("ga,9,", 0) == 0);
    CHECK(lines[6].rfind("mc,9,", 0) == 0);

    // wall time is the only field allowed to vary between runs
    const auto other = split_lines(slurp(c2));
    REQUIRE(other.size() == lines.size());
    for (std::size_t i = 1; i < lines.size(); ++i) {
        CHECK(drop_last_field(lines[i]) == drop_last_field(other[i]));
    }

    // the greedy row must agree with a standalone greedy run
    const CliResult greedy = run_cli("run --gen 20,35 --seed 4 --algo greedy");
    REQUIRE(greedy.code == 0);
    const auto report = json::parse(greedy.out);
    std::istringstream row(lines[1]);
    std::string field;
    std::getline(row, field, ',');
    std::getline(row, field, ',');
    std::getline(row, field, ',');
    CHECK(std::stoll(field) == report["kal"].get<long long>());
}

TEST_CASE("named graphs flow through run, clusters and metrics") {
    const fs::path named = scratch_file("named.txt");
    spill(named, "vertices 4\nalpha beta\nbeta gamma\ngamma delta\nalpha gamma\n");
    const fs::path clusters = scratch_file("named_clusters.json");

    const CliResult run = run_cli("run --input " + named.string() +
                                  " --algo greedy --clusters " +
                                  clusters.string());
    REQUIRE(run.code == 0);
    CHECK(contains(slurp(clusters), "\"alpha\""));

    const CliResult metrics = run_cli("metrics --input " + named.string() +
                                      " --clusters " + clusters.string());
    REQUIRE(metrics.code == 0);
    CHECK(metrics.out == run.out);
}

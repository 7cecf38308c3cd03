#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "cgclust/ga.hpp"
#include "cgclust/graph.hpp"
#include "cgclust/io.hpp"
#include "cgclust/metrics.hpp"
#include "cgclust/seeding.hpp"

namespace {

using namespace cgclust;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;

// mirrors the loader cap in graph.cpp
constexpr std::uint64_t kMaxVertices = 10'000'000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(const std::string& text, const char* what) {
    std::uint64_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw UsageError(std::string(what) +
                         ": expected a non-negative integer, got \"" + text +
                         "\"");
    }
    return value;
}

std::pair<std::uint64_t, std::uint64_t> parse_gen(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw UsageError("--gen expects n,m (for example --gen 166,450)");
    }
    const auto n = parse_u64(text.substr(0, comma), "--gen vertex count");
    const auto m = parse_u64(text.substr(comma + 1), "--gen edge count");
    return {n, m};
}

std::uint64_t sample_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return load_edge_list(in);
    } catch (const cgclust::ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Graph generate_graph(std::uint64_t n, std::uint64_t m, std::uint64_t seed) {
    if (n > kMaxVertices) {
        throw UsageError("vertex count exceeds " + std::to_string(kMaxVertices));
    }
    const std::uint64_t cap = n < 2 ? 0 : n * (n - 1) / 2;
    if (m > cap) {
        throw UsageError(std::to_string(m) +
                         " edges do not fit in a simple graph on " +
                         std::to_string(n) + " vertices");
    }
    Rng rng = Rng(seed).derive(1);
    return generate_random_graph(static_cast<VertexId>(n),
                                 static_cast<std::size_t>(m), rng);
}

struct GraphOpts {
    std::string input;
    std::string gen;
    std::uint64_t seed = 0;
    CLI::Option* input_opt = nullptr;
    CLI::Option* gen_opt = nullptr;
    CLI::Option* seed_opt = nullptr;

    bool gen_given() const { return gen_opt->count() > 0; }
    bool seed_given() const { return seed_opt->count() > 0; }
};

void add_graph_options(CLI::App* cmd, GraphOpts& o) {
    o.input_opt = cmd->add_option("--input", o.input, "edge-list file to load");
    o.gen_opt = cmd->add_option("--gen", o.gen,
                                "generate a uniform random graph instead, as n,m");
    o.input_opt->excludes(o.gen_opt);
    o.gen_opt->excludes(o.input_opt);
    o.seed_opt = cmd->add_option(
        "--seed", o.seed, "PRNG seed; sampled and printed to stderr when omitted");
}

void require_one_source(const GraphOpts& o) {
    if (o.input_opt->count() == 0 && o.gen_opt->count() == 0) {
        throw UsageError("one of --input or --gen is required");
    }
}

void resolve_seed(GraphOpts& o, bool consumes_randomness) {
    if (!o.seed_given() && consumes_randomness) {
        o.seed = sample_seed();
        std::fprintf(stderr, "seed: %llu\n",
                     static_cast<unsigned long long>(o.seed));
    }
}

Graph make_graph(const GraphOpts& o) {
    if (o.input_opt->count() > 0) return load_graph_file(o.input);
    const auto [n, m] = parse_gen(o.gen);
    return generate_graph(n, m, o.seed);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
    if (!out) throw InputError("short write to " + path);
}

struct RunOpts {
    GraphOpts graph;
    std::string algo = "ga";
    double epsilon = 0.1;
    int patience = 5;
    int max_iter = 10000;
    int trials = 100;
    std::string report_path;
    std::string trace_path;
    std::string clusters_path;
    CLI::Option* epsilon_opt = nullptr;
    CLI::Option* patience_opt = nullptr;
    CLI::Option* max_iter_opt = nullptr;
    CLI::Option* trials_opt = nullptr;
    CLI::Option* trace_opt = nullptr;
};

void check_ga_params(double epsilon, int patience, int max_iter, int trials) {
    if (epsilon < 0.0 || epsilon > 1.0) {
        throw UsageError("--epsilon must be in [0, 1]");
    }
    if (patience < 1) throw UsageError("--patience must be at least 1");
    if (max_iter < 1) throw UsageError("--max-iter must be at least 1");
    if (trials < 1) throw UsageError("--trials must be at least 1");
}

int do_run(RunOpts& o) {
    require_one_source(o.graph);
    if (o.algo != "ga") {
        for (const auto* opt :
             {o.epsilon_opt, o.patience_opt, o.max_iter_opt, o.trace_opt}) {
            if (opt->count() > 0) {
                throw UsageError(opt->get_name() + " only applies to --algo ga");
            }
        }
    }
    if (o.algo != "mc" && o.trials_opt->count() > 0) {
        throw UsageError("--trials only applies to --algo mc");
    }
    check_ga_params(o.epsilon, o.patience, o.max_iter, o.trials);

    resolve_seed(o.graph, o.graph.gen_given() || o.algo != "greedy");
    const Graph g = make_graph(o.graph);
    const Rng algo_rng = Rng(o.graph.seed).derive(2);

    Clustering clustering;
    nlohmann::ordered_json report;
    std::string trace_csv;
    if (o.algo == "greedy") {
        clustering = greedy_clustering(g);
        report = report_to_json(full_report(g, clustering));
    } else if (o.algo == "mc") {
        clustering = monte_carlo_clustering(
            g, static_cast<std::size_t>(o.trials), algo_rng);
        report = report_to_json(full_report(g, clustering));
    } else {
        const GAConfig config{o.epsilon, o.patience, o.max_iter,
                              algo_rng.seed()};
        GaResult result = run_ga(g, config);
        report = report_to_json(result.report);
        const MetricsReport seed = full_report(g, greedy_clustering(g));
        report["seed_kal"] = seed.kal;
        report["seed_cc"] = seed.cc;
        report["seed_cpl"] = seed.cpl;
        report["seed_cluster_count"] = seed.cluster_count;
        trace_csv = trace_to_csv(result.trace);
        clustering = std::move(result.clustering);
    }

    write_text(o.report_path, report.dump(2) + "\n");
    if (o.trace_opt->count() > 0) write_text(o.trace_path, trace_csv);
    if (!o.clusters_path.empty()) {
        write_text(o.clusters_path,
                   clustering_to_json(clustering, g).dump(2) + "\n");
    }
    return 0;
}

struct MetricsOpts {
    GraphOpts graph;
    std::string clusters_path;
    std::string report_path;
};

int do_metrics(MetricsOpts& o) {
    require_one_source(o.graph);
    resolve_seed(o.graph, o.graph.gen_given());
    const Graph g = make_graph(o.graph);

    std::ifstream in(o.clusters_path);
    if (!in) throw InputError("cannot open " + o.clusters_path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(o.clusters_path + ": " + e.what());
    }
    const Clustering c = clustering_from_json(doc, g);
    write_text(o.report_path, report_to_json(full_report(g, c)).dump(2) + "\n");
    return 0;
}

struct GenerateOpts {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t seed = 0;
    std::string out_path;
    CLI::Option* seed_opt = nullptr;
};

int do_generate(GenerateOpts& o) {
    if (o.seed_opt->count() == 0) {
        o.seed = sample_seed();
        std::fprintf(stderr, "seed: %llu\n",
                     static_cast<unsigned long long>(o.seed));
    }
    const Graph g = generate_graph(o.n, o.m, o.seed);
    std::ostringstream text;
    write_edge_list(g, text);
    write_text(o.out_path, text.str());
    return 0;
}

struct CompareOpts {
    GraphOpts graph;
    std::string seeds_text;
    double epsilon = 0.1;
    int patience = 5;
    int max_iter = 10000;
    int trials = 100;
    std::string out_path;
    CLI::Option* seeds_opt = nullptr;
};

struct CompareCell {
    MetricsReport report;
    std::uint64_t iterations = 0;
    double wall_ms = 0.0;
};

CompareCell run_cell(const Graph& g, const std::string& algo,
                     std::uint64_t seed, const GAConfig& ga_config,
                     std::size_t trials) {
    const auto start = std::chrono::steady_clock::now();
    CompareCell cell;
    if (algo == "greedy") {
        cell.report = full_report(g, greedy_clustering(g));
    } else if (algo == "ga") {
        GAConfig config = ga_config;
        config.seed = Rng(seed).derive(2).seed();
        const GaResult result = run_ga(g, config);
        cell.report = result.report;
        cell.iterations = result.trace.iterations.size();
    } else {
        Rng rng = Rng(seed).derive(2);
        cell.report = full_report(g, monte_carlo_clustering(g, trials, rng));
        cell.iterations = trials;
    }
    cell.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return cell;
}

int do_compare(CompareOpts& o) {
    require_one_source(o.graph);
    check_ga_params(o.epsilon, o.patience, o.max_iter, o.trials);
    resolve_seed(o.graph, true);
    const Graph g = make_graph(o.graph);

    std::vector<std::uint64_t> seeds;
    if (o.seeds_opt->count() > 0) {
        std::stringstream parts(o.seeds_text);
        for (std::string part; std::getline(parts, part, ',');) {
            seeds.push_back(parse_u64(part, "--seeds"));
        }
        if (seeds.empty()) throw UsageError("--seeds must list at least one seed");
    } else {
        seeds.push_back(o.graph.seed);
    }

    const GAConfig ga_config{o.epsilon, o.patience, o.max_iter, 0};
    const std::vector<std::string> algos = {"greedy", "ga", "mc"};
    const auto trials = static_cast<std::size_t>(o.trials);

    // cells are independent; rows come out in seed-list order regardless
    std::vector<std::future<CompareCell>> cells;
    for (const std::uint64_t s : seeds) {
        for (const auto& algo : algos) {
            cells.push_back(std::async(std::launch::async, [&g, &ga_config,
                                                            algo, s, trials] {
                return run_cell(g, algo, s, ga_config, trials);
            }));
        }
    }

    std::string csv = "algorithm,seed,kal,cc,cpl,cluster_count,iterations,wall_ms\n";
    std::size_t index = 0;
    char line[192];
    for (const std::uint64_t s : seeds) {
        for (const auto& algo : algos) {
            const CompareCell cell = cells[index++].get();
            std::snprintf(line, sizeof line, "%s,%llu,%lld,%.9g,%.9g,%zu,%llu,%.3f\n",
                          algo.c_str(), static_cast<unsigned long long>(s),
                          cell.report.kal, cell.report.cc, cell.report.cpl,
                          cell.report.cluster_count,
                          static_cast<unsigned long long>(cell.iterations),
                          cell.wall_ms);
            csv += line;
        }
    }
    write_text(o.out_path, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clustering toolkit for call graphs", "cgclust"};
    app.require_subcommand(1);

    RunOpts run_opts;
    auto* run_cmd =
        app.add_subcommand("run", "cluster a graph and report its metrics");
    add_graph_options(run_cmd, run_opts.graph);
    run_cmd->add_option("--algo", run_opts.algo, "algorithm: greedy, ga or mc")
        ->check(CLI::IsMember({"greedy", "ga", "mc"}))
        ->capture_default_str();
    run_opts.epsilon_opt =
        run_cmd->add_option("--epsilon", run_opts.epsilon,
                            "mutation probability (ga)")
            ->capture_default_str();
    run_opts.patience_opt =
        run_cmd->add_option("--patience", run_opts.patience,
                            "non-improving iterations before stopping (ga)")
            ->capture_default_str();
    run_opts.max_iter_opt =
        run_cmd->add_option("--max-iter", run_opts.max_iter,
                            "iteration cap (ga)")
            ->capture_default_str();
    run_opts.trials_opt =
        run_cmd->add_option("--trials", run_opts.trials,
                            "random partitions to draw (mc)")
            ->capture_default_str();
    run_cmd->add_option("--report", run_opts.report_path,
                        "write the report JSON here instead of stdout");
    run_opts.trace_opt = run_cmd->add_option(
        "--trace", run_opts.trace_path, "write the per-iteration CSV here (ga)");
    run_cmd->add_option("--clusters", run_opts.clusters_path,
                        "write the resulting clustering JSON here");

    MetricsOpts metrics_opts;
    auto* metrics_cmd = app.add_subcommand(
        "metrics", "score an existing clustering against a graph");
    add_graph_options(metrics_cmd, metrics_opts.graph);
    metrics_cmd
        ->add_option("--clusters", metrics_opts.clusters_path,
                     "clustering JSON to score")
        ->required();
    metrics_cmd->add_option("--report", metrics_opts.report_path,
                            "write the report JSON here instead of stdout");

    GenerateOpts generate_opts;
    auto* generate_cmd =
        app.add_subcommand("generate", "write a uniform random edge list");
    generate_cmd->add_option("--n", generate_opts.n, "vertex count")->required();
    generate_cmd->add_option("--m", generate_opts.m, "edge count")->required();
    generate_opts.seed_opt = generate_cmd->add_option(
        "--seed", generate_opts.seed,
        "PRNG seed; sampled and printed to stderr when omitted");
    generate_cmd->add_option("--out", generate_opts.out_path,
                             "output file instead of stdout");

    CompareOpts compare_opts;
    auto* compare_cmd = app.add_subcommand(
        "compare", "run greedy, ga and mc side by side, one CSV row each");
    add_graph_options(compare_cmd, compare_opts.graph);
    compare_opts.seeds_opt = compare_cmd->add_option(
        "--seeds", compare_opts.seeds_text,
        "comma-separated seeds, one row group per seed (default: --seed)");
    compare_cmd
        ->add_option("--epsilon", compare_opts.epsilon,
                     "mutation probability for the ga rows")
        ->capture_default_str();
    compare_cmd
        ->add_option("--patience", compare_opts.patience,
                     "ga stop patience")
        ->capture_default_str();
    compare_cmd
        ->add_option("--max-iter", compare_opts.max_iter, "ga iteration cap")
        ->capture_default_str();
    compare_cmd
        ->add_option("--trials", compare_opts.trials,
                     "random partitions for the mc rows")
        ->capture_default_str();
    compare_cmd->add_option("--out", compare_opts.out_path,
                            "output CSV file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (run_cmd->parsed()) return do_run(run_opts);
        if (metrics_cmd->parsed()) return do_metrics(metrics_opts);
        if (generate_cmd->parsed()) return do_generate(generate_opts);
        return do_compare(compare_opts);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

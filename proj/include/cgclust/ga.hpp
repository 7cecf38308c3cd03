#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cgclust/clustering.hpp"
#include "cgclust/graph.hpp"
#include "cgclust/metrics.hpp"
#include "cgclust/rng.hpp"

namespace cgclust {

struct GAConfig {
    double epsilon = 0.1;       // mutation probability, in [0, 1]
    int patience = 5;           // consecutive non-improving iterations before stopping
    int max_iterations = 10000; // hard cap; plateau drift alone never spins forever
    std::uint64_t seed = 0;     // root seed; order/crossover/mutation use derived streams
};

// One fitness value per cluster: intra-edge count plus the mean path length
// of the cluster's induced subgraph. All values are >= 0.
using FitnessList = std::vector<double>;

FitnessList cluster_fitness(const Clustering& c, const Graph& g);

// Cluster indices paired for crossover. Indices are distinct across pairs;
// with an odd cluster count the lowest-fitness index is left over and joins
// no pair.
struct PairList {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::optional<std::size_t> leftover;
};

// Sorts cluster indices by fitness descending (ties by ascending index) and
// pairs adjacent entries top-down.
PairList select_parent_pairs(const FitnessList& fitness);

// For each pair (a, b): removes the r1 highest-order vertices of cluster a
// and the r2 highest of cluster b, then swaps the two transit sets.
// r is drawn uniformly from [1, |C|-1] for clusters with >= 2 vertices and is
// 0 otherwise, so no cluster is ever emptied. Cluster count is preserved.
// Heads are not carried: an exchanged vertex may be a head, which would leave
// its cluster, so the result has none.
Clustering crossover(const Clustering& c, const PairList& pairs,
                     const VertexOrder& order, Rng& rng);

// Draws r in [0, 1); when r <= epsilon, swaps the order values of two
// distinct vertices from one uniformly chosen cluster with >= 2 members.
// The clustering itself is never modified. No-op when every cluster is a
// singleton.
VertexOrder mutate_order(const Clustering& c, const VertexOrder& order,
                         Rng& rng, double epsilon);

struct RunTrace {
    struct Iteration {
        int iteration;             // 1-based
        long long candidate_kappa;
        long long best_kappa;      // after this iteration; never decreases
        bool accepted;
    };

    std::vector<Iteration> iterations;
    long long seed_kappa = 0;
    long long final_kappa = 0;
};

struct GaResult {
    Clustering clustering;
    RunTrace trace;
    MetricsReport report;
};

// Called after every iteration with the trace record and the candidate of
// that iteration (accepted or not).
using GaObserver =
    std::function<void(const RunTrace::Iteration&, const Clustering&)>;

// Evolves the greedy seed: each iteration copies the current best, applies
// fitness -> parent pairing -> crossover -> order mutation, and accepts the
// candidate when its Kal score is >= the best so far. Stops when the best
// score has not strictly improved for `patience` consecutive iterations, or
// at max_iterations. The vertex order is created once up front and persists
// across iterations, including rejected ones. Throws on an empty graph.
GaResult run_ga(const Graph& g, const GAConfig& config);
GaResult run_ga(const Graph& g, const GAConfig& config,
                const GaObserver& observer);

struct BruteForceResult {
    Clustering clustering;
    long long kappa;
};

// Test oracle: enumerates every partition (or every partition with exactly
// fixed_k blocks) and returns one maximizing the Kal score. Partitions are
// enumerated as restricted growth strings in lexicographic order and the
// first maximum wins, which makes ties resolve to the smallest canonical
// form. Refuses graphs with more than 10 vertices.
BruteForceResult brute_force_optimal(
    const Graph& g, std::optional<std::size_t> fixed_k = std::nullopt);

}  // namespace cgclust

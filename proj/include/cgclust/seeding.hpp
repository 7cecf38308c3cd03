#pragma once

#include <cstdint>

#include "cgclust/clustering.hpp"
#include "cgclust/graph.hpp"
#include "cgclust/rng.hpp"

namespace cgclust {

// Deterministic seed heuristic. Produces exactly ceil(sqrt(n)) clusters:
// the highest-degree vertices become cluster heads (degree ties broken by
// ascending id), edges are scanned in sorted order assigning unassigned
// endpoints to their assigned neighbor's cluster, the scan repeats until it
// stops assigning, and any vertex still unassigned joins the currently
// smallest cluster. Empty graph yields an empty clustering.
Clustering greedy_clustering(const Graph& g);

// Baseline: repeated uniform random partitions keeping the best Kal score.
// Each trial draws a cluster count in [1, max_clusters], assigns every vertex
// uniformly and drops empty clusters. max_clusters 0 means ceil(2*sqrt(n)).
// Trials use independent streams derived from rng, so results are
// reproducible for a fixed seed.
Clustering monte_carlo_clustering(const Graph& g, std::size_t trials,
                                  const Rng& rng,
                                  std::uint32_t max_clusters = 0);

// Smallest k with k*k >= n.
std::uint32_t ceil_sqrt(std::uint64_t n);

}  // namespace cgclust

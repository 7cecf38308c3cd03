#pragma once

#include <cstdint>
#include <vector>

#include "cgclust/clustering.hpp"
#include "cgclust/graph.hpp"

namespace cgclust {

// Per-edge flags aligned with Graph::edges(); exactly one of intra/inter is
// set for every edge.
struct EdgeClassification {
    std::vector<std::uint8_t> intra;
    std::vector<std::uint8_t> inter;

    std::size_t intra_count() const;
    std::size_t inter_count() const;
};

// An edge is intra iff both endpoints share a cluster.
EdgeClassification classify_edges(const Graph& g, const Clustering& c);

// Kal score: intra-cluster edges - inter-cluster edges + cluster count.
long long kal_index(const Graph& g, const Clustering& c);

// Mean over all vertices of the local coefficient
// 2*|edges among neighbors| / (k*(k-1)), taken as 0 for degree <= 1.
// 0 for the empty graph.
double clustering_coefficient(const Graph& g);

// Mean BFS hop count over ordered vertex pairs, denominator N*(N-1);
// unreachable pairs contribute 0. 0 when N <= 1.
double characteristic_path_length(const Graph& g);

// Same vertex set as g, keeping exactly the intra-cluster edges.
Graph intra_edge_subgraph(const Graph& g, const Clustering& c);

struct MetricsReport {
    long long kal = 0;
    double cc = 0.0;
    double cpl = 0.0;
    std::size_t cluster_count = 0;
};

// kal on g itself; cc and cpl on the intra-edge subgraph, so they respond to
// the clustering while the input graph stays fixed.
MetricsReport full_report(const Graph& g, const Clustering& c);

}  // namespace cgclust

#include "cgclust/metrics.hpp"

#include <algorithm>
#include <numeric>

namespace cgclust {

namespace {

// owner[v] = index of the cluster containing v; caller guarantees validity.
std::vector<std::uint32_t> cluster_owner(const Graph& g, const Clustering& c) {
    std::vector<std::uint32_t> owner(g.vertex_count(), 0);
    for (std::size_t j = 0; j < c.clusters.size(); ++j) {
        for (VertexId v : c.clusters[j]) owner[v] = static_cast<std::uint32_t>(j);
    }
    return owner;
}

}  // namespace

std::size_t EdgeClassification::intra_count() const {
    return static_cast<std::size_t>(
        std::count(intra.begin(), intra.end(), std::uint8_t{1}));
}

std::size_t EdgeClassification::inter_count() const {
    return static_cast<std::size_t>(
        std::count(inter.begin(), inter.end(), std::uint8_t{1}));
}

EdgeClassification classify_edges(const Graph& g, const Clustering& c) {
    require_valid(c, g);
    auto owner = cluster_owner(g, c);
    EdgeClassification out;
    out.intra.reserve(g.edge_count());
    out.inter.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        bool same = owner[u] == owner[v];
        out.intra.push_back(same ? 1 : 0);
        out.inter.push_back(same ? 0 : 1);
    }
    return out;
}

long long kal_index(const Graph& g, const Clustering& c) {
    require_valid(c, g);
    auto owner = cluster_owner(g, c);
    long long intra = 0;
    for (auto [u, v] : g.edges()) {
        if (owner[u] == owner[v]) ++intra;
    }
    long long inter = static_cast<long long>(g.edge_count()) - intra;
    return intra - inter + static_cast<long long>(c.cluster_count());
}

double clustering_coefficient(const Graph& g) {
    const VertexId n = g.vertex_count();
    if (n == 0) return 0.0;
    double sum = 0.0;
    for (VertexId v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        const std::size_t k = nb.size();
        if (k <= 1) continue;  // local coefficient taken as 0
        std::size_t links = 0;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                if (g.has_edge(nb[i], nb[j])) ++links;
            }
        }
        sum += 2.0 * static_cast<double>(links) /
               (static_cast<double>(k) * static_cast<double>(k - 1));
    }
    return sum / static_cast<double>(n);
}

double characteristic_path_length(const Graph& g) {
    const VertexId n = g.vertex_count();
    if (n <= 1) return 0.0;
    std::uint64_t total_hops = 0;  // unreachable pairs contribute nothing
    std::vector<std::int64_t> dist;
    for (VertexId v = 0; v < n; ++v) {
        bfs_distances(g, v, dist);
        for (std::int64_t d : dist) {
            if (d > 0) total_hops += static_cast<std::uint64_t>(d);
        }
    }
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
    return static_cast<double>(total_hops) / pairs;
}

Graph intra_edge_subgraph(const Graph& g, const Clustering& c) {
    require_valid(c, g);
    auto owner = cluster_owner(g, c);
    std::vector<Edge> kept;
    for (auto [u, v] : g.edges()) {
        if (owner[u] == owner[v]) kept.emplace_back(u, v);
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            labels.push_back(g.label(v));
        }
    }
    return Graph(g.vertex_count(), std::move(kept), std::move(labels));
}

MetricsReport full_report(const Graph& g, const Clustering& c) {
    MetricsReport r;
    r.kal = kal_index(g, c);
    Graph intra = intra_edge_subgraph(g, c);
    r.cc = clustering_coefficient(intra);
    r.cpl = characteristic_path_length(intra);
    r.cluster_count = c.cluster_count();
    return r;
}

}  // namespace cgclust

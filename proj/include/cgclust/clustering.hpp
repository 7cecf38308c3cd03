#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgclust/graph.hpp"
#include "cgclust/rng.hpp"

namespace cgclust {

class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Partition of a graph's vertex set into disjoint, covering, non-empty
// clusters. Producers in this library keep cluster members sorted ascending.
struct Clustering {
    std::vector<std::vector<VertexId>> clusters;

    // One representative per cluster when set (greedy seeding records the
    // high-degree vertex each cluster grew from).
    std::optional<std::vector<VertexId>> heads;

    std::size_t cluster_count() const { return clusters.size(); }
};

struct ValidationIssue {
    std::string message;
};

// nullopt when c is a valid partition of g's vertices; otherwise the first
// violated invariant with the offending vertex/cluster.
std::optional<ValidationIssue> validate(const Clustering& c, const Graph& g);

// Throws ValidationError carrying the issue message.
void require_valid(const Clustering& c, const Graph& g);

// Bijection vertex -> order value; values form a permutation of 0..n-1.
struct VertexOrder {
    std::vector<std::uint32_t> rank;  // rank[v]

    std::size_t size() const { return rank.size(); }
};

// Uniformly random permutation assigned as order values.
VertexOrder random_order(std::size_t n, Rng& rng);

}  // namespace cgclust

#include "cgclust/clustering.hpp"

#include <numeric>

namespace cgclust {

std::optional<ValidationIssue> validate(const Clustering& c, const Graph& g) {
    const VertexId n = g.vertex_count();
    std::vector<std::int64_t> owner(n, -1);

    for (std::size_t j = 0; j < c.clusters.size(); ++j) {
        const auto& members = c.clusters[j];
        if (members.empty()) {
            return ValidationIssue{"cluster " + std::to_string(j) +
                                   " is empty"};
        }
        for (VertexId v : members) {
            if (v >= n) {
                return ValidationIssue{
                    "vertex " + std::to_string(v) + " in cluster " +
                    std::to_string(j) + " is out of range (vertex count " +
                    std::to_string(n) + ")"};
            }
            if (owner[v] >= 0) {
                if (static_cast<std::size_t>(owner[v]) == j) {
                    return ValidationIssue{"vertex " + std::to_string(v) +
                                           " appears twice in cluster " +
                                           std::to_string(j)};
                }
                return ValidationIssue{
                    "vertex " + std::to_string(v) + " appears in clusters " +
                    std::to_string(owner[v]) + " and " + std::to_string(j)};
            }
            owner[v] = static_cast<std::int64_t>(j);
        }
    }

    for (VertexId v = 0; v < n; ++v) {
        if (owner[v] < 0) {
            return ValidationIssue{"vertex " + std::to_string(v) +
                                   " is not covered by any cluster"};
        }
    }

    if (c.heads) {
        if (c.heads->size() != c.clusters.size()) {
            return ValidationIssue{
                "head count " + std::to_string(c.heads->size()) +
                " does not match cluster count " +
                std::to_string(c.clusters.size())};
        }
        for (std::size_t j = 0; j < c.heads->size(); ++j) {
            VertexId h = (*c.heads)[j];
            if (h >= n || owner[h] != static_cast<std::int64_t>(j)) {
                return ValidationIssue{"head " + std::to_string(h) +
                                       " of cluster " + std::to_string(j) +
                                       " is not one of its members"};
            }
        }
    }

    return std::nullopt;
}

void require_valid(const Clustering& c, const Graph& g) {
    if (auto issue = validate(c, g)) {
        throw ValidationError("invalid clustering: " + issue->message);
    }
}

VertexOrder random_order(std::size_t n, Rng& rng) {
    VertexOrder order;
    order.rank.resize(n);
    std::iota(order.rank.begin(), order.rank.end(), 0u);
    for (std::size_t i = n; i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(order.rank[i - 1], order.rank[j]);
    }
    return order;
}

}  // namespace cgclust

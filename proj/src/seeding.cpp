#include "cgclust/seeding.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numeric>

#include "cgclust/metrics.hpp"

namespace cgclust {

std::uint32_t ceil_sqrt(std::uint64_t n) {
    if (n == 0) return 0;
    auto k = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    while (k * k < n) ++k;
    while (k >= 1 && (k - 1) * (k - 1) >= n) --k;
    return static_cast<std::uint32_t>(k);
}

Clustering greedy_clustering(const Graph& g) {
    const VertexId n = g.vertex_count();
    if (n == 0) return {};

    const std::uint32_t k = ceil_sqrt(n);

    // heads: k highest-degree vertices, degree ties by ascending id
    std::vector<VertexId> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0u);
    std::sort(by_degree.begin(), by_degree.end(), [&](VertexId a, VertexId b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    std::vector<std::int64_t> owner(n, -1);
    std::vector<VertexId> heads(by_degree.begin(), by_degree.begin() + k);
    for (std::uint32_t j = 0; j < k; ++j) owner[heads[j]] = j;

    // scan edges in sorted order, pulling unassigned endpoints into their
    // assigned neighbor's cluster; repeat until a pass assigns nothing
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [u, v] : g.edges()) {
            if (owner[u] >= 0 && owner[v] < 0) {
                owner[v] = owner[u];
                changed = true;
            } else if (owner[u] < 0 && owner[v] >= 0) {
                owner[u] = owner[v];
                changed = true;
            }
        }
    }

    // vertices the scan never reached join the currently smallest cluster
    std::vector<std::size_t> size(k, 1);  // each cluster holds its head
    for (VertexId v = 0; v < n; ++v) {
        if (owner[v] >= 0 && v != heads[static_cast<std::size_t>(owner[v])]) {
            ++size[static_cast<std::size_t>(owner[v])];
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (owner[v] >= 0) continue;
        std::size_t target = 0;
        for (std::size_t j = 1; j < k; ++j) {
            if (size[j] < size[target]) target = j;
        }
        owner[v] = static_cast<std::int64_t>(target);
        ++size[target];
    }

    Clustering c;
    c.clusters.assign(k, {});
    for (VertexId v = 0; v < n; ++v) {
        c.clusters[static_cast<std::size_t>(owner[v])].push_back(v);
    }
    c.heads = std::move(heads);
    return c;
}

Clustering monte_carlo_clustering(const Graph& g, std::size_t trials,
                                  const Rng& rng, std::uint32_t max_clusters) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const VertexId n = g.vertex_count();
    if (n == 0) return {};

    // ceil(2*sqrt(n)) == ceil(sqrt(4n))
    const std::uint32_t kmax =
        max_clusters > 0 ? max_clusters
                         : std::max(1u, ceil_sqrt(4ull * n));

    Clustering best;
    long long best_kappa = LLONG_MIN;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Rng trial_rng = rng.derive(trial);
        const std::uint64_t k = 1 + trial_rng.below(kmax);

        std::vector<std::uint64_t> assignment(n);
        for (VertexId v = 0; v < n; ++v) assignment[v] = trial_rng.below(k);

        // drop empty clusters, keeping the original draw order of the rest
        std::vector<std::int64_t> remap(k, -1);
        Clustering c;
        for (VertexId v = 0; v < n; ++v) {
            auto& slot = remap[assignment[v]];
            if (slot < 0) {
                slot = static_cast<std::int64_t>(c.clusters.size());
                c.clusters.emplace_back();
            }
            c.clusters[static_cast<std::size_t>(slot)].push_back(v);
        }

        long long kappa = kal_index(g, c);
        if (kappa > best_kappa) {
            best_kappa = kappa;
            best = std::move(c);
        }
    }
    return best;
}

}  // namespace cgclust

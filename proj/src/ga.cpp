#include "cgclust/ga.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "cgclust/seeding.hpp"

namespace cgclust {

FitnessList cluster_fitness(const Clustering& c, const Graph& g) {
    require_valid(c, g);
    FitnessList fitness;
    fitness.reserve(c.cluster_count());
    for (const auto& members : c.clusters) {
        auto sub = induced_subgraph(g, members);
        fitness.push_back(static_cast<double>(sub.graph.edge_count()) +
                          characteristic_path_length(sub.graph));
    }
    return fitness;
}

PairList select_parent_pairs(const FitnessList& fitness) {
    std::vector<std::size_t> order(fitness.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (fitness[a] != fitness[b]) return fitness[a] > fitness[b];
        return a < b;
    });

    PairList out;
    std::size_t i = 0;
    for (; i + 1 < order.size(); i += 2) {
        out.pairs.emplace_back(order[i], order[i + 1]);
    }
    if (i < order.size()) out.leftover = order[i];
    return out;
}

namespace {

// Splits members into (kept, transit): transit holds the r members with the
// highest order values. Both outputs are sorted by vertex id.
void split_by_order(const std::vector<VertexId>& members,
                    const VertexOrder& order, std::uint64_t r,
                    std::vector<VertexId>& kept,
                    std::vector<VertexId>& transit) {
    std::vector<VertexId> by_rank(members);
    std::sort(by_rank.begin(), by_rank.end(), [&](VertexId a, VertexId b) {
        return order.rank[a] > order.rank[b];
    });
    transit.assign(by_rank.begin(), by_rank.begin() + static_cast<std::ptrdiff_t>(r));
    kept.assign(by_rank.begin() + static_cast<std::ptrdiff_t>(r), by_rank.end());
    std::sort(transit.begin(), transit.end());
    std::sort(kept.begin(), kept.end());
}

void check_order_covers(const Clustering& c, const VertexOrder& order) {
    for (const auto& members : c.clusters) {
        for (VertexId v : members) {
            if (v >= order.size()) {
                throw ValidationError(
                    "vertex order does not cover vertex " + std::to_string(v));
            }
        }
    }
}

}  // namespace

Clustering crossover(const Clustering& c, const PairList& pairs,
                     const VertexOrder& order, Rng& rng) {
    const std::size_t k = c.cluster_count();
    std::vector<char> used(k, 0);
    auto take_index = [&](std::size_t idx) {
        if (idx >= k) {
            throw ValidationError("pair index " + std::to_string(idx) +
                                  " out of range (cluster count " +
                                  std::to_string(k) + ")");
        }
        if (used[idx]) {
            throw ValidationError("pair index " + std::to_string(idx) +
                                  " used more than once");
        }
        used[idx] = 1;
    };
    for (auto [a, b] : pairs.pairs) {
        take_index(a);
        take_index(b);
    }
    if (pairs.leftover) take_index(*pairs.leftover);
    check_order_covers(c, order);

    Clustering out = c;
    out.heads.reset();  // a transferred vertex may be a head
    for (auto [a, b] : pairs.pairs) {
        auto& ca = out.clusters[a];
        auto& cb = out.clusters[b];
        const std::uint64_t r1 = ca.size() >= 2 ? rng.range(1, ca.size() - 1) : 0;
        const std::uint64_t r2 = cb.size() >= 2 ? rng.range(1, cb.size() - 1) : 0;

        std::vector<VertexId> kept_a, transit_a, kept_b, transit_b;
        split_by_order(ca, order, r1, kept_a, transit_a);
        split_by_order(cb, order, r2, kept_b, transit_b);

        ca.clear();
        std::merge(kept_a.begin(), kept_a.end(), transit_b.begin(),
                   transit_b.end(), std::back_inserter(ca));
        cb.clear();
        std::merge(kept_b.begin(), kept_b.end(), transit_a.begin(),
                   transit_a.end(), std::back_inserter(cb));
    }
    return out;
}

VertexOrder mutate_order(const Clustering& c, const VertexOrder& order,
                         Rng& rng, double epsilon) {
    check_order_covers(c, order);
    VertexOrder out = order;
    const double r = rng.real01();
    if (r > epsilon) return out;

    std::vector<std::size_t> eligible;
    for (std::size_t j = 0; j < c.cluster_count(); ++j) {
        if (c.clusters[j].size() >= 2) eligible.push_back(j);
    }
    if (eligible.empty()) return out;

    const auto& members =
        c.clusters[eligible[static_cast<std::size_t>(rng.below(eligible.size()))]];
    const std::size_t i = static_cast<std::size_t>(rng.below(members.size()));
    std::size_t j = static_cast<std::size_t>(rng.below(members.size() - 1));
    if (j >= i) ++j;
    std::swap(out.rank[members[i]], out.rank[members[j]]);
    return out;
}

GaResult run_ga(const Graph& g, const GAConfig& config) {
    return run_ga(g, config, GaObserver{});
}

GaResult run_ga(const Graph& g, const GAConfig& config,
                const GaObserver& observer) {
    if (config.epsilon < 0.0 || config.epsilon > 1.0) {
        throw std::invalid_argument("epsilon must be in [0, 1]");
    }
    if (config.patience < 1) throw std::invalid_argument("patience must be >= 1");
    if (config.max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be >= 1");
    }
    if (g.vertex_count() == 0) {
        throw std::invalid_argument("cannot run on an empty graph");
    }

    Rng root(config.seed);
    Rng order_rng = root.derive(0);
    Rng crossover_rng = root.derive(1);
    Rng mutation_rng = root.derive(2);

    VertexOrder order = random_order(g.vertex_count(), order_rng);
    Clustering best = greedy_clustering(g);
    best.heads.reset();  // candidates carry no heads; crossover may move them
    long long best_kappa = kal_index(g, best);

    RunTrace trace;
    trace.seed_kappa = best_kappa;

    int stagnant = 0;
    for (int iter = 1; iter <= config.max_iterations && stagnant < config.patience;
         ++iter) {
        Clustering candidate = best;
        FitnessList fitness = cluster_fitness(candidate, g);
        PairList pairs = select_parent_pairs(fitness);
        candidate = crossover(candidate, pairs, order, crossover_rng);
        order = mutate_order(candidate, order, mutation_rng, config.epsilon);

        const long long kappa = kal_index(g, candidate);
        const bool improved = kappa > best_kappa;
        const bool accepted = kappa >= best_kappa;
        stagnant = improved ? 0 : stagnant + 1;

        if (accepted) best_kappa = kappa;
        trace.iterations.push_back({iter, kappa, best_kappa, accepted});
        if (observer) observer(trace.iterations.back(), candidate);
        if (accepted) best = std::move(candidate);
    }

    trace.final_kappa = best_kappa;
    return {best, std::move(trace), full_report(g, best)};
}

BruteForceResult brute_force_optimal(const Graph& g,
                                     std::optional<std::size_t> fixed_k) {
    const VertexId n = g.vertex_count();
    if (n > 10) {
        throw std::invalid_argument(
            "partition enumeration is limited to 10 vertices");
    }
    if (n == 0) {
        if (fixed_k && *fixed_k > 0) {
            throw std::invalid_argument(
                "empty graph has no partition with that many blocks");
        }
        return {Clustering{}, 0};
    }
    if (fixed_k && (*fixed_k < 1 || *fixed_k > n)) {
        throw std::invalid_argument("fixed_k out of range");
    }

    const long long m = static_cast<long long>(g.edge_count());
    std::vector<std::uint32_t> assignment(n, 0);
    std::vector<std::uint32_t> best_assignment;
    long long best_kappa = LLONG_MIN;
    std::uint32_t best_k = 0;

    // restricted growth strings in lexicographic order; first maximum wins
    auto evaluate = [&](std::uint32_t k) {
        if (fixed_k && k != *fixed_k) return;
        long long intra = 0;
        for (auto [u, v] : g.edges()) {
            if (assignment[u] == assignment[v]) ++intra;
        }
        const long long kappa = 2 * intra - m + static_cast<long long>(k);
        if (kappa > best_kappa) {
            best_kappa = kappa;
            best_assignment = assignment;
            best_k = k;
        }
    };

    auto recurse = [&](auto&& self, VertexId i, std::uint32_t blocks) -> void {
        if (i == n) {
            evaluate(blocks);
            return;
        }
        for (std::uint32_t b = 0; b <= blocks; ++b) {
            assignment[i] = b;
            self(self, i + 1, std::max(blocks, b + 1));
        }
    };
    assignment[0] = 0;
    recurse(recurse, 1, 1);

    Clustering best;
    best.clusters.assign(best_k, {});
    for (VertexId v = 0; v < n; ++v) {
        best.clusters[best_assignment[v]].push_back(v);
    }
    return {std::move(best), best_kappa};
}

}  // namespace cgclust

#include "cgclust/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace cgclust {

namespace {

// Guards against a stray huge id allocating gigabytes of adjacency lists.
constexpr std::uint64_t kMaxVertexCount = 10'000'000;

bool is_nonneg_integer(const std::string& tok) {
    if (tok.empty()) return false;
    for (char ch : tok) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

bool is_negative_integer(const std::string& tok) {
    return tok.size() >= 2 && tok[0] == '-' &&
           is_nonneg_integer(tok.substr(1));
}

std::uint64_t parse_count(const std::string& tok, std::size_t line,
                          const char* what) {
    if (!is_nonneg_integer(tok)) {
        throw ParseError(std::string(what) + " '" + tok +
                             "' is not a non-negative integer",
                         line);
    }
    if (tok.size() > 18) {
        throw ParseError(std::string(what) + " '" + tok + "' is too large",
                         line);
    }
    return std::stoull(tok);
}

}  // namespace

Graph::Graph(VertexId vertex_count, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : n_(vertex_count), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != n_) {
        throw std::invalid_argument("label count does not match vertex count");
    }
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n_ || v >= n_) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) continue;  // simple graph: drop self-loops
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.resize(n_);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    if (v >= n_) throw std::invalid_argument("vertex out of range");
    return adj_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    VertexId other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), other);
}

const std::string& Graph::label(VertexId v) const {
    static const std::string empty;
    if (v >= n_) throw std::invalid_argument("vertex out of range");
    return labels_.empty() ? empty : labels_[v];
}

Graph load_edge_list(std::istream& in) {
    struct RawEdge {
        std::string a, b;
        std::size_t line;
    };
    std::vector<RawEdge> raw;
    bool have_header = false;
    std::uint64_t declared = 0;
    bool all_integer = true;
    bool seen_significant = false;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty() || toks[0][0] == '#') continue;

        if (!seen_significant && toks[0] == "vertices") {
            if (toks.size() != 2) {
                throw ParseError("'vertices' directive needs exactly one count",
                                 lineno);
            }
            declared = parse_count(toks[1], lineno, "vertex count");
            if (declared > kMaxVertexCount) {
                throw ParseError("vertex count exceeds supported maximum",
                                 lineno);
            }
            have_header = true;
            seen_significant = true;
            continue;
        }
        seen_significant = true;

        if (toks.size() != 2) {
            throw ParseError("expected two vertex tokens, found " +
                                 std::to_string(toks.size()),
                             lineno);
        }
        for (const auto& t : toks) {
            if (is_negative_integer(t)) {
                throw ParseError("negative vertex id '" + t + "'", lineno);
            }
            if (!is_nonneg_integer(t)) all_integer = false;
        }
        raw.push_back({toks[0], toks[1], lineno});
    }

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    std::uint64_t n = 0;
    std::vector<std::string> labels;

    if (all_integer) {
        for (const auto& e : raw) {
            std::uint64_t u = parse_count(e.a, e.line, "vertex id");
            std::uint64_t v = parse_count(e.b, e.line, "vertex id");
            std::uint64_t hi = std::max(u, v);
            if (hi >= kMaxVertexCount) {
                throw ParseError("vertex id exceeds supported maximum", e.line);
            }
            if (have_header && hi >= declared) {
                throw ParseError("vertex id " + std::to_string(hi) +
                                     " outside declared count " +
                                     std::to_string(declared),
                                 e.line);
            }
            n = std::max(n, hi + 1);
            edges.emplace_back(static_cast<VertexId>(u),
                               static_cast<VertexId>(v));
        }
        if (have_header) n = declared;
    } else {
        std::unordered_map<std::string, VertexId> ids;
        auto intern = [&](const std::string& name,
                          std::size_t at_line) -> VertexId {
            auto it = ids.find(name);
            if (it != ids.end()) return it->second;
            if (have_header && ids.size() >= declared) {
                throw ParseError("name '" + name + "' exceeds declared count " +
                                     std::to_string(declared),
                                 at_line);
            }
            VertexId id = static_cast<VertexId>(ids.size());
            ids.emplace(name, id);
            labels.push_back(name);
            return id;
        };
        for (const auto& e : raw) {
            VertexId u = intern(e.a, e.line);
            VertexId v = intern(e.b, e.line);
            edges.emplace_back(u, v);
        }
        n = have_header ? declared : ids.size();
        labels.resize(n);  // extra declared vertices stay unnamed
    }
    return Graph(static_cast<VertexId>(n), std::move(edges),
                 std::move(labels));
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "vertices " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) {
        if (g.has_labels() && !g.label(u).empty() && !g.label(v).empty()) {
            out << g.label(u) << " " << g.label(v) << "\n";
        } else {
            out << u << " " << v << "\n";
        }
    }
}

void bfs_distances(const Graph& g, VertexId source,
                   std::vector<std::int64_t>& dist) {
    const VertexId n = g.vertex_count();
    if (source >= n) throw std::invalid_argument("source vertex out of range");
    dist.assign(n, -1);
    dist[source] = 0;
    std::deque<VertexId> queue{source};
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
}

std::unordered_map<VertexId, std::uint32_t> shortest_path_lengths(
    const Graph& g, VertexId source) {
    std::vector<std::int64_t> dist;
    bfs_distances(g, source, dist);
    std::unordered_map<VertexId, std::uint32_t> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] >= 0) out.emplace(v, static_cast<std::uint32_t>(dist[v]));
    }
    return out;
}

std::unordered_map<VertexId, std::uint32_t> shortest_path_lengths(
    const Graph& g, VertexId source, std::span<const VertexId> restrict_to) {
    const VertexId n = g.vertex_count();
    if (source >= n) throw std::invalid_argument("source vertex out of range");
    std::vector<char> allowed(n, 0);
    for (VertexId v : restrict_to) {
        if (v >= n) throw std::invalid_argument("restrict vertex out of range");
        allowed[v] = 1;
    }
    if (!allowed[source]) {
        throw std::invalid_argument("source not in restrict set");
    }
    std::vector<std::int64_t> dist(n, -1);
    dist[source] = 0;
    std::deque<VertexId> queue{source};
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u)) {
            if (allowed[w] && dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    std::unordered_map<VertexId, std::uint32_t> out;
    for (VertexId v = 0; v < n; ++v) {
        if (dist[v] >= 0) out.emplace(v, static_cast<std::uint32_t>(dist[v]));
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const VertexId> vertices) {
    const VertexId n = g.vertex_count();
    std::vector<VertexId> kept(vertices.begin(), vertices.end());
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    for (VertexId v : kept) {
        if (v >= n) throw std::invalid_argument("vertex out of range");
    }

    std::vector<std::int64_t> to_new(n, -1);
    for (std::size_t i = 0; i < kept.size(); ++i) to_new[kept[i]] = static_cast<std::int64_t>(i);

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (to_new[u] >= 0 && to_new[v] >= 0) {
            edges.emplace_back(static_cast<VertexId>(to_new[u]),
                               static_cast<VertexId>(to_new[v]));
        }
    }

    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(kept.size());
        for (VertexId v : kept) labels.push_back(g.label(v));
    }

    return {Graph(static_cast<VertexId>(kept.size()), std::move(edges),
                  std::move(labels)),
            std::move(kept)};
}

Graph generate_random_graph(VertexId n, std::size_t m, Rng& rng) {
    const std::uint64_t max_edges =
        static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    if (m > max_edges) {
        throw std::invalid_argument(
            "edge count " + std::to_string(m) + " exceeds maximum " +
            std::to_string(max_edges) + " for " + std::to_string(n) +
            " vertices");
    }

    std::vector<Edge> edges;
    edges.reserve(m);
    if (m > max_edges / 2) {
        // dense case: partial shuffle of the full pair list
        std::vector<Edge> all;
        all.reserve(max_edges);
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = u + 1; v < n; ++v) all.emplace_back(u, v);
        }
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng.below(all.size() - i));
            std::swap(all[i], all[j]);
        }
        edges.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
    } else {
        std::unordered_set<std::uint64_t> seen;
        while (edges.size() < m) {
            VertexId u = static_cast<VertexId>(rng.below(n));
            VertexId v = static_cast<VertexId>(rng.below(n));
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            std::uint64_t key = static_cast<std::uint64_t>(u) * n + v;
            if (seen.insert(key).second) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace cgclust

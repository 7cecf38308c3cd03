#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cgclust/rng.hpp"

namespace cgclust {

using VertexId = std::uint32_t;

// Undirected edge, stored with first < second.
using Edge = std::pair<VertexId, VertexId>;

// Malformed edge-list input; line() is the 1-based offending line.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// Simple undirected graph with dense vertex ids 0..n-1. Immutable after
// construction; self-loops and duplicate edges are dropped on construction.
class Graph {
  public:
    Graph() = default;

    // labels may be empty (unlabeled graph) or one string per vertex.
    Graph(VertexId vertex_count, std::vector<Edge> edges,
          std::vector<std::string> labels = {});

    VertexId vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Sorted lexicographically, each pair (u, v) with u < v.
    const std::vector<Edge>& edges() const { return edges_; }

    // Sorted ascending.
    const std::vector<VertexId>& neighbors(VertexId v) const;

    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    bool has_edge(VertexId u, VertexId v) const;

    bool has_labels() const { return !labels_.empty(); }

    // Empty string when the graph is unlabeled or the vertex has no name.
    const std::string& label(VertexId v) const;

  private:
    VertexId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::string> labels_;
};

// Text edge-list format: '#' starts a comment line; an optional first
// directive line "vertices N" declares the vertex count (needed for isolated
// vertices); every other non-blank line is "<u> <v>". If every endpoint
// token is a non-negative integer, tokens are taken as vertex ids; otherwise
// all tokens are treated as names and mapped to dense ids in first-appearance
// order. Throws ParseError.
Graph load_edge_list(std::istream& in);

// Writes the same format, always with a "vertices N" header. Labels are used
// when present, ids otherwise. Unlabeled output reloads to an identical graph.
void write_edge_list(const Graph& g, std::ostream& out);

// BFS hop counts from source; fills dist with -1 for unreachable vertices.
void bfs_distances(const Graph& g, VertexId source,
                   std::vector<std::int64_t>& dist);

// BFS hop counts from source; unreachable vertices are absent from the map.
std::unordered_map<VertexId, std::uint32_t> shortest_path_lengths(
    const Graph& g, VertexId source);

// Same, within the subgraph induced by restrict_to (source must belong to it).
std::unordered_map<VertexId, std::uint32_t> shortest_path_lengths(
    const Graph& g, VertexId source, std::span<const VertexId> restrict_to);

struct InducedSubgraph {
    Graph graph;
    // to_original[new_id] = id in the source graph
    std::vector<VertexId> to_original;
};

// Subgraph on the given vertex set (duplicates ignored), keeping exactly the
// edges with both endpoints inside it.
InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const VertexId> vertices);

// Uniform simple graph with exactly n vertices and m distinct edges.
// Deterministic for a fixed rng seed.
Graph generate_random_graph(VertexId n, std::size_t m, Rng& rng);

}  // namespace cgclust

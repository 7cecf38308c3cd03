#include "cgclust/io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <string>
#include <unordered_map>

namespace cgclust {

nlohmann::ordered_json clustering_to_json(const Clustering& c, const Graph& g) {
    auto vertex_json = [&](VertexId v) -> nlohmann::ordered_json {
        if (g.has_labels() && !g.label(v).empty()) return g.label(v);
        return v;
    };

    nlohmann::ordered_json clusters = nlohmann::ordered_json::array();
    for (const auto& members : c.clusters) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (VertexId v : members) arr.push_back(vertex_json(v));
        clusters.push_back(std::move(arr));
    }

    nlohmann::ordered_json out;
    out["clusters"] = std::move(clusters);
    if (c.heads) {
        nlohmann::ordered_json heads = nlohmann::ordered_json::array();
        for (VertexId v : *c.heads) heads.push_back(vertex_json(v));
        out["heads"] = std::move(heads);
    }
    return out;
}

namespace {

VertexId vertex_from_json(const nlohmann::json& value, const Graph& g,
                          const std::unordered_map<std::string, VertexId>& by_label) {
    if (value.is_number_unsigned() || value.is_number_integer()) {
        const auto raw = value.get<std::int64_t>();
        if (raw < 0 || raw >= static_cast<std::int64_t>(g.vertex_count())) {
            throw ValidationError("vertex id " + value.dump() + " out of range");
        }
        return static_cast<VertexId>(raw);
    }
    if (value.is_string()) {
        const auto it = by_label.find(value.get<std::string>());
        if (it == by_label.end()) {
            throw ValidationError("unknown vertex name " + value.dump());
        }
        return it->second;
    }
    throw ValidationError("vertex must be an id or a name, got " + value.dump());
}

}  // namespace

Clustering clustering_from_json(const nlohmann::json& j, const Graph& g) {
    const nlohmann::json* clusters = nullptr;
    const nlohmann::json* heads = nullptr;
    if (j.is_array()) {
        clusters = &j;
    } else if (j.is_object()) {
        const auto it = j.find("clusters");
        if (it == j.end()) {
            throw ValidationError("clustering object has no \"clusters\" key");
        }
        clusters = &*it;
        const auto ht = j.find("heads");
        if (ht != j.end()) heads = &*ht;
    } else {
        throw ValidationError("clustering must be an array or an object");
    }
    if (!clusters->is_array()) {
        throw ValidationError("\"clusters\" must be an array of arrays");
    }

    std::unordered_map<std::string, VertexId> by_label;
    if (g.has_labels()) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (!g.label(v).empty()) by_label.emplace(g.label(v), v);
        }
    }

    Clustering c;
    for (const auto& entry : *clusters) {
        if (!entry.is_array()) {
            throw ValidationError("each cluster must be an array of vertices");
        }
        std::vector<VertexId> members;
        members.reserve(entry.size());
        for (const auto& value : entry) {
            members.push_back(vertex_from_json(value, g, by_label));
        }
        std::sort(members.begin(), members.end());
        c.clusters.push_back(std::move(members));
    }
    if (heads) {
        if (!heads->is_array()) {
            throw ValidationError("\"heads\" must be an array of vertices");
        }
        std::vector<VertexId> hs;
        hs.reserve(heads->size());
        for (const auto& value : *heads) {
            hs.push_back(vertex_from_json(value, g, by_label));
        }
        c.heads = std::move(hs);
    }
    require_valid(c, g);
    return c;
}

nlohmann::ordered_json report_to_json(const MetricsReport& report) {
    nlohmann::ordered_json out;
    out["kal"] = report.kal;
    out["cc"] = report.cc;
    out["cpl"] = report.cpl;
    out["cluster_count"] = report.cluster_count;
    return out;
}

std::string trace_to_csv(const RunTrace& trace) {
    std::string out = "iteration,candidate_kappa,best_kappa,accepted\n";
    char line[96];
    for (const auto& it : trace.iterations) {
        std::snprintf(line, sizeof line, "%d,%lld,%lld,%d\n", it.iteration,
                      it.candidate_kappa, it.best_kappa, it.accepted ? 1 : 0);
        out += line;
    }
    return out;
}

}  // namespace cgclust

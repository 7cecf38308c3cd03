#pragma once

#include <string>

#include "json.hpp"

#include "cgclust/clustering.hpp"
#include "cgclust/ga.hpp"
#include "cgclust/metrics.hpp"

namespace cgclust {

// {"clusters": [[...], ...], "heads": [...]}; members use the graph's labels
// when it has them, dense ids otherwise. "heads" is present only when set.
nlohmann::ordered_json clustering_to_json(const Clustering& c, const Graph& g);

// Accepts the object form above or a bare array of arrays. Members may be
// ids or label strings; labels are resolved against g. Structural problems
// and unknown labels raise ValidationError.
Clustering clustering_from_json(const nlohmann::json& j, const Graph& g);

// Flat object with keys kal, cc, cpl, cluster_count (the CLI contract).
nlohmann::ordered_json report_to_json(const MetricsReport& r);

// Header "iteration,candidate_kappa,best_kappa,accepted"; accepted is 1/0.
std::string trace_to_csv(const RunTrace& t);

}  // namespace cgclust

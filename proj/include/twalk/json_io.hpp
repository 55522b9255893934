#pragma once

// JSON views of the library types (nlohmann::json via ADL).

#include <json.hpp>

#include "twalk/detection.hpp"
#include "twalk/graph.hpp"
#include "twalk/node_bounds.hpp"
#include "twalk/pst.hpp"
#include "twalk/spectral_system.hpp"

namespace twalk {

inline void to_json(nlohmann::json& j, const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
    j = {{"n", g.order()}, {"edges", std::move(edges)}};
}

inline void to_json(nlohmann::json& j, const Propagator& u) {
    const int n = u.matrix.order();
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < n; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < n; ++c) row.push_back({u.matrix(r, c).real(), u.matrix(r, c).imag()});
        rows.push_back(std::move(row));
    }
    j = {{"t", u.t}, {"n", n}, {"matrix", std::move(rows)}};
}

inline void to_json(nlohmann::json& j, const PstCertificate& cert) {
    j = {{"has_pst", cert.has_pst},
         {"pair", cert.has_pst ? nlohmann::json({cert.pair.first, cert.pair.second}) : nlohmann::json()},
         {"times", cert.times},
         {"violated_conditions", cert.violated_conditions}};
}

inline void to_json(nlohmann::json& j, const DetectionTranscript& tr) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : tr.steps)
        steps.push_back({{"start", s.start},
                         {"t", s.t},
                         {"measured", s.measured},
                         {"outcome", s.moved ? "moved" : "stayed"}});
    nlohmann::json found = nlohmann::json::array();
    nlohmann::json inferred = nlohmann::json::array();
    for (const auto& f : tr.found_edges) {
        found.push_back({f.edge.first, f.edge.second});
        inferred.push_back(f.inferred);
    }
    j = {{"n", tr.n},
         {"protocol", tr.protocol},
         {"steps", std::move(steps)},
         {"found_edges", std::move(found)},
         {"inferred", std::move(inferred)},
         {"evolutions_used", tr.evolutions_used},
         {"success", tr.success}};
}

// `grid_max_observed` comes from oracle_grid_max_offdiag12 on the deleted
// graph's Laplacian.
inline nlohmann::json node_bound_report(const NodeDeletionBound& b, double grid_max_observed) {
    return {{"original", b.original.str()},
            {"deleted_block", b.deleted_block},
            {"deleted_form", b.deleted_form.str()},
            {"case", to_string(b.kind)},
            {"bound", b.bound},
            {"g", b.g},
            {"a", b.a},
            {"grid_max_observed", grid_max_observed}};
}

}  // namespace twalk

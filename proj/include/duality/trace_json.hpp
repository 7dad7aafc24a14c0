#pragma once

#include <json.hpp>

#include "duality/trace.hpp"

namespace duality {

inline void to_json(nlohmann::json& j, const TraceEvent& event) {
    j = nlohmann::json{{"step_index", event.step_index},
                       {"op", event.op},
                       {"label", event.label},
                       {"norm_sq", event.norm_sq},
                       {"support_size", event.support_size}};
    if (!event.payload.empty()) j["payload"] = event.payload;
}

inline void from_json(const nlohmann::json& j, TraceEvent& event) {
    j.at("step_index").get_to(event.step_index);
    j.at("op").get_to(event.op);
    j.at("label").get_to(event.label);
    j.at("norm_sq").get_to(event.norm_sq);
    j.at("support_size").get_to(event.support_size);
    event.payload.clear();
    if (j.contains("payload")) j.at("payload").get_to(event.payload);
}

}  // namespace duality

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace duality {

// One step of wave evolution, for the line-delimited JSON trace.
struct TraceEvent {
    std::size_t step_index = 0;
    std::string op;  // init | divide | apply_function | apply_sign | combine | readout
    std::string label;
    double norm_sq = 0.0;
    std::size_t support_size = 0;
    std::map<std::string, std::string> payload;  // empty means absent

    bool operator==(const TraceEvent&) const = default;
};

// Collects trace events and per-op counts for one algorithm run.
class TraceRecorder {
public:
    void record(std::string op, std::string label, double norm_sq, std::size_t support_size,
                std::map<std::string, std::string> payload = {}) {
        counts_[op] += 1;
        events_.push_back({events_.size(), std::move(op), std::move(label), norm_sq, support_size,
                           std::move(payload)});
    }

    const std::vector<TraceEvent>& events() const { return events_; }
    const std::map<std::string, std::size_t>& counts() const { return counts_; }

    std::vector<TraceEvent> take_events() { return std::move(events_); }

private:
    std::vector<TraceEvent> events_;
    std::map<std::string, std::size_t> counts_;
};

// Number of primitive operations in one prepare-and-measure pass: events up
// to and including the first readout. Constant in n for each algorithm;
// only the simulated wave width grows with the input.
inline std::size_t ops_through_first_readout(const std::vector<TraceEvent>& events) {
    std::size_t count = 0;
    for (const TraceEvent& event : events) {
        ++count;
        if (event.op == "readout") return count;
    }
    return count;
}

}  // namespace duality

#pragma once

#include <string>
#include <vector>

#include "psba/types.hpp"

namespace psba {

struct Violation {
    std::string path;    // e.g. "agents[1].jobs[0].processing"
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Structural checks (bounds, uniqueness, interval sanity) plus per-agent
// preemptive feasibility. Feasibility is only attempted for agents whose
// jobs all pass the structural checks.
ValidationReport validate(const Instance& instance);

// True iff all jobs can be preemptively scheduled within their intervals on
// disjoint slots of [1, timeline_length]. Event-driven EDF; never touches
// individual slots, so arbitrarily long timelines are fine.
bool edf_feasible(const std::vector<Job>& jobs, Slot timeline_length);

// Rearranges a complete schedule into pairwise disjoint spans without
// shrinking the covered slot set, so no agent's agreement decreases.
// Two passes over events ordered by start:
//   1. left-to-right delay: each event starts no earlier than the previous
//      event's end + 1, which removes overlap but may run past the timeline;
//   2. right-to-left pull: events are pulled back just enough to fit, never
//      ending up later than pass 1 placed them.
// Both passes only ever grow the union of covered slots. Requires the total
// event length to fit the timeline.
EventSchedule eliminate_overlap(const Instance& instance, const EventSchedule& schedule);

} // namespace psba

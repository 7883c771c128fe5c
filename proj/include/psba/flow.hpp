#pragma once

#include <utility>
#include <vector>

#include "psba/types.hpp"

namespace psba {

// Maximal run of slots sliced between consecutive interval boundaries; every
// job interval and event span either contains a segment or is disjoint from
// it, so flow capacities and costs are uniform inside one segment.
struct Segment {
    SlotRun run;
    bool event_covered = false;
};

struct SegmentDecomposition {
    // Interval endpoints (first and last slots of job intervals and event
    // spans), sorted and deduplicated.
    std::vector<Slot> breakpoints;
    // Partition of [1, timeline_length], left to right.
    std::vector<Segment> segments;

    Slot covered_slots() const {
        Slot n = 0;
        for (const Segment& s : segments)
            if (s.event_covered) n += s.run.size();
        return n;
    }
};

SegmentDecomposition decompose(const std::vector<Job>& jobs, const EventSchedule& schedule,
                               Slot timeline_length);

struct AgreementResult {
    Slot agreement = 0;    // covered slots left free by the best job schedule
    Slot covered_slots = 0;
    SegmentDecomposition decomposition;
    // Per segment: (job index, units assigned there), ascending job index.
    std::vector<std::vector<std::pair<int, Slot>>> units;
};

// One agent's maximum agreement with the (possibly partial) schedule, via a
// min-cost assignment of job units to segments: covered slots cost 1 per
// occupied unit, uncovered slots cost 0, so the cheapest feasible assignment
// keeps as many covered slots free as possible. Throws InfeasibleJobSet when
// the jobs cannot all be scheduled. Increments counters->flow_calls.
AgreementResult max_agreement(const Agent& agent, const EventSchedule& schedule,
                              Slot timeline_length, Counters* counters = nullptr);

// Sum of per-agent maximum agreements; the schedule's objective value.
Slot total_agreement(const Instance& instance, const EventSchedule& schedule,
                     Counters* counters = nullptr);

struct AgreementRun {
    int segment_index; // into the decomposition of the same call
    SlotRun run;
};

// Canonical agreement witness: inside each event-covered segment, job units
// are packed at the left end, leaving at most one agreement run flush with
// the right end. Only non-empty runs are returned, left to right.
std::vector<AgreementRun> agreement_segments(const Agent& agent, const EventSchedule& schedule,
                                             Slot timeline_length);

// Same extraction from an already computed result.
std::vector<AgreementRun> agreement_runs(const AgreementResult& result);

// The left-packed job schedule realizing an agreement result.
JobSchedule packed_schedule(const Agent& agent, const AgreementResult& result);

// Core evaluator shared with the matroid rank oracle: covered spans given
// directly instead of through event placements. Spans may overlap; they are
// clipped to the timeline and merged.
AgreementResult agreement_on_spans(const std::vector<Job>& jobs, std::vector<SlotRun> spans,
                                   Slot timeline_length);

} // namespace psba

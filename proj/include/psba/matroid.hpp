#pragma once

#include <vector>

#include "psba/types.hpp"

namespace psba {

// Matroid over the slots [1, ground_set_length]: a slot set X is independent
// iff every job can still be fully scheduled while all of X stays free. Jobs
// are split into unit pieces so independence reduces to bipartite matching.
// Deliberately confined to test scales: total processing is capped at 64.
struct SchedulingMatroid {
    std::vector<Job> unit_jobs;
    Slot ground_set_length = 1;
};

// Splits jobs into unit pieces. Throws std::invalid_argument when the total
// processing exceeds 64 or a job violates its interval.
SchedulingMatroid make_matroid(const std::vector<Job>& jobs, Slot timeline_length);

// Augmenting-path matching of unit pieces into slots outside `slots`.
// Duplicate slots are ignored; slots outside the ground set are rejected.
bool is_independent(const SchedulingMatroid& m, const std::vector<Slot>& slots);

// Size of the largest independent subset of `slots`, computed by the same
// min-cost assignment that powers agreement: runs of `slots` act as covered
// spans, and the rank is the covered count minus the forced occupancy.
Slot rank(const SchedulingMatroid& m, const std::vector<Slot>& slots);

// Some slot of `larger` \ `smaller` whose addition keeps `smaller`
// independent (both inputs must be independent, |smaller| < |larger|).
// Scans candidates in ascending slot order; throws NoWitness if none works,
// which would contradict the exchange axiom.
Slot exchange_witness(const SchedulingMatroid& m, const std::vector<Slot>& smaller,
                      const std::vector<Slot>& larger);

} // namespace psba

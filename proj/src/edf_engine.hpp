#pragma once

// Event-driven preemptive EDF engines, shared by feasibility checking, the
// EDF timeline partition, and the two-stage placement schedule. Work is done
// per release/deadline boundary, never per slot. Not installed.

#include <vector>

#include "psba/types.hpp"

namespace psba::detail {

struct EdfRun {
    SlotRun run;
    int job; // index into the job vector
};

struct ForwardEdfResult {
    // Chronological non-idle runs; consecutive entries of the same job merged.
    std::vector<EdfRun> trace;
    // Per-job runs, sorted and merged.
    std::vector<std::vector<SlotRun>> runs;
    std::vector<Slot> remaining;
};

// Runs jobs forward over [1, horizon_last], always executing the available
// job with the smallest rank (ranks are a permutation of 0..n-1; EDF when
// ranks follow ascending deadlines). A job may end the horizon unfinished
// only if its deadline lies beyond the horizon; otherwise the job set is
// infeasible and InfeasibleJobSet is thrown. horizon_last < 1 yields the
// empty schedule.
ForwardEdfResult forward_edf(const std::vector<Job>& jobs, const std::vector<int>& rank,
                             Slot horizon_last);

// Mirror image: runs jobs downward from timeline_length to floor_first, job j
// usable on [max(release_j, floor_first), deadline_j], executing `remaining`
// units each. Throws InfeasibleJobSet if any remaining work cannot finish.
// Returns per-job runs, sorted and merged.
std::vector<std::vector<SlotRun>> backward_edf(const std::vector<Job>& jobs,
                                               const std::vector<int>& rank,
                                               std::vector<Slot> remaining, Slot floor_first,
                                               Slot timeline_length);

// Ranks 0..n-1 by ascending (deadline, id, index).
std::vector<int> deadline_ranks(const std::vector<Job>& jobs);

// Ranks 0..n-1 by descending release (ties by ascending id, then index).
std::vector<int> release_desc_ranks(const std::vector<Job>& jobs);

} // namespace psba::detail

#pragma once

#include <string>
#include <vector>

#include "psba/types.hpp"

namespace psba {

struct SolveOptions {
    // Rearrange the final schedule into disjoint spans when the events fit
    // the timeline; never lowers the objective.
    bool final_shift = true;
    // Cap on per-position evaluations for the enumerating solver.
    long long enumeration_cap = 1'000'000;
};

struct RoundEntry {
    std::string event_id;
    Slot start = 0;
    Slot marginal = 0;
};

struct SolveReport {
    std::string algorithm;
    EventSchedule schedule; // placements in instance event order
    Slot total = 0;
    std::vector<RoundEntry> rounds; // commit order
    Counters counters;
    double wall_ms = 0.0;
};

// Greedy with exhaustive placement search: each round evaluates every
// position of every unscheduled event and commits the best. Exact marginal
// oracle, so the result is at least half the optimum, but the work grows
// with the timeline; throws TimelineTooLarge once the next event's sweep
// would push the evaluation counter past options.enumeration_cap.
SolveReport greedy_poly_t(const Instance& instance, const SolveOptions& options = {});

// Positions `event` against the agents' schedules under `partial`: each
// agent's current agreement runs are frozen into rigid jobs, and the event
// is placed optimally against the augmented agents. The returned position's
// marginal is at least half the best marginal of any position, which is what
// the half-optimal guarantee of the general solver needs. With an empty
// partial schedule this is exactly the single-event optimum.
Slot good_posn(const Instance& instance, const EventSchedule& partial, const Event& event,
               Counters* counters = nullptr);

// General solver: greedy over events with good_posn as the placement oracle.
// Runs in time polynomial in the number of jobs and events; the timeline
// length only enters through arithmetic, never enumeration, which the
// slot_enumerations counter (always zero here) makes checkable.
SolveReport solve_general(const Instance& instance, const SolveOptions& options = {});

} // namespace psba

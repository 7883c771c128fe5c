#pragma once

#include <utility>
#include <vector>

#include "psba/piecewise.hpp"
#include "psba/types.hpp"

namespace psba {

// Single-agent view around one EDF segment: at most one job (the segment
// owner) stays flexible, every other job is frozen where the two-pass
// schedule put it. Agreement of this view is an exact piecewise-linear
// function of the placement position across the validity window.
struct CoreInstance {
    Slot event_length = 1;
    // Pivot job's usable intervals (its interval minus frozen blocks),
    // sorted; empty when the window has no owner.
    std::vector<SlotRun> flexible_intervals;
    Slot flexible_processing = 0; // pivot's processing; 0 when no pivot
    std::vector<SlotRun> rigid_blocks; // frozen slots of the other jobs, merged, sorted
    SlotRun window; // placement positions the view is valid for
};

// Agreement of the core instance at placement position t, for all t in the
// window: event length minus frozen overlap, minus the units the pivot is
// forced to park inside the event span once its outside room runs out.
// Breakpoints stay on integers (kinks between integers are bracketed by the
// two adjacent integers), so values are exact everywhere.
PiecewiseLinearFn core_agreement_fn(const CoreInstance& core);

struct EdfSegment {
    SlotRun run;
    int job = -1; // owning job index, or -1 for idle
};

// Earliest-deadline-first schedule of the whole timeline, cut into maximal
// single-owner runs. Adjacent segments always differ in owner; the segment
// count is linear in the job count, never in the timeline length.
struct EdfPartition {
    std::vector<int> pi;     // job indices, ascending (deadline, id)
    std::vector<int> pi_bar; // job indices, descending release (ties by id)
    std::vector<EdfSegment> segments;
};

EdfPartition edf_partition(const std::vector<Job>& jobs, Slot timeline_length);

// Feasible schedule optimal for an event starting at placement_start, for
// every event length at once: forward EDF by pi up to the placement, then
// backward from the timeline end by pi_bar with j_hat (the placement's
// segment owner, or -1) considered last so its units hug the placement.
// Agrees with the plain EDF schedule on every slot before the placement.
JobSchedule bi_edf_schedule(Slot placement_start, const std::vector<Job>& jobs,
                            Slot timeline_length, const std::vector<int>& pi,
                            const std::vector<int>& pi_bar, int j_hat);

// Free slots the agent can offer an event of the given length, as an exact
// function of the placement position over [1, timeline_length - length + 1].
// Built per EDF segment and glued; size is linear in the job count.
PiecewiseLinearFn agent_agreement_curve(const Agent& agent, Slot event_length,
                                        Slot timeline_length);

// Exact optimum for instances with exactly one event: the smallest placement
// position maximizing the summed agent curves, and the value there. Throws
// NoValidPlacement when the event does not fit the timeline.
std::pair<Slot, Slot> best_placement(const Instance& instance);

} // namespace psba

#pragma once

#include <utility>

#include "psba/types.hpp"

namespace psba {

struct OracleBudget {
    long long max_placements = 200'000;   // complete placements brute_optimum may evaluate
    long long max_states = 50'000'000;    // job-assignment search nodes brute_agreement may visit
};

// Agreement by exhaustive search over every slot-exact job assignment,
// entirely independent of the flow formulation: recursion over jobs, bitmask
// enumeration of each job's slot combinations. Timeline capped at 32 slots;
// throws BudgetExceeded past budget.max_states search nodes and
// InfeasibleJobSet when no complete assignment exists.
Slot brute_agreement(const Agent& agent, const EventSchedule& schedule, Slot timeline_length,
                     const OracleBudget& budget = {});

// Exhaustive optimum over complete placements, evaluated with the flow
// agreement. Events of equal length are interchangeable, so their starts are
// enumerated in non-decreasing order; that skips only permuted duplicates of
// schedules already visited and leaves the maximum untouched. Returns the
// first maximizer in enumeration order. Throws BudgetExceeded when the
// number of placements to enumerate exceeds budget.max_placements.
std::pair<EventSchedule, Slot> brute_optimum(const Instance& instance,
                                             const OracleBudget& budget = {});

// Number of placements brute_optimum would enumerate, saturating at
// 2^62 to keep callers' budget comparisons safe.
long long brute_optimum_cost(const Instance& instance);

} // namespace psba

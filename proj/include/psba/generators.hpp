#pragma once

#include <cstdint>
#include <vector>

#include "psba/types.hpp"

namespace psba {

struct GenSpec {
    std::uint64_t seed = 1;
    int agents = 1;
    int events = 1;
    Slot timeline_length = 10;
    int jobs_min = 0;
    int jobs_max = 3;
    // Fraction of jobs drawn rigid / single-unit; the rest keep their length
    // with a widened interval. Must be non-negative with sum at most 1.
    double mix_rigid = 0.25;
    double mix_unit = 0.25;
};

// Random instance, feasible by construction: every agent's jobs are first
// packed onto disjoint runs, then each job's interval is relaxed according
// to the flexibility mix. The same seed always yields the same instance.
// Throws GenerationFailed when packing cannot fit the drawn jobs.
Instance gen_random(const GenSpec& spec);

// Equal-partition reduction: one agent whose two rigid jobs occupy [1, Q]
// and [2Q+1, 3Q] on a 4Q-slot timeline (Q = half the multiset sum), one
// event per multiset element. The free slots form two regions of exactly Q
// slots, so total agreement 2Q is achievable precisely when the multiset
// splits into two halves of sum Q. Throws OddSum for odd sums.
Instance gen_partition(const std::vector<Slot>& sizes);

} // namespace psba

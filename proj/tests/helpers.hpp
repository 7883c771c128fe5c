#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "psba/generators.hpp"
#include "psba/instance.hpp"
#include "psba/types.hpp"

namespace psba::testutil {

// Running example shared across suites: two agents busy at opposite ends of
// an 11-slot timeline, two events.
inline Instance crossing_instance(Slot first_length = 2, Slot second_length = 3) {
    Instance instance;
    instance.timeline_length = 11;
    instance.events = {{"e1", first_length}, {"e2", second_length}};
    instance.agents = {
        {"a1", {{"A", 1, 3, 2}, {"B", 2, 7, 3}}},
        {"a2", {{"C", 7, 11, 3}, {"D", 5, 8, 2}}},
    };
    return instance;
}

// Uniformly random valid placement of every event; overlaps allowed.
inline EventSchedule random_schedule(const Instance& instance, std::mt19937_64& rng) {
    EventSchedule schedule;
    for (const Event& event : instance.events) {
        std::uniform_int_distribution<Slot> start(1, instance.timeline_length - event.length + 1);
        schedule.placements.push_back({event.id, start(rng), event.length});
    }
    return schedule;
}

// Seeded generator instance, or nothing when packing fails for this seed.
inline std::optional<Instance> try_random_instance(std::uint64_t seed, Slot timeline = 12,
                                                   int agents = 2, int events = 2,
                                                   int jobs_max = 3) {
    GenSpec spec;
    spec.seed = seed;
    spec.agents = agents;
    spec.events = events;
    spec.timeline_length = timeline;
    spec.jobs_max = jobs_max;
    try {
        return gen_random(spec);
    } catch (const GenerationFailed&) {
        return std::nullopt;
    }
}

// Unconstrained random jobs (feasible or not) for feasibility-check tests.
inline std::vector<Job> random_jobs(std::mt19937_64& rng, Slot timeline, int count) {
    std::vector<Job> jobs;
    for (int i = 0; i < count; ++i) {
        std::uniform_int_distribution<Slot> pick(1, timeline);
        Slot a = pick(rng);
        Slot b = pick(rng);
        if (a > b)
            std::swap(a, b);
        std::uniform_int_distribution<Slot> units(1, b - a + 1);
        jobs.push_back({"j" + std::to_string(i + 1), a, b, units(rng)});
    }
    return jobs;
}

// Random job set guaranteed preemptively feasible, by rejection.
inline std::vector<Job> feasible_jobs(std::mt19937_64& rng, Slot timeline, int max_jobs) {
    for (;;) {
        std::uniform_int_distribution<int> count(0, max_jobs);
        std::vector<Job> jobs = random_jobs(rng, timeline, count(rng));
        if (edf_feasible(jobs, timeline))
            return jobs;
    }
}

} // namespace psba::testutil

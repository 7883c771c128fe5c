#include "psba/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "psba/flow.hpp"

namespace psba {

namespace {

using Mask = std::uint64_t;

Mask run_mask(SlotRun r, Slot timeline_length) {
    Slot lo = std::max<Slot>(r.first, 1);
    Slot hi = std::min(r.last, timeline_length);
    if (hi < lo) return 0;
    Mask all = hi - lo + 1 == 64 ? ~Mask{0} : ((Mask{1} << (hi - lo + 1)) - 1);
    return all << (lo - 1);
}

struct AssignmentSearch {
    const std::vector<Job>& jobs;
    Slot timeline_length;
    Mask covered;
    long long budget;
    long long states = 0;
    Slot best = -1;

    void tick() {
        if (++states > budget) throw BudgetExceeded("job-assignment search exceeded its state budget");
    }

    // Chooses `need` slots for job j out of the free bits of its interval,
    // lowest slots first, then recurses into the next job.
    void place(std::size_t j, Mask used) {
        tick();
        if (j == jobs.size()) {
            Slot agreement = std::popcount(covered & ~used);
            best = std::max(best, agreement);
            return;
        }
        const Job& job = jobs[j];
        Mask window = run_mask(job.interval(), timeline_length) & ~used;
        choose(j, used, window, job.processing);
    }

    void choose(std::size_t j, Mask used, Mask window, Slot need) {
        if (need == 0) {
            place(j + 1, used);
            return;
        }
        tick();
        if (std::popcount(window) < need) return;
        Mask low = window & (~window + 1); // lowest candidate slot
        choose(j, used | low, window & ~low, need - 1); // take it
        choose(j, used, window & ~low, need);           // or skip it
    }
};

} // namespace

Slot brute_agreement(const Agent& agent, const EventSchedule& schedule, Slot timeline_length,
                     const OracleBudget& budget) {
    if (timeline_length < 1 || timeline_length > 32)
        throw std::invalid_argument("exhaustive agreement supports timelines of 1..32 slots");
    Mask covered = 0;
    for (const EventPlacement& p : schedule.placements)
        covered |= run_mask(p.span(), timeline_length);
    for (const Job& j : agent.jobs)
        if (j.release < 1 || j.deadline > timeline_length || j.processing > j.window())
            throw std::invalid_argument("job outside the timeline");

    AssignmentSearch search{agent.jobs, timeline_length, covered, budget.max_states};
    search.place(0, 0);
    if (search.best < 0) throw InfeasibleJobSet();
    return search.best;
}

long long brute_optimum_cost(const Instance& instance) {
    constexpr long long cap = 1LL << 62;
    // Placements per equal-length class: non-decreasing start tuples, i.e.
    // multisets of starts, counted as C(positions + count - 1, count).
    std::map<Slot, long long> class_size;
    for (const Event& e : instance.events) ++class_size[e.length];
    __int128 total = 1;
    for (const auto& [length, count] : class_size) {
        Slot positions = instance.timeline_length - length + 1;
        if (positions < 1) throw NoValidPlacement("event of length " + std::to_string(length) +
                                                  " cannot be placed on the timeline");
        __int128 ways = 1;
        for (long long k = 1; k <= count; ++k) {
            ways = ways * (positions + k - 1) / k; // exact: product of k consecutive ints
            if (ways > cap) return cap;
        }
        total *= ways;
        if (total > cap) return cap;
    }
    return static_cast<long long>(total);
}

std::pair<EventSchedule, Slot> brute_optimum(const Instance& instance, const OracleBudget& budget) {
    long long cost = brute_optimum_cost(instance);
    if (cost > budget.max_placements)
        throw BudgetExceeded("enumerating " + std::to_string(cost) +
                             " placements exceeds the budget of " +
                             std::to_string(budget.max_placements));

    const std::size_t m = instance.events.size();
    EventSchedule trial;
    trial.placements.reserve(m);
    for (const Event& e : instance.events) trial.placements.push_back({e.id, 1, e.length});

    // Start floor per event: 1, or the running start of the previous event
    // of equal length (canonical representative of each unordered placement).
    std::vector<int> prev_same(m, -1);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < k; ++i)
            if (instance.events[i].length == instance.events[k].length) prev_same[k] = static_cast<int>(i);

    EventSchedule best_schedule;
    Slot best_value = -1;
    auto enumerate = [&](auto&& self, std::size_t k) -> void {
        if (k == m) {
            Slot value = total_agreement(instance, trial);
            if (value > best_value) { // strict: first maximizer wins
                best_value = value;
                best_schedule = trial;
            }
            return;
        }
        Slot lo = prev_same[k] >= 0 ? trial.placements[static_cast<std::size_t>(prev_same[k])].start : 1;
        Slot hi = instance.timeline_length - instance.events[k].length + 1;
        for (Slot t = lo; t <= hi; ++t) {
            trial.placements[k].start = t;
            self(self, k + 1);
        }
    };
    enumerate(enumerate, 0);
    return {best_schedule, best_value};
}

} // namespace psba

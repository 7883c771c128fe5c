#include "psba/solvers.hpp"

#include <algorithm>
#include <chrono>

#include "psba/flow.hpp"
#include "psba/instance.hpp"
#include "psba/one_event.hpp"
#include "psba/smgc.hpp"

namespace psba {

namespace {

using Pick = std::pair<int, Slot>; // (event index, start)

EventSchedule to_schedule(const Instance& instance, const std::vector<Pick>& picks) {
    EventSchedule s;
    s.placements.reserve(picks.size());
    for (const auto& [e, t] : picks) {
        const Event& event = instance.events[static_cast<std::size_t>(e)];
        s.placements.push_back({event.id, t, event.length});
    }
    return s;
}

// Shared tail of both solvers: order placements canonically, log rounds,
// optionally compact the schedule, and recompute the final total.
void finalize(const Instance& instance, const smgc::Result<Pick>& greedy,
              const SolveOptions& options, SolveReport& report,
              std::chrono::steady_clock::time_point started) {
    for (const auto& round : greedy.rounds)
        report.rounds.push_back({instance.events[round.group].id, round.element.second,
                                 round.marginal});

    EventSchedule schedule = to_schedule(instance, greedy.selection);
    if (options.final_shift) {
        __int128 total_length = 0;
        for (const Event& e : instance.events) total_length += e.length;
        if (total_length <= instance.timeline_length)
            schedule = eliminate_overlap(instance, schedule);
    }

    // Canonical order: instance event order.
    report.schedule.placements.clear();
    for (const Event& e : instance.events)
        for (const EventPlacement& p : schedule.placements)
            if (p.event_id == e.id) report.schedule.placements.push_back(p);

    report.total = total_agreement(instance, report.schedule, &report.counters);
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               started)
                         .count();
}

} // namespace

Slot good_posn(const Instance& instance, const EventSchedule& partial, const Event& event,
               Counters* counters) {
    if (counters != nullptr) ++counters->oracle_calls;

    Instance sub;
    sub.timeline_length = instance.timeline_length;
    sub.events = {event};
    sub.agents.reserve(instance.agents.size());
    for (const Agent& agent : instance.agents) {
        AgreementResult current =
            max_agreement(agent, partial, instance.timeline_length, counters);
        Agent augmented = agent;
        for (const AgreementRun& ar : agreement_runs(current)) {
            // Freezing the run as a rigid job keeps the agent's agreement
            // with `partial` intact while the new event is positioned.
            augmented.jobs.push_back({"", ar.run.first, ar.run.last, ar.run.size()});
        }
        sub.agents.push_back(std::move(augmented));
    }
    return best_placement(sub).first;
}

SolveReport solve_general(const Instance& instance, const SolveOptions& options) {
    auto started = std::chrono::steady_clock::now();
    SolveReport report;
    report.algorithm = "general";
    const std::size_t m = instance.events.size();

    auto objective = [&](const std::vector<Pick>& picks) {
        return total_agreement(instance, to_schedule(instance, picks), &report.counters);
    };
    auto oracle = [&](const std::vector<Pick>& picks, std::size_t g) -> Pick {
        Slot t = good_posn(instance, to_schedule(instance, picks),
                           instance.events[g], &report.counters);
        return {static_cast<int>(g), t};
    };
    smgc::Result<Pick> greedy = smgc::greedy<Pick>(m, m, objective, oracle);
    finalize(instance, greedy, options, report, started);
    return report;
}

SolveReport greedy_poly_t(const Instance& instance, const SolveOptions& options) {
    auto started = std::chrono::steady_clock::now();
    SolveReport report;
    report.algorithm = "greedy-poly";
    const std::size_t m = instance.events.size();
    const Slot T = instance.timeline_length;

    auto objective = [&](const std::vector<Pick>& picks) {
        return total_agreement(instance, to_schedule(instance, picks), &report.counters);
    };
    auto oracle = [&](const std::vector<Pick>& picks, std::size_t g) -> Pick {
        const Event& event = instance.events[g];
        Slot positions = T - event.length + 1;
        if (positions < 1) throw NoValidPlacement("event does not fit the timeline");
        if (positions > options.enumeration_cap - report.counters.slot_enumerations)
            throw TimelineTooLarge("sweeping " + std::to_string(positions) + " positions of \"" +
                                   event.id + "\" would exceed the evaluation cap");

        EventSchedule base = to_schedule(instance, picks);
        base.placements.push_back({event.id, 1, event.length});
        Slot best_t = 1;
        Slot best_value = -1;
        for (Slot t = 1; t <= positions; ++t) {
            ++report.counters.slot_enumerations;
            base.placements.back().start = t;
            Slot value = total_agreement(instance, base, &report.counters);
            if (value > best_value) { // strict: ties keep the smallest position
                best_value = value;
                best_t = t;
            }
        }
        return {static_cast<int>(g), best_t};
    };
    smgc::Result<Pick> greedy = smgc::greedy<Pick>(m, m, objective, oracle);
    finalize(instance, greedy, options, report, started);
    return report;
}

} // namespace psba

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace psba {

// 1-based time slot index; slot t denotes the half-open unit [t, t+1).
// Timelines may be as long as 2^63-1 slots, so nothing below may allocate
// or iterate per slot; everything works on runs and breakpoints.
using Slot = std::int64_t;

// Inclusive run of slots [first, last]. Empty iff last < first.
struct SlotRun {
    Slot first = 1;
    Slot last = 0;

    Slot size() const { return last < first ? 0 : last - first + 1; }
    bool empty() const { return last < first; }
    bool contains(Slot t) const { return first <= t && t <= last; }
    bool contains(const SlotRun& other) const {
        return other.empty() || (first <= other.first && other.last <= last);
    }
    bool overlaps(const SlotRun& other) const {
        return !empty() && !other.empty() && first <= other.last && other.first <= last;
    }
    friend bool operator==(const SlotRun&, const SlotRun&) = default;
};

// Preemptible job: processing slots must all lie in [release, deadline].
struct Job {
    std::string id;
    Slot release = 1;
    Slot deadline = 1;
    Slot processing = 1;

    SlotRun interval() const { return {release, deadline}; }
    Slot window() const { return deadline - release + 1; }
    bool rigid() const { return processing == window(); }
    bool unit() const { return processing == 1; }
};

struct Agent {
    std::string id;
    std::vector<Job> jobs;
};

struct Event {
    std::string id;
    Slot length = 1;
};

struct Instance {
    Slot timeline_length = 1;
    std::vector<Event> events;
    std::vector<Agent> agents;

    const Event* find_event(const std::string& event_id) const {
        for (const Event& e : events)
            if (e.id == event_id) return &e;
        return nullptr;
    }
};

// One scheduled event occupying slots {start, ..., start + length - 1}.
// Length is denormalized from the instance so schedules are self-contained.
struct EventPlacement {
    std::string event_id;
    Slot start = 1;
    Slot length = 1;

    SlotRun span() const { return {start, start + length - 1}; }
    friend bool operator==(const EventPlacement&, const EventPlacement&) = default;
};

// Partial or complete event schedule. Solvers and validation enforce at most
// one placement per event; the agreement machinery itself treats placements
// as a multiset of spans (union semantics), which the submodularity checks
// over arbitrary placement sets rely on.
struct EventSchedule {
    std::vector<EventPlacement> placements;

    bool has_event(const std::string& event_id) const {
        for (const EventPlacement& p : placements)
            if (p.event_id == event_id) return true;
        return false;
    }
    bool complete(const Instance& instance) const {
        if (placements.size() != instance.events.size()) return false;
        for (const Event& e : instance.events)
            if (!has_event(e.id)) return false;
        return true;
    }
};

// Resolves event lengths from the instance. Throws std::invalid_argument on
// unknown event ids; placement bounds are checked by callers that care.
EventSchedule make_schedule(const Instance& instance,
                            const std::vector<std::pair<std::string, Slot>>& starts);

// Slots assigned to each job of one agent, as disjoint runs per job, indexed
// like the agent's job list. Runs of distinct jobs never overlap.
struct JobSchedule {
    std::vector<std::vector<SlotRun>> runs;

    Slot assigned(int job_index) const {
        Slot n = 0;
        for (const SlotRun& r : runs[static_cast<std::size_t>(job_index)]) n += r.size();
        return n;
    }
    // Total job units falling inside `span`, over all jobs.
    Slot units_inside(const SlotRun& span) const {
        Slot n = 0;
        for (const auto& job_runs : runs)
            for (const SlotRun& r : job_runs) {
                Slot lo = r.first > span.first ? r.first : span.first;
                Slot hi = r.last < span.last ? r.last : span.last;
                if (lo <= hi) n += hi - lo + 1;
            }
        return n;
    }
};

// Instrumentation shared by solvers and the benchmark harness.
struct Counters {
    long long flow_calls = 0;        // min-cost max-flow agreement evaluations
    long long oracle_calls = 0;      // placement-oracle queries (GoodPosn / per-event argmax)
    long long slot_enumerations = 0; // placements evaluated by explicit timeline enumeration
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfeasibleJobSet : Error {
    InfeasibleJobSet() : Error("job set admits no feasible preemptive schedule") {}
    explicit InfeasibleJobSet(const std::string& what) : Error(what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what = "oracle budget exceeded") : Error(what) {}
};

struct TimelineTooLarge : Error {
    explicit TimelineTooLarge(const std::string& what =
                                  "timeline enumeration would exceed the evaluation cap")
        : Error(what) {}
};

struct NoValidPlacement : Error {
    explicit NoValidPlacement(const std::string& what = "event does not fit in the timeline")
        : Error(what) {}
};

struct TotalEventLengthExceedsTimeline : Error {
    TotalEventLengthExceedsTimeline()
        : Error("total event length exceeds the timeline; no disjoint arrangement exists") {}
};

struct OddSum : Error {
    OddSum() : Error("multiset sum is odd; no equal partition target exists") {}
};

struct GenerationFailed : Error {
    explicit GenerationFailed(const std::string& what = "instance generation failed") : Error(what) {}
};

struct OracleContractViolation : Error {
    explicit OracleContractViolation(const std::string& what =
                                         "oracle returned an element outside its group")
        : Error(what) {}
};

struct NoWitness : Error {
    NoWitness() : Error("no exchange witness found; matroid exchange property violated") {}
};

} // namespace psba

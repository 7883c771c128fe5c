#include "psba/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "edf_engine.hpp"

namespace psba {

EventSchedule make_schedule(const Instance& instance,
                            const std::vector<std::pair<std::string, Slot>>& starts) {
    EventSchedule schedule;
    schedule.placements.reserve(starts.size());
    for (const auto& [event_id, start] : starts) {
        const Event* e = instance.find_event(event_id);
        if (e == nullptr) throw std::invalid_argument("unknown event id: " + event_id);
        schedule.placements.push_back({event_id, start, e->length});
    }
    return schedule;
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const Violation& v : violations) os << v.path << ": " << v.message << "\n";
    return os.str();
}

bool edf_feasible(const std::vector<Job>& jobs, Slot timeline_length) {
    for (const Job& j : jobs) {
        if (j.release < 1 || j.deadline > timeline_length || j.release > j.deadline) return false;
        if (j.processing < 1 || j.processing > j.window()) return false;
    }
    try {
        detail::forward_edf(jobs, detail::deadline_ranks(jobs), timeline_length);
    } catch (const InfeasibleJobSet&) {
        return false;
    }
    return true;
}

ValidationReport validate(const Instance& instance) {
    ValidationReport report;
    auto flag = [&](std::string path, std::string message) {
        report.violations.push_back({std::move(path), std::move(message)});
    };

    const Slot T = instance.timeline_length;
    if (T < 1) flag("timeline_length", "must be a positive slot count");

    std::set<std::string> event_ids;
    for (std::size_t k = 0; k < instance.events.size(); ++k) {
        const Event& e = instance.events[k];
        std::string path = "events[" + std::to_string(k) + "]";
        if (e.id.empty()) flag(path + ".id", "must be non-empty");
        if (!event_ids.insert(e.id).second) flag(path + ".id", "duplicate event id \"" + e.id + "\"");
        if (e.length < 1)
            flag(path + ".length", "must be at least 1");
        else if (T >= 1 && e.length > T)
            flag(path + ".length", "exceeds the timeline length");
    }

    std::set<std::string> agent_ids;
    for (std::size_t a = 0; a < instance.agents.size(); ++a) {
        const Agent& agent = instance.agents[a];
        std::string apath = "agents[" + std::to_string(a) + "]";
        if (agent.id.empty()) flag(apath + ".id", "must be non-empty");
        if (!agent_ids.insert(agent.id).second)
            flag(apath + ".id", "duplicate agent id \"" + agent.id + "\"");

        bool jobs_ok = true;
        for (std::size_t j = 0; j < agent.jobs.size(); ++j) {
            const Job& job = agent.jobs[j];
            std::string jpath = apath + ".jobs[" + std::to_string(j) + "]";
            if (job.release < 1) {
                flag(jpath + ".release", "must be at least 1");
                jobs_ok = false;
            }
            if (T >= 1 && job.deadline > T) {
                flag(jpath + ".deadline", "exceeds the timeline length");
                jobs_ok = false;
            }
            if (job.release > job.deadline) {
                flag(jpath + ".deadline", "lies before the release slot");
                jobs_ok = false;
            }
            if (job.processing < 1) {
                flag(jpath + ".processing", "must be at least 1");
                jobs_ok = false;
            } else if (job.release <= job.deadline && job.processing > job.window()) {
                flag(jpath + ".processing", "exceeds the interval width");
                jobs_ok = false;
            }
        }
        if (jobs_ok && T >= 1 && !edf_feasible(agent.jobs, T))
            flag(apath + ".jobs", "jobs cannot all be scheduled within their intervals");
    }
    return report;
}

EventSchedule eliminate_overlap(const Instance& instance, const EventSchedule& schedule) {
    using Wide = __int128; // delay positions may exceed the timeline before the pull pass

    const Slot T = instance.timeline_length;
    Wide total_length = 0;
    for (const EventPlacement& p : schedule.placements) total_length += p.length;
    if (total_length > T) throw TotalEventLengthExceedsTimeline();

    std::vector<EventPlacement> order = schedule.placements;
    std::sort(order.begin(), order.end(), [](const EventPlacement& a, const EventPlacement& b) {
        if (a.start != b.start) return a.start < b.start;
        return a.event_id < b.event_id;
    });
    const std::size_t m = order.size();
    if (m == 0) return {};

    // Pass 1: delay each event to clear its predecessor. Every event still
    // covers a slot it covered before (the delayed start never moves past the
    // original end), so the covered union only grows.
    std::vector<Wide> delayed(m);
    Wide prev_end = 0;
    for (std::size_t k = 0; k < m; ++k) {
        delayed[k] = std::max<Wide>(order[k].start, prev_end + 1);
        prev_end = delayed[k] + order[k].length - 1;
    }

    // Pass 2: pull events back, rightmost first, just enough to end inside
    // the timeline. This is the delay pass mirrored, so coverage again grows;
    // total length <= |T| keeps every start at or above slot 1.
    std::vector<Slot> final_start(m);
    Wide limit = static_cast<Wide>(T) - order[m - 1].length + 1;
    for (std::size_t k = m; k-- > 0;) {
        final_start[k] = static_cast<Slot>(std::min(delayed[k], limit));
        // Event k-1 must end before final_start[k].
        if (k > 0) limit = static_cast<Wide>(final_start[k]) - order[k - 1].length;
    }

    EventSchedule out;
    out.placements.reserve(m);
    for (std::size_t k = 0; k < m; ++k)
        out.placements.push_back({order[k].event_id, final_start[k], order[k].length});
    return out;
}

} // namespace psba

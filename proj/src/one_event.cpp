#include "psba/one_event.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "edf_engine.hpp"

namespace psba {

namespace {

using Wide = __int128;

std::vector<int> order_from_rank(const std::vector<int>& rank) {
    std::vector<int> order(rank.size());
    for (std::size_t j = 0; j < rank.size(); ++j)
        order[static_cast<std::size_t>(rank[j])] = static_cast<int>(j);
    return order;
}

std::vector<SlotRun> merge_runs(std::vector<SlotRun> runs) {
    std::sort(runs.begin(), runs.end(),
              [](const SlotRun& a, const SlotRun& b) { return a.first < b.first; });
    std::vector<SlotRun> merged;
    for (const SlotRun& r : runs) {
        if (!merged.empty() && r.first <= merged.back().last + 1) {
            merged.back().last = std::max(merged.back().last, r.last);
        } else {
            merged.push_back(r);
        }
    }
    return merged;
}

// interval minus the union of sorted disjoint blocks
std::vector<SlotRun> subtract_blocks(SlotRun interval, const std::vector<SlotRun>& blocks) {
    std::vector<SlotRun> out;
    Wide cur = interval.first;
    for (const SlotRun& b : blocks) {
        if (b.last < interval.first) continue;
        if (b.first > interval.last) break;
        if (b.first > cur) out.push_back({static_cast<Slot>(cur), std::min(b.first - 1, interval.last)});
        cur = std::max<Wide>(cur, static_cast<Wide>(b.last) + 1);
    }
    if (cur <= interval.last) out.push_back({static_cast<Slot>(cur), interval.last});
    return out;
}

} // namespace

PiecewiseLinearFn core_agreement_fn(const CoreInstance& core) {
    const SlotRun w = core.window;
    if (w.empty()) throw std::invalid_argument("core instance has an empty validity window");
    const Slot l = core.event_length;
    const bool pivot = core.flexible_processing > 0;

    auto h = [l](const SlotRun& interval, Wide t) -> Slot {
        Wide hi = std::min<Wide>(interval.last, t + l - 1);
        Wide lo = std::max<Wide>(interval.first, t);
        return hi < lo ? 0 : static_cast<Slot>(hi - lo + 1);
    };
    auto frozen = [&](Wide t) {
        Slot r = 0;
        for (const SlotRun& b : core.rigid_blocks) r += h(b, t);
        return r;
    };
    auto room_used = [&](Wide t) {
        Slot a = 0;
        for (const SlotRun& i : core.flexible_intervals) a += h(i, t);
        return a;
    };
    Slot room = 0;
    for (const SlotRun& i : core.flexible_intervals) room += i.size();
    const Slot slack = room - core.flexible_processing; // outside room the pivot can spare
    assert(slack >= 0);
    auto value = [&](Wide t) -> Slot {
        Slot v = l - frozen(t);
        if (pivot) v -= std::max<Slot>(room_used(t) - slack, 0);
        return v;
    };

    std::vector<Slot> xs{w.first};
    auto add_kinks = [&](const SlotRun& interval) {
        Wide rise = static_cast<Wide>(interval.first) - l;
        Wide shed = static_cast<Wide>(interval.last) + 1 - l;
        for (Wide k : {rise, std::min<Wide>(interval.first, shed),
                       std::max<Wide>(interval.first, shed), static_cast<Wide>(interval.last) + 1})
            if (k > w.first && k < w.last) xs.push_back(static_cast<Slot>(k));
    };
    for (const SlotRun& b : core.rigid_blocks) add_kinks(b);
    for (const SlotRun& i : core.flexible_intervals) add_kinks(i);
    if (w.last > w.first) xs.push_back(w.last);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    // The clamp max(room_used - slack, 0) may switch on strictly between two
    // kinks; bracket the crossing with the two adjacent integers so every
    // remaining piece is linear with exact integer endpoints.
    if (pivot) {
        std::vector<Slot> extra;
        for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
            Slot x0 = xs[k], x1 = xs[k + 1];
            if (x1 - x0 <= 1) continue; // no interior integers to protect
            Wide a0 = room_used(x0) - slack;
            Wide a1 = room_used(x1) - slack;
            if ((a0 < 0 && a1 > 0) || (a0 > 0 && a1 < 0)) {
                Wide num = -a0 * (x1 - x0);
                Wide den = a1 - a0; // same sign as num, so the quotient is positive
                Wide fl = x0 + num / den;
                extra.push_back(static_cast<Slot>(fl));
                if (num % den != 0) extra.push_back(static_cast<Slot>(fl + 1));
            }
        }
        xs.insert(xs.end(), extra.begin(), extra.end());
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    }

    std::vector<PiecewiseLinearFn::Point> pts;
    pts.reserve(xs.size());
    for (Slot x : xs) pts.push_back({x, value(x)});
    return PiecewiseLinearFn(std::move(pts));
}

EdfPartition edf_partition(const std::vector<Job>& jobs, Slot timeline_length) {
    EdfPartition part;
    std::vector<int> rank_fwd = detail::deadline_ranks(jobs);
    part.pi = order_from_rank(rank_fwd);
    part.pi_bar = order_from_rank(detail::release_desc_ranks(jobs));

    detail::ForwardEdfResult fwd = detail::forward_edf(jobs, rank_fwd, timeline_length);
    Slot cursor = 1;
    for (const detail::EdfRun& e : fwd.trace) {
        if (e.run.first > cursor) part.segments.push_back({{cursor, e.run.first - 1}, -1});
        part.segments.push_back({e.run, e.job});
        if (e.run.last == timeline_length) return part;
        cursor = e.run.last + 1;
    }
    part.segments.push_back({{cursor, timeline_length}, -1});
    return part;
}

JobSchedule bi_edf_schedule(Slot placement_start, const std::vector<Job>& jobs,
                            Slot timeline_length, const std::vector<int>& pi,
                            const std::vector<int>& pi_bar, int j_hat) {
    const int n = static_cast<int>(jobs.size());
    if (placement_start < 1 || placement_start > timeline_length)
        throw std::invalid_argument("placement start outside the timeline");
    if (j_hat < -1 || j_hat >= n) throw std::invalid_argument("bad pivot job index");

    std::vector<int> rank_fwd(jobs.size()), rank_bwd(jobs.size());
    for (std::size_t k = 0; k < pi.size(); ++k) rank_fwd[static_cast<std::size_t>(pi[k])] = static_cast<int>(k);
    for (std::size_t k = 0; k < pi_bar.size(); ++k)
        rank_bwd[static_cast<std::size_t>(pi_bar[k])] = static_cast<int>(k);
    if (j_hat >= 0) rank_bwd[static_cast<std::size_t>(j_hat)] = n; // demote: pivot runs last, hugging the placement

    detail::ForwardEdfResult stage1 = detail::forward_edf(jobs, rank_fwd, placement_start - 1);
    std::vector<std::vector<SlotRun>> stage2 =
        detail::backward_edf(jobs, rank_bwd, stage1.remaining, placement_start, timeline_length);

    JobSchedule schedule;
    schedule.runs.resize(jobs.size());
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        std::vector<SlotRun>& runs = schedule.runs[j];
        runs = std::move(stage1.runs[j]);
        for (const SlotRun& r : stage2[j]) {
            if (!runs.empty() && runs.back().last + 1 == r.first) {
                runs.back().last = r.last;
            } else {
                runs.push_back(r);
            }
        }
    }
    return schedule;
}

PiecewiseLinearFn agent_agreement_curve(const Agent& agent, Slot event_length,
                                        Slot timeline_length) {
    if (event_length < 1 || event_length > timeline_length)
        throw NoValidPlacement("event of length " + std::to_string(event_length) +
                               " cannot be placed on the timeline");
    const Slot hi = timeline_length - event_length + 1;
    EdfPartition part = edf_partition(agent.jobs, timeline_length);

    PiecewiseLinearFn curve;
    for (const EdfSegment& seg : part.segments) {
        if (seg.run.first > hi) break;
        CoreInstance core;
        core.event_length = event_length;
        core.window = {seg.run.first, std::min(seg.run.last, hi)};

        JobSchedule frozen = bi_edf_schedule(seg.run.first, agent.jobs, timeline_length, part.pi,
                                             part.pi_bar, seg.job);
        std::vector<SlotRun> others;
        for (std::size_t j = 0; j < agent.jobs.size(); ++j) {
            if (static_cast<int>(j) == seg.job) continue;
            others.insert(others.end(), frozen.runs[j].begin(), frozen.runs[j].end());
        }
        core.rigid_blocks = merge_runs(std::move(others));
        if (seg.job >= 0) {
            const Job& owner = agent.jobs[static_cast<std::size_t>(seg.job)];
            core.flexible_processing = owner.processing;
            core.flexible_intervals = subtract_blocks(owner.interval(), core.rigid_blocks);
        }
        curve.append_piece(core_agreement_fn(core));
    }
    return curve;
}

std::pair<Slot, Slot> best_placement(const Instance& instance) {
    if (instance.events.size() != 1)
        throw std::invalid_argument("exact placement needs exactly one event");
    const Slot l = instance.events.front().length;
    const Slot T = instance.timeline_length;
    if (l < 1 || l > T)
        throw NoValidPlacement("event of length " + std::to_string(l) +
                               " cannot be placed on the timeline");
    if (instance.agents.empty()) return {1, 0};

    std::vector<PiecewiseLinearFn> curves;
    curves.reserve(instance.agents.size());
    for (const Agent& agent : instance.agents)
        curves.push_back(agent_agreement_curve(agent, l, T));
    return PiecewiseLinearFn::sum(curves).max_on({1, T - l + 1});
}

} // namespace psba

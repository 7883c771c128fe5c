#include "psba/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace psba {

namespace {

std::vector<SlotRun> merge_spans(std::vector<SlotRun> spans, Slot timeline_length) {
    std::vector<SlotRun> clipped;
    for (SlotRun s : spans) {
        s.first = std::max<Slot>(s.first, 1);
        s.last = std::min(s.last, timeline_length);
        if (!s.empty()) clipped.push_back(s);
    }
    std::sort(clipped.begin(), clipped.end(),
              [](const SlotRun& a, const SlotRun& b) { return a.first < b.first; });
    std::vector<SlotRun> merged;
    for (const SlotRun& s : clipped) {
        if (!merged.empty() && s.first <= merged.back().last + 1) {
            merged.back().last = std::max(merged.back().last, s.last);
        } else {
            merged.push_back(s);
        }
    }
    return merged;
}

// Covered spans must arrive merged and disjoint.
SegmentDecomposition decompose_spans(const std::vector<Job>& jobs,
                                     const std::vector<SlotRun>& covered, Slot timeline_length) {
    SegmentDecomposition d;
    std::vector<Slot> starts{1};
    auto cut = [&](SlotRun r) {
        d.breakpoints.push_back(r.first);
        d.breakpoints.push_back(r.last);
        starts.push_back(r.first);
        if (r.last < timeline_length) starts.push_back(r.last + 1);
    };
    for (const Job& j : jobs) cut(j.interval());
    for (const SlotRun& s : covered) cut(s);

    std::sort(d.breakpoints.begin(), d.breakpoints.end());
    d.breakpoints.erase(std::unique(d.breakpoints.begin(), d.breakpoints.end()),
                        d.breakpoints.end());
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

    std::size_t c = 0; // covered spans and segments are both left to right
    for (std::size_t k = 0; k < starts.size(); ++k) {
        SlotRun run{starts[k], k + 1 < starts.size() ? starts[k + 1] - 1 : timeline_length};
        while (c < covered.size() && covered[c].last < run.first) ++c;
        bool in = c < covered.size() && covered[c].contains(run.first);
        d.segments.push_back({run, in});
    }
    return d;
}

// Min-cost flow by successive shortest paths. The network is tiny (jobs +
// segments + 2 nodes) but capacities can be timeline-sized, so augmentations
// push full bottlenecks, never single units.
struct FlowNetwork {
    struct Edge {
        int to;
        Slot cap;
        int cost;
        int rev; // index of the reverse edge in adj[to]
    };
    std::vector<std::vector<Edge>> adj;

    explicit FlowNetwork(int nodes) : adj(static_cast<std::size_t>(nodes)) {}

    void add_edge(int from, int to, Slot cap, int cost) {
        adj[static_cast<std::size_t>(from)].push_back(
            {to, cap, cost, static_cast<int>(adj[static_cast<std::size_t>(to)].size())});
        adj[static_cast<std::size_t>(to)].push_back(
            {from, 0, -cost, static_cast<int>(adj[static_cast<std::size_t>(from)].size()) - 1});
    }

    // Sends `demand` units from source to sink or throws InfeasibleJobSet.
    // Returns the total cost. SPFA keeps relaxation deterministic: strict
    // improvements only, edges visited in insertion order.
    Slot send(int source, int sink, Slot demand) {
        const Slot inf = std::numeric_limits<Slot>::max();
        Slot cost = 0;
        while (demand > 0) {
            std::vector<Slot> dist(adj.size(), inf);
            std::vector<std::pair<int, int>> pred(adj.size(), {-1, -1}); // (node, edge index)
            std::vector<char> queued(adj.size(), 0);
            std::deque<int> queue;
            dist[static_cast<std::size_t>(source)] = 0;
            queue.push_back(source);
            queued[static_cast<std::size_t>(source)] = 1;
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                queued[static_cast<std::size_t>(u)] = 0;
                const auto& edges = adj[static_cast<std::size_t>(u)];
                for (std::size_t k = 0; k < edges.size(); ++k) {
                    const Edge& e = edges[k];
                    if (e.cap <= 0) continue;
                    Slot nd = dist[static_cast<std::size_t>(u)] + e.cost;
                    if (nd < dist[static_cast<std::size_t>(e.to)]) {
                        dist[static_cast<std::size_t>(e.to)] = nd;
                        pred[static_cast<std::size_t>(e.to)] = {u, static_cast<int>(k)};
                        if (!queued[static_cast<std::size_t>(e.to)]) {
                            queue.push_back(e.to);
                            queued[static_cast<std::size_t>(e.to)] = 1;
                        }
                    }
                }
            }
            if (dist[static_cast<std::size_t>(sink)] == inf) throw InfeasibleJobSet();

            Slot push = demand;
            for (int v = sink; v != source;) {
                auto [u, k] = pred[static_cast<std::size_t>(v)];
                push = std::min(push, adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)].cap);
                v = u;
            }
            for (int v = sink; v != source;) {
                auto [u, k] = pred[static_cast<std::size_t>(v)];
                Edge& e = adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)];
                e.cap -= push;
                adj[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)].cap += push;
                v = u;
            }
            cost += push * dist[static_cast<std::size_t>(sink)];
            demand -= push;
        }
        return cost;
    }
};

} // namespace

AgreementResult agreement_on_spans(const std::vector<Job>& jobs, std::vector<SlotRun> spans,
                                   Slot timeline_length) {
    AgreementResult result;
    std::vector<SlotRun> covered = merge_spans(std::move(spans), timeline_length);
    result.decomposition = decompose_spans(jobs, covered, timeline_length);
    result.covered_slots = result.decomposition.covered_slots();
    const auto& segments = result.decomposition.segments;
    const int n = static_cast<int>(jobs.size());
    const int K = static_cast<int>(segments.size());
    result.units.assign(segments.size(), {});

    Slot demand = 0;
    for (const Job& j : jobs) demand += j.processing;
    if (demand == 0) {
        result.agreement = result.covered_slots;
        return result;
    }

    // Nodes: 0 source, 1..n jobs, n+1..n+K segments, n+K+1 sink.
    FlowNetwork net(n + K + 2);
    const int source = 0;
    const int sink = n + K + 1;
    for (int j = 0; j < n; ++j) net.add_edge(source, 1 + j, jobs[static_cast<std::size_t>(j)].processing, 0);
    for (int j = 0; j < n; ++j) {
        SlotRun window = jobs[static_cast<std::size_t>(j)].interval();
        for (int k = 0; k < K; ++k)
            if (window.contains(segments[static_cast<std::size_t>(k)].run))
                net.add_edge(1 + j, 1 + n + k, jobs[static_cast<std::size_t>(j)].processing, 0);
    }
    for (int k = 0; k < K; ++k) {
        const Segment& s = segments[static_cast<std::size_t>(k)];
        net.add_edge(1 + n + k, sink, s.run.size(), s.event_covered ? 1 : 0);
    }

    Slot cost = net.send(source, sink, demand);
    result.agreement = result.covered_slots - cost;

    // Job -> segment flow equals the reverse edge's gained capacity.
    for (int j = 0; j < n; ++j) {
        for (const FlowNetwork::Edge& e : net.adj[static_cast<std::size_t>(1 + j)]) {
            if (e.to == source) continue;
            int k = e.to - 1 - n;
            Slot sent = net.adj[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)].cap;
            if (sent > 0) result.units[static_cast<std::size_t>(k)].emplace_back(j, sent);
        }
    }
    return result;
}

SegmentDecomposition decompose(const std::vector<Job>& jobs, const EventSchedule& schedule,
                               Slot timeline_length) {
    std::vector<SlotRun> spans;
    spans.reserve(schedule.placements.size());
    for (const EventPlacement& p : schedule.placements) spans.push_back(p.span());
    return decompose_spans(jobs, merge_spans(std::move(spans), timeline_length), timeline_length);
}

AgreementResult max_agreement(const Agent& agent, const EventSchedule& schedule,
                              Slot timeline_length, Counters* counters) {
    if (counters != nullptr) ++counters->flow_calls;
    std::vector<SlotRun> spans;
    spans.reserve(schedule.placements.size());
    for (const EventPlacement& p : schedule.placements) spans.push_back(p.span());
    return agreement_on_spans(agent.jobs, std::move(spans), timeline_length);
}

Slot total_agreement(const Instance& instance, const EventSchedule& schedule, Counters* counters) {
    Slot total = 0;
    for (const Agent& agent : instance.agents)
        total += max_agreement(agent, schedule, instance.timeline_length, counters).agreement;
    return total;
}

std::vector<AgreementRun> agreement_runs(const AgreementResult& result) {
    std::vector<AgreementRun> runs;
    for (std::size_t k = 0; k < result.decomposition.segments.size(); ++k) {
        const Segment& s = result.decomposition.segments[k];
        if (!s.event_covered) continue;
        Slot used = 0;
        for (const auto& [job, units] : result.units[k]) used += units;
        Slot free = s.run.size() - used;
        if (free > 0) runs.push_back({static_cast<int>(k), {s.run.last - free + 1, s.run.last}});
    }
    return runs;
}

std::vector<AgreementRun> agreement_segments(const Agent& agent, const EventSchedule& schedule,
                                             Slot timeline_length) {
    return agreement_runs(max_agreement(agent, schedule, timeline_length));
}

JobSchedule packed_schedule(const Agent& agent, const AgreementResult& result) {
    JobSchedule schedule;
    schedule.runs.resize(agent.jobs.size());
    for (std::size_t k = 0; k < result.decomposition.segments.size(); ++k) {
        Slot at = result.decomposition.segments[k].run.first;
        for (const auto& [job, units] : result.units[k]) {
            auto& runs = schedule.runs[static_cast<std::size_t>(job)];
            SlotRun r{at, at + units - 1};
            if (!runs.empty() && runs.back().last + 1 == r.first) {
                runs.back().last = r.last;
            } else {
                runs.push_back(r);
            }
            at += units;
        }
    }
    return schedule;
}

} // namespace psba

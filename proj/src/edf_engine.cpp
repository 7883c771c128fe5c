#include "edf_engine.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace psba::detail {

namespace {

// Min-heap keyed by rank; ranks are unique so ordering is total.
using RankHeap =
    std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>>;

void append_run(std::vector<SlotRun>& runs, SlotRun r) {
    if (!runs.empty() && runs.back().last + 1 == r.first) {
        runs.back().last = r.last;
    } else {
        runs.push_back(r);
    }
}

std::vector<int> ranks_by(const std::vector<Job>& jobs,
                          bool (*before)(const Job&, const Job&)) {
    std::vector<int> order(jobs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return before(jobs[static_cast<std::size_t>(a)], jobs[static_cast<std::size_t>(b)]);
    });
    std::vector<int> rank(jobs.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        rank[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    return rank;
}

} // namespace

std::vector<int> deadline_ranks(const std::vector<Job>& jobs) {
    return ranks_by(jobs, [](const Job& a, const Job& b) {
        if (a.deadline != b.deadline) return a.deadline < b.deadline;
        return a.id < b.id;
    });
}

std::vector<int> release_desc_ranks(const std::vector<Job>& jobs) {
    return ranks_by(jobs, [](const Job& a, const Job& b) {
        if (a.release != b.release) return a.release > b.release;
        return a.id < b.id;
    });
}

ForwardEdfResult forward_edf(const std::vector<Job>& jobs, const std::vector<int>& rank,
                             Slot horizon_last) {
    const int n = static_cast<int>(jobs.size());
    ForwardEdfResult out;
    out.runs.resize(jobs.size());
    out.remaining.resize(jobs.size());
    for (int j = 0; j < n; ++j)
        out.remaining[static_cast<std::size_t>(j)] = jobs[static_cast<std::size_t>(j)].processing;

    auto finish = [&]() -> ForwardEdfResult&& {
        for (int j = 0; j < n; ++j)
            if (out.remaining[static_cast<std::size_t>(j)] > 0 &&
                jobs[static_cast<std::size_t>(j)].deadline <= horizon_last)
                throw InfeasibleJobSet();
        return std::move(out);
    };
    if (horizon_last < 1) return finish();

    std::vector<int> by_release(jobs.size());
    std::iota(by_release.begin(), by_release.end(), 0);
    std::sort(by_release.begin(), by_release.end(), [&](int a, int b) {
        return jobs[static_cast<std::size_t>(a)].release < jobs[static_cast<std::size_t>(b)].release;
    });

    RankHeap ready;
    std::size_t next = 0; // index into by_release
    Slot cursor = 1;
    auto admit = [&]() {
        while (next < by_release.size() &&
               jobs[static_cast<std::size_t>(by_release[next])].release <= cursor) {
            int j = by_release[next++];
            ready.emplace(rank[static_cast<std::size_t>(j)], j);
        }
    };

    // cursor never exceeds horizon_last, so cursor arithmetic cannot overflow.
    while (true) {
        admit();
        if (ready.empty()) {
            if (next >= by_release.size()) break;
            Slot r = jobs[static_cast<std::size_t>(by_release[next])].release;
            if (r > horizon_last) break;
            cursor = r;
            continue;
        }
        int j = ready.top().second;
        ready.pop();
        const Job& job = jobs[static_cast<std::size_t>(j)];
        Slot& rem = out.remaining[static_cast<std::size_t>(j)];
        if (job.deadline < cursor) throw InfeasibleJobSet();

        Slot run = std::min(rem, std::min(horizon_last, job.deadline) - cursor + 1);
        if (next < by_release.size()) {
            Slot gap = jobs[static_cast<std::size_t>(by_release[next])].release - cursor;
            run = std::min(run, gap); // gap >= 1: releases <= cursor were admitted
        }
        SlotRun piece{cursor, cursor + run - 1};
        append_run(out.runs[static_cast<std::size_t>(j)], piece);
        if (!out.trace.empty() && out.trace.back().job == j &&
            out.trace.back().run.last + 1 == piece.first) {
            out.trace.back().run.last = piece.last;
        } else {
            out.trace.push_back({piece, j});
        }
        rem -= run;
        if (rem > 0 && piece.last == job.deadline) throw InfeasibleJobSet();
        if (piece.last == horizon_last) break;
        cursor = piece.last + 1;
        if (rem > 0) ready.emplace(rank[static_cast<std::size_t>(j)], j);
    }
    return finish();
}

std::vector<std::vector<SlotRun>> backward_edf(const std::vector<Job>& jobs,
                                               const std::vector<int>& rank,
                                               std::vector<Slot> remaining, Slot floor_first,
                                               Slot timeline_length) {
    const int n = static_cast<int>(jobs.size());
    std::vector<std::vector<SlotRun>> runs(jobs.size());
    auto finish = [&]() -> std::vector<std::vector<SlotRun>>&& {
        for (int j = 0; j < n; ++j)
            if (remaining[static_cast<std::size_t>(j)] > 0) throw InfeasibleJobSet();
        for (auto& r : runs)
            std::reverse(r.begin(), r.end());
        return std::move(runs);
    };
    if (floor_first > timeline_length) return finish();

    std::vector<int> by_deadline; // jobs with work, descending deadline
    for (int j = 0; j < n; ++j)
        if (remaining[static_cast<std::size_t>(j)] > 0) by_deadline.push_back(j);
    std::sort(by_deadline.begin(), by_deadline.end(), [&](int a, int b) {
        return jobs[static_cast<std::size_t>(a)].deadline > jobs[static_cast<std::size_t>(b)].deadline;
    });

    RankHeap ready;
    std::size_t next = 0;
    Slot cursor = timeline_length;
    auto admit = [&]() {
        while (next < by_deadline.size() &&
               jobs[static_cast<std::size_t>(by_deadline[next])].deadline >= cursor) {
            int j = by_deadline[next++];
            ready.emplace(rank[static_cast<std::size_t>(j)], j);
        }
    };

    while (true) {
        admit();
        if (ready.empty()) {
            if (next >= by_deadline.size()) break;
            Slot d = jobs[static_cast<std::size_t>(by_deadline[next])].deadline;
            if (d < floor_first) break;
            cursor = d;
            continue;
        }
        int j = ready.top().second;
        ready.pop();
        const Job& job = jobs[static_cast<std::size_t>(j)];
        Slot& rem = remaining[static_cast<std::size_t>(j)];
        Slot floor_j = std::max(job.release, floor_first);
        if (floor_j > cursor) throw InfeasibleJobSet(); // usable window already passed

        Slot run = std::min(rem, cursor - floor_j + 1);
        if (next < by_deadline.size()) {
            Slot gap = cursor - jobs[static_cast<std::size_t>(by_deadline[next])].deadline;
            run = std::min(run, gap); // gap >= 1: deadlines >= cursor were admitted
        }
        SlotRun piece{cursor - run + 1, cursor};
        auto& mine = runs[static_cast<std::size_t>(j)];
        if (!mine.empty() && mine.back().first == piece.last + 1) {
            mine.back().first = piece.first; // runs collected right-to-left
        } else {
            mine.push_back(piece);
        }
        rem -= run;
        if (rem > 0 && piece.first == floor_j) throw InfeasibleJobSet();
        if (piece.first == floor_first) break;
        cursor = piece.first - 1;
        if (rem > 0) ready.emplace(rank[static_cast<std::size_t>(j)], j);
    }
    return finish();
}

} // namespace psba::detail

#include "psba/matroid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "psba/flow.hpp"

namespace psba {

namespace {

constexpr Slot kUnitCap = 64;

std::vector<Slot> canonical_slots(const SchedulingMatroid& m, const std::vector<Slot>& slots) {
    std::vector<Slot> out(slots);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (Slot s : out)
        if (s < 1 || s > m.ground_set_length)
            throw std::invalid_argument("slot outside the ground set: " + std::to_string(s));
    return out;
}

} // namespace

SchedulingMatroid make_matroid(const std::vector<Job>& jobs, Slot timeline_length) {
    if (timeline_length < 1) throw std::invalid_argument("timeline must have at least one slot");
    Slot total = 0;
    for (const Job& j : jobs) {
        if (j.release < 1 || j.deadline > timeline_length || j.release > j.deadline ||
            j.processing < 1 || j.processing > j.window())
            throw std::invalid_argument("malformed job interval");
        total += j.processing;
        if (total > kUnitCap)
            throw std::invalid_argument("total processing exceeds the matroid cap of 64 units");
    }
    SchedulingMatroid m;
    m.ground_set_length = timeline_length;
    for (const Job& j : jobs)
        for (Slot u = 0; u < j.processing; ++u)
            m.unit_jobs.push_back({j.id, j.release, j.deadline, 1});
    return m;
}

bool is_independent(const SchedulingMatroid& m, const std::vector<Slot>& slots) {
    std::vector<Slot> blocked = canonical_slots(m, slots);
    const int n = static_cast<int>(m.unit_jobs.size());

    // A maximum matching can always be rewritten to use, per interval, only
    // the leftmost n free slots, so the materialized universe stays small no
    // matter how long the timeline is.
    std::set<Slot> universe;
    for (const Job& j : m.unit_jobs) {
        Slot s = j.release;
        auto it = std::lower_bound(blocked.begin(), blocked.end(), s);
        for (int taken = 0; taken < n;) {
            while (it != blocked.end() && *it < s) ++it;
            bool free = it == blocked.end() || *it != s;
            if (free) {
                universe.insert(s);
                ++taken;
            }
            if (s == j.deadline) break; // guard before ++s: deadlines may sit at the int64 limit
            ++s;
        }
    }
    std::vector<Slot> slot_of(universe.begin(), universe.end());
    std::map<Slot, int> index_of;
    for (std::size_t k = 0; k < slot_of.size(); ++k) index_of[slot_of[k]] = static_cast<int>(k);

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        const Job& j = m.unit_jobs[static_cast<std::size_t>(u)];
        auto lo = index_of.lower_bound(j.release);
        for (auto it2 = lo; it2 != index_of.end() && it2->first <= j.deadline; ++it2)
            adj[static_cast<std::size_t>(u)].push_back(it2->second);
    }

    std::vector<int> match(slot_of.size(), -1);
    std::vector<char> seen;
    auto augment = [&](auto&& self, int u) -> bool {
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (seen[static_cast<std::size_t>(v)]) continue;
            seen[static_cast<std::size_t>(v)] = 1;
            if (match[static_cast<std::size_t>(v)] < 0 || self(self, match[static_cast<std::size_t>(v)])) {
                match[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < n; ++u) {
        seen.assign(slot_of.size(), 0);
        if (!augment(augment, u)) return false;
    }
    return true;
}

Slot rank(const SchedulingMatroid& m, const std::vector<Slot>& slots) {
    std::vector<Slot> picked = canonical_slots(m, slots);
    std::vector<SlotRun> spans;
    for (Slot s : picked) {
        if (!spans.empty() && spans.back().last + 1 == s) {
            spans.back().last = s;
        } else {
            spans.push_back({s, s});
        }
    }
    return agreement_on_spans(m.unit_jobs, std::move(spans), m.ground_set_length).agreement;
}

Slot exchange_witness(const SchedulingMatroid& m, const std::vector<Slot>& smaller,
                      const std::vector<Slot>& larger) {
    std::vector<Slot> a = canonical_slots(m, smaller);
    std::vector<Slot> b = canonical_slots(m, larger);
    std::vector<Slot> candidates;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(candidates));
    for (Slot x : candidates) {
        std::vector<Slot> extended = a;
        extended.push_back(x);
        if (is_independent(m, extended)) return x;
    }
    throw NoWitness();
}

} // namespace psba

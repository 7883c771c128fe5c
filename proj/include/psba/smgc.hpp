#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "psba/types.hpp"

namespace psba::smgc {

template <typename E>
struct RoundLog {
    std::size_t group;
    E element;
    Slot marginal;
};

template <typename E>
struct Result {
    std::vector<E> selection; // in commit order, at most one element per group
    std::vector<RoundLog<E>> rounds;
    long long objective_calls = 0; // distinct objective evaluations (memo misses)
    long long oracle_calls = 0;    // one per (round, unused group) query
};

// Greedy selection over a ground set partitioned into `group_count` groups,
// committing at most `capacity` elements, one per group. Each round queries
// the oracle once per unused group and commits the candidate whose realized
// marginal is largest; with a monotone submodular objective and an oracle
// whose candidates are within a factor alpha of the group-best marginal,
// the result is within OPT / (alpha + 1).
//
// f is treated as a set function: it receives selections sorted ascending and
// is evaluated through a memo, so callers pay once per distinct selection.
// Ties go to the lowest group index; order within a group is the oracle's
// business. Elements with zero (or negative) marginal are still committed.
// `contains`, when provided, checks oracle outputs against their group and
// turns violations into OracleContractViolation.
template <typename E, typename F, typename Oracle>
Result<E> greedy(std::size_t group_count, std::size_t capacity, F&& f, Oracle&& oracle,
                 std::function<bool(const E&, std::size_t)> contains = nullptr) {
    Result<E> out;
    std::map<std::vector<E>, Slot> memo;
    auto eval = [&](std::vector<E> selection) -> Slot {
        std::sort(selection.begin(), selection.end());
        auto it = memo.find(selection);
        if (it != memo.end()) return it->second;
        ++out.objective_calls;
        Slot value = f(static_cast<const std::vector<E>&>(selection));
        memo.emplace(std::move(selection), value);
        return value;
    };

    std::vector<char> used(group_count, 0);
    const std::size_t rounds = std::min(capacity, group_count);
    for (std::size_t r = 0; r < rounds; ++r) {
        Slot base = eval(out.selection);
        std::optional<RoundLog<E>> best;
        for (std::size_t g = 0; g < group_count; ++g) {
            if (used[g]) continue;
            ++out.oracle_calls;
            E candidate = oracle(static_cast<const std::vector<E>&>(out.selection), g);
            if (contains && !contains(candidate, g)) throw OracleContractViolation();
            std::vector<E> trial = out.selection;
            trial.push_back(candidate);
            Slot marginal = eval(std::move(trial)) - base;
            if (!best || marginal > best->marginal) best = RoundLog<E>{g, candidate, marginal};
        }
        used[best->group] = 1;
        out.selection.push_back(best->element);
        out.rounds.push_back(*best);
    }
    return out;
}

} // namespace psba::smgc

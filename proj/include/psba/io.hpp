#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psba/types.hpp"

namespace psba {

// Input rejection with the offending JSON path in the message.
struct ParseError : Error {
    using Error::Error;
};

// Instance files:
// { "timeline_length": N,
//   "events": [{"id": "...", "length": N}, ...],
//   "agents": [{"id": "...", "jobs": [{"release": N, "deadline": N, "processing": N}, ...]}] }
// Job ids are synthesized as "j1", "j2", ... per agent on parse and are not
// serialized. serialize/parse round-trip losslessly; serialization of a
// parsed canonical file reproduces it byte for byte.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

struct SolutionFile {
    std::string algorithm;
    std::vector<std::pair<std::string, Slot>> placements; // (event id, start)
    std::vector<std::pair<std::string, Slot>> per_agent;  // (agent id, agreement)
    std::optional<Slot> total;
    std::optional<std::uint64_t> seed;
};

SolutionFile parse_solution(const std::string& text);
std::string serialize_solution(const SolutionFile& solution);

// Resolves solution placements against the instance: unknown event ids,
// duplicates, and out-of-range starts raise ParseError.
EventSchedule resolve_placements(const Instance& instance,
                                 const std::vector<std::pair<std::string, Slot>>& placements);

// Deterministic timeline picture: one row per agent plus an event row,
// columns segment-compressed (one column per maximal run between interval
// boundaries, width capped), so billion-slot timelines render small. Job
// runs come from the canonical packed schedules, agreement runs are
// highlighted. Integer coordinates only; equal inputs give equal bytes.
std::string render_svg(const Instance& instance, const EventSchedule& schedule);

} // namespace psba

#include "psba/io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"
#include "psba/flow.hpp"

namespace psba {
namespace {

using nlohmann::json;

const json& field(const json& obj, const char* name, const std::string& path) {
    if (!obj.is_object())
        throw ParseError(path.empty() ? std::string("expected object")
                                      : path + ": expected object");
    auto it = obj.find(name);
    if (it == obj.end()) {
        std::string full = path.empty() ? name : path + "." + name;
        throw ParseError(full + ": missing field");
    }
    return *it;
}

Slot as_int(const json& value, const std::string& path) {
    if (!value.is_number_integer())
        throw ParseError(path + ": expected integer");
    if (value.is_number_unsigned() &&
        value.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<Slot>::max()))
        throw ParseError(path + ": integer out of range");
    return value.get<Slot>();
}

std::string as_string(const json& value, const std::string& path) {
    if (!value.is_string())
        throw ParseError(path + ": expected string");
    return value.get<std::string>();
}

const json& as_array(const json& value, const std::string& path) {
    if (!value.is_array())
        throw ParseError(path + ": expected array");
    return value;
}

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw ParseError("invalid json");
    return doc;
}

std::string indexed(const std::string& base, std::size_t i) {
    return base + "[" + std::to_string(i) + "]";
}

} // namespace

Instance parse_instance(const std::string& text) {
    json doc = parse_document(text);
    Instance instance;
    instance.timeline_length = as_int(field(doc, "timeline_length", ""), "timeline_length");
    const json& events = as_array(field(doc, "events", ""), "events");
    for (std::size_t i = 0; i < events.size(); ++i) {
        std::string path = indexed("events", i);
        Event event;
        event.id = as_string(field(events[i], "id", path), path + ".id");
        event.length = as_int(field(events[i], "length", path), path + ".length");
        instance.events.push_back(std::move(event));
    }
    const json& agents = as_array(field(doc, "agents", ""), "agents");
    for (std::size_t i = 0; i < agents.size(); ++i) {
        std::string path = indexed("agents", i);
        Agent agent;
        agent.id = as_string(field(agents[i], "id", path), path + ".id");
        const json& jobs = as_array(field(agents[i], "jobs", path), path + ".jobs");
        for (std::size_t k = 0; k < jobs.size(); ++k) {
            std::string jpath = indexed(path + ".jobs", k);
            Job job;
            job.id = "j" + std::to_string(k + 1);
            job.release = as_int(field(jobs[k], "release", jpath), jpath + ".release");
            job.deadline = as_int(field(jobs[k], "deadline", jpath), jpath + ".deadline");
            job.processing = as_int(field(jobs[k], "processing", jpath), jpath + ".processing");
            agent.jobs.push_back(std::move(job));
        }
        instance.agents.push_back(std::move(agent));
    }
    return instance;
}

std::string serialize_instance(const Instance& instance) {
    json doc;
    doc["timeline_length"] = instance.timeline_length;
    doc["events"] = json::array();
    for (const Event& event : instance.events)
        doc["events"].push_back({{"id", event.id}, {"length", event.length}});
    doc["agents"] = json::array();
    for (const Agent& agent : instance.agents) {
        json jobs = json::array();
        for (const Job& job : agent.jobs)
            jobs.push_back({{"release", job.release},
                            {"deadline", job.deadline},
                            {"processing", job.processing}});
        doc["agents"].push_back({{"id", agent.id}, {"jobs", std::move(jobs)}});
    }
    return doc.dump(2) + "\n";
}

SolutionFile parse_solution(const std::string& text) {
    json doc = parse_document(text);
    SolutionFile solution;
    if (doc.contains("algorithm"))
        solution.algorithm = as_string(doc["algorithm"], "algorithm");
    const json& placements = as_array(field(doc, "placements", ""), "placements");
    for (std::size_t i = 0; i < placements.size(); ++i) {
        std::string path = indexed("placements", i);
        solution.placements.emplace_back(
            as_string(field(placements[i], "event", path), path + ".event"),
            as_int(field(placements[i], "start", path), path + ".start"));
    }
    if (doc.contains("per_agent")) {
        const json& per_agent = as_array(doc["per_agent"], "per_agent");
        for (std::size_t i = 0; i < per_agent.size(); ++i) {
            std::string path = indexed("per_agent", i);
            solution.per_agent.emplace_back(
                as_string(field(per_agent[i], "agent", path), path + ".agent"),
                as_int(field(per_agent[i], "agreement", path), path + ".agreement"));
        }
    }
    if (doc.contains("total"))
        solution.total = as_int(doc["total"], "total");
    if (doc.contains("seed")) {
        const json& seed = doc["seed"];
        if (!seed.is_number_integer() || (!seed.is_number_unsigned() && seed.get<Slot>() < 0))
            throw ParseError("seed: expected non-negative integer");
        solution.seed = seed.get<std::uint64_t>();
    }
    return solution;
}

std::string serialize_solution(const SolutionFile& solution) {
    json doc;
    doc["algorithm"] = solution.algorithm;
    doc["placements"] = json::array();
    for (const auto& [event, start] : solution.placements)
        doc["placements"].push_back({{"event", event}, {"start", start}});
    doc["per_agent"] = json::array();
    for (const auto& [agent, agreement] : solution.per_agent)
        doc["per_agent"].push_back({{"agent", agent}, {"agreement", agreement}});
    if (solution.total)
        doc["total"] = *solution.total;
    if (solution.seed)
        doc["seed"] = *solution.seed;
    return doc.dump(2) + "\n";
}

EventSchedule resolve_placements(const Instance& instance,
                                 const std::vector<std::pair<std::string, Slot>>& placements) {
    EventSchedule schedule;
    for (std::size_t i = 0; i < placements.size(); ++i) {
        std::string path = indexed("placements", i);
        const auto& [event_id, start] = placements[i];
        const Event* event = instance.find_event(event_id);
        if (event == nullptr)
            throw ParseError(path + ".event: unknown event \"" + event_id + "\"");
        if (schedule.has_event(event_id))
            throw ParseError(path + ".event: duplicate event \"" + event_id + "\"");
        if (start < 1 || start > instance.timeline_length - event->length + 1)
            throw ParseError(path + ".start: event \"" + event_id +
                             "\" does not fit at " + std::to_string(start));
        schedule.placements.push_back({event_id, start, event->length});
    }
    return schedule;
}

namespace {

std::string xml_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

std::string render_svg(const Instance& instance, const EventSchedule& schedule) {
    const Slot timeline = instance.timeline_length;
    std::vector<Slot> starts{1};
    auto add_run = [&](SlotRun run) {
        if (run.empty())
            return;
        starts.push_back(run.first);
        if (run.last < timeline)
            starts.push_back(run.last + 1);
    };
    for (const EventPlacement& placement : schedule.placements)
        add_run(placement.span());

    struct Row {
        const Agent* agent;
        std::vector<SlotRun> job_runs;
        std::vector<SlotRun> agreement;
        Slot value = 0;
    };
    std::vector<Row> rows;
    for (const Agent& agent : instance.agents) {
        for (const Job& job : agent.jobs)
            add_run({job.release, job.deadline});
        AgreementResult result = max_agreement(agent, schedule, timeline);
        Row row{&agent, {}, {}, result.agreement};
        JobSchedule packed = packed_schedule(agent, result);
        for (const auto& runs : packed.runs)
            for (SlotRun run : runs) {
                row.job_runs.push_back(run);
                add_run(run);
            }
        for (const AgreementRun& run : agreement_runs(result)) {
            row.agreement.push_back(run.run);
            add_run(run.run);
        }
        rows.push_back(std::move(row));
    }

    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

    // Column k spans [starts[k], next start - 1]; widths saturate so huge
    // runs stay narrow.
    std::vector<SlotRun> columns;
    std::vector<int> col_x;
    int x = 80;
    for (std::size_t k = 0; k < starts.size(); ++k) {
        SlotRun column{starts[k], k + 1 < starts.size() ? starts[k + 1] - 1 : timeline};
        col_x.push_back(x);
        Slot size = column.size();
        x += size <= 1 ? 18 : size == 2 ? 30 : 44;
        columns.push_back(column);
    }
    col_x.push_back(x);
    const int width = x + 10;
    const int axis_h = 16;
    const int row_h = 20;
    const int row_gap = 6;
    const int height = axis_h + (1 + static_cast<int>(rows.size())) * (row_h + row_gap) + 8;

    auto x_left = [&](Slot slot) {
        auto it = std::lower_bound(starts.begin(), starts.end(), slot);
        return col_x[static_cast<std::size_t>(it - starts.begin())];
    };
    auto x_right = [&](Slot slot) {
        // slot is the last slot of some column; the column start is the
        // greatest start <= slot.
        auto it = std::upper_bound(starts.begin(), starts.end(), slot);
        return col_x[static_cast<std::size_t>(it - starts.begin())];
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\" font-family=\"monospace\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"#ffffff\"/>\n";
    for (std::size_t k = 0; k < columns.size(); ++k) {
        svg << "<text x=\"" << col_x[k] + 2 << "\" y=\"11\" font-size=\"9\" fill=\"#666666\">"
            << columns[k].first << "</text>\n";
        svg << "<line x1=\"" << col_x[k] << "\" y1=\"" << axis_h << "\" x2=\"" << col_x[k]
            << "\" y2=\"" << height - 6 << "\" stroke=\"#e6e6e6\" stroke-width=\"1\"/>\n";
    }
    svg << "<line x1=\"" << col_x.back() << "\" y1=\"" << axis_h << "\" x2=\"" << col_x.back()
        << "\" y2=\"" << height - 6 << "\" stroke=\"#e6e6e6\" stroke-width=\"1\"/>\n";

    auto row_y = [&](std::size_t index) {
        return axis_h + static_cast<int>(index) * (row_h + row_gap) + row_gap / 2;
    };
    auto label = [&](std::size_t index, const std::string& text) {
        svg << "<text x=\"4\" y=\"" << row_y(index) + 14 << "\" font-size=\"11\" fill=\"#333333\">"
            << xml_escape(text) << "</text>\n";
    };
    auto rect = [&](std::size_t index, SlotRun run, const char* fill) {
        int left = x_left(run.first);
        int right = x_right(run.last);
        svg << "<rect x=\"" << left << "\" y=\"" << row_y(index) << "\" width=\"" << right - left
            << "\" height=\"" << row_h << "\" fill=\"" << fill << "\"/>\n";
    };

    label(0, "events");
    std::vector<EventPlacement> ordered = schedule.placements;
    std::sort(ordered.begin(), ordered.end(), [](const EventPlacement& a, const EventPlacement& b) {
        return a.start != b.start ? a.start < b.start : a.event_id < b.event_id;
    });
    for (const EventPlacement& placement : ordered) {
        rect(0, placement.span(), "#4e79a7");
        svg << "<text x=\"" << x_left(placement.start) + 3 << "\" y=\"" << row_y(0) + 14
            << "\" font-size=\"10\" fill=\"#ffffff\">" << xml_escape(placement.event_id)
            << "</text>\n";
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        label(i + 1, rows[i].agent->id + " (" + std::to_string(rows[i].value) + ")");
        for (SlotRun run : rows[i].job_runs)
            rect(i + 1, run, "#c6c6c6");
        for (SlotRun run : rows[i].agreement)
            rect(i + 1, run, "#59a14f");
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace psba

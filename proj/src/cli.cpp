#include "psba/cli.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "psba/flow.hpp"
#include "psba/generators.hpp"
#include "psba/instance.hpp"
#include "psba/io.hpp"
#include "psba/one_event.hpp"
#include "psba/oracles.hpp"
#include "psba/solvers.hpp"

namespace psba {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;
constexpr int kExitNoPlacement = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw ParseError("cannot write " + path);
}

Instance load_instance(const std::string& path) {
    Instance instance = parse_instance(read_file(path));
    ValidationReport report = validate(instance);
    if (!report.ok()) {
        std::string message = path + ": invalid instance";
        for (const Violation& violation : report.violations)
            message += "\n  " + violation.path + ": " + violation.message;
        throw ParseError(message);
    }
    return instance;
}

SolutionFile to_solution(const Instance& instance, const std::string& algorithm,
                         const EventSchedule& schedule) {
    SolutionFile solution;
    solution.algorithm = algorithm;
    for (const Event& event : instance.events)
        for (const EventPlacement& placement : schedule.placements)
            if (placement.event_id == event.id)
                solution.placements.emplace_back(placement.event_id, placement.start);
    Slot total = 0;
    for (const Agent& agent : instance.agents) {
        Slot value = max_agreement(agent, schedule, instance.timeline_length).agreement;
        solution.per_agent.emplace_back(agent.id, value);
        total += value;
    }
    solution.total = total;
    return solution;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
        .count();
}

SolveReport run_algorithm(const Instance& instance, const std::string& algorithm,
                          const SolveOptions& options, const OracleBudget& budget) {
    if (algorithm == "general")
        return solve_general(instance, options);
    if (algorithm == "greedy-poly")
        return greedy_poly_t(instance, options);
    if (algorithm == "one-event") {
        if (instance.events.size() != 1)
            throw ParseError("algorithm one-event requires exactly one event, got " +
                             std::to_string(instance.events.size()));
        auto started = std::chrono::steady_clock::now();
        SolveReport report;
        report.algorithm = "one-event";
        auto [start, value] = best_placement(instance);
        report.schedule.placements.push_back({instance.events[0].id, start,
                                              instance.events[0].length});
        report.rounds.push_back({instance.events[0].id, start, value});
        report.total = total_agreement(instance, report.schedule, &report.counters);
        report.wall_ms = elapsed_ms(started);
        return report;
    }
    if (algorithm == "brute") {
        auto started = std::chrono::steady_clock::now();
        auto [schedule, total] = brute_optimum(instance, budget);
        SolveReport report;
        report.algorithm = "brute";
        report.schedule = std::move(schedule);
        report.total = total;
        report.wall_ms = elapsed_ms(started);
        return report;
    }
    throw ParseError("unknown algorithm \"" + algorithm + "\"");
}

struct SolveArgs {
    std::string input;
    std::string algorithm = "general";
    std::string shift = "on";
    std::string svg_path;
    std::string out_path;
    long long budget = 0;
};

int do_solve(const SolveArgs& args, std::ostream& out) {
    Instance instance = load_instance(args.input);
    SolveOptions options;
    options.final_shift = args.shift == "on";
    OracleBudget budget;
    if (args.budget > 0) {
        options.enumeration_cap = args.budget;
        budget.max_placements = args.budget;
    }
    SolveReport report = run_algorithm(instance, args.algorithm, options, budget);
    std::string text = serialize_solution(to_solution(instance, report.algorithm, report.schedule));
    if (args.out_path.empty())
        out << text;
    else
        write_file(args.out_path, text);
    if (!args.svg_path.empty())
        write_file(args.svg_path, render_svg(instance, report.schedule));
    return kExitOk;
}

struct AgreementArgs {
    std::string input;
    std::string solution;
    bool verify = false;
};

int do_agreement(const AgreementArgs& args, std::ostream& out, std::ostream& err) {
    Instance instance = load_instance(args.input);
    SolutionFile stated = parse_solution(read_file(args.solution));
    EventSchedule schedule = resolve_placements(instance, stated.placements);
    SolutionFile computed = to_solution(instance, stated.algorithm, schedule);
    computed.seed = stated.seed;
    out << serialize_solution(computed);
    if (!args.verify)
        return kExitOk;
    bool matched = true;
    if (stated.total && *stated.total != *computed.total) {
        err << "total mismatch: stated " << *stated.total << ", computed " << *computed.total
            << "\n";
        matched = false;
    }
    for (const auto& [agent_id, stated_value] : stated.per_agent) {
        const std::pair<std::string, Slot>* found = nullptr;
        for (const auto& entry : computed.per_agent)
            if (entry.first == agent_id)
                found = &entry;
        if (found == nullptr) {
            err << "unknown agent \"" << agent_id << "\" in solution\n";
            matched = false;
        } else if (found->second != stated_value) {
            err << "agent \"" << agent_id << "\" mismatch: stated " << stated_value
                << ", computed " << found->second << "\n";
            matched = false;
        }
    }
    return matched ? kExitOk : kExitMismatch;
}

struct GenArgs {
    std::string family = "random";
    GenSpec spec;
    std::vector<Slot> sizes;
    std::string out_path;
};

int do_gen(const GenArgs& args, std::ostream& out) {
    Instance instance;
    if (args.family == "partition") {
        if (args.sizes.empty())
            throw ParseError("--family partition requires --sizes");
        instance = gen_partition(args.sizes);
    } else {
        instance = gen_random(args.spec);
    }
    std::string text = serialize_instance(instance);
    if (args.out_path.empty())
        out << text;
    else
        write_file(args.out_path, text);
    return kExitOk;
}

struct BenchArgs {
    std::vector<std::string> inputs;
    std::vector<std::string> algorithms{"general"};
    bool with_opt = false;
    long long budget = 0;
    int threads = 0;
};

int do_bench(const BenchArgs& args, std::ostream& out) {
    SolveOptions options;
    OracleBudget budget;
    if (args.budget > 0) {
        options.enumeration_cap = args.budget;
        budget.max_placements = args.budget;
    }
    std::vector<std::string> blocks(args.inputs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t index = next.fetch_add(1);
            if (index >= args.inputs.size())
                return;
            const std::string& path = args.inputs[index];
            std::ostringstream rows;
            std::optional<Instance> instance;
            try {
                instance = load_instance(path);
            } catch (const std::exception&) {
                for (const std::string& algorithm : args.algorithms)
                    rows << path << "," << algorithm << ",error,,,,,\n";
                blocks[index] = rows.str();
                continue;
            }
            std::optional<Slot> opt;
            if (args.with_opt) {
                try {
                    opt = brute_optimum(*instance, budget).second;
                } catch (const std::exception&) {
                }
            }
            std::string opt_text = opt ? std::to_string(*opt) : "";
            for (const std::string& algorithm : args.algorithms) {
                rows << path << "," << algorithm << ",";
                try {
                    SolveReport report = run_algorithm(*instance, algorithm, options, budget);
                    rows << report.total << "," << opt_text << ",";
                    if (opt && *opt > 0)
                        rows << std::fixed << std::setprecision(4)
                             << static_cast<double>(report.total) / static_cast<double>(*opt);
                    rows << "," << std::fixed << std::setprecision(1) << report.wall_ms << ","
                         << report.counters.flow_calls << "," << report.counters.oracle_calls
                         << "\n";
                } catch (const std::exception&) {
                    rows << "error," << opt_text << ",,,,\n";
                }
            }
            blocks[index] = rows.str();
        }
    };
    unsigned hardware = std::thread::hardware_concurrency();
    std::size_t thread_count = args.threads > 0 ? static_cast<std::size_t>(args.threads)
                                                : (hardware ? hardware : 1);
    thread_count = std::min(thread_count, args.inputs.size());
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < thread_count; ++i)
        pool.emplace_back(worker);
    worker();
    for (std::thread& thread : pool)
        thread.join();
    out << "instance,algorithm,total,opt,ratio,ms,flow_calls,oracle_calls\n";
    for (const std::string& block : blocks)
        out << block;
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Event placement against busy agents"};
    app.name("psba");
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "Place all events on an instance");
    solve->add_option("--input", solve_args.input, "Instance JSON file")->required();
    solve->add_option("--algorithm", solve_args.algorithm, "Solver to run")
        ->check(CLI::IsMember({"general", "greedy-poly", "one-event", "brute"}));
    solve->add_option("--shift", solve_args.shift, "Rearrange the final schedule into disjoint spans")
        ->check(CLI::IsMember({"on", "off"}));
    solve->add_option("--budget", solve_args.budget, "Evaluation cap for enumerating solvers");
    solve->add_option("--svg", solve_args.svg_path, "Write a timeline picture to this file");
    solve->add_option("--out", solve_args.out_path, "Write the solution here instead of stdout");

    AgreementArgs agreement_args;
    CLI::App* agreement = app.add_subcommand("agreement", "Evaluate a solution file");
    agreement->add_option("--input", agreement_args.input, "Instance JSON file")->required();
    agreement->add_option("--solution", agreement_args.solution, "Solution JSON file")->required();
    agreement->add_flag("--verify", agreement_args.verify,
                        "Fail when stated agreements differ from computed ones");

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("--family", gen_args.family, "Instance family")
        ->check(CLI::IsMember({"random", "partition"}));
    gen->add_option("--seed", gen_args.spec.seed, "Random seed");
    gen->add_option("--agents", gen_args.spec.agents, "Number of agents");
    gen->add_option("--events", gen_args.spec.events, "Number of events");
    gen->add_option("--timeline", gen_args.spec.timeline_length, "Timeline length");
    gen->add_option("--jobs-min", gen_args.spec.jobs_min, "Minimum jobs per agent");
    gen->add_option("--jobs-max", gen_args.spec.jobs_max, "Maximum jobs per agent");
    gen->add_option("--mix-rigid", gen_args.spec.mix_rigid, "Fraction of rigid jobs");
    gen->add_option("--mix-unit", gen_args.spec.mix_unit, "Fraction of single-unit jobs");
    gen->add_option("--sizes", gen_args.sizes, "Multiset for the partition family")
        ->delimiter(',');
    gen->add_option("--out", gen_args.out_path, "Write the instance here instead of stdout");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "Run solvers over instance files, print CSV");
    bench->add_option("--inputs", bench_args.inputs, "Instance JSON files")->required();
    bench->add_option("--algorithm", bench_args.algorithms, "Solvers to run");
    bench->add_flag("--with-opt", bench_args.with_opt, "Also compute the exhaustive optimum");
    bench->add_option("--budget", bench_args.budget, "Evaluation cap for enumerating solvers");
    bench->add_option("--threads", bench_args.threads, "Worker threads (default: hardware)");

    std::vector<std::string> argv{"psba"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<const char*> raw;
    raw.reserve(argv.size());
    for (const std::string& arg : argv)
        raw.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (solve->parsed())
            return do_solve(solve_args, out);
        if (agreement->parsed())
            return do_agreement(agreement_args, out, err);
        if (gen->parsed())
            return do_gen(gen_args, out);
        return do_bench(bench_args, out);
    } catch (const TimelineTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const NoValidPlacement& e) {
        err << "error: " << e.what() << "\n";
        return kExitNoPlacement;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
}

} // namespace psba

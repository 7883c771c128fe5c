#include "psba/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "psba/instance.hpp"

namespace psba {

namespace {

Slot uniform_slot(std::mt19937_64& rng, Slot lo, Slot hi) {
    return std::uniform_int_distribution<Slot>(lo, hi)(rng);
}

} // namespace

Instance gen_random(const GenSpec& spec) {
    if (spec.agents < 0 || spec.events < 0 || spec.timeline_length < 1 || spec.jobs_min < 0 ||
        spec.jobs_min > spec.jobs_max || spec.mix_rigid < 0 || spec.mix_unit < 0 ||
        spec.mix_rigid + spec.mix_unit > 1.0)
        throw std::invalid_argument("malformed generator parameters");

    std::mt19937_64 rng(spec.seed);
    const Slot T = spec.timeline_length;
    Instance instance;
    instance.timeline_length = T;

    const Slot event_len_max = std::max<Slot>(1, T / 4);
    for (int e = 0; e < spec.events; ++e)
        instance.events.push_back({"e" + std::to_string(e + 1), uniform_slot(rng, 1, event_len_max)});

    const Slot extend_max = std::max<Slot>(1, T / 4);
    for (int a = 0; a < spec.agents; ++a) {
        Agent agent{"a" + std::to_string(a + 1), {}};
        const int job_count =
            spec.jobs_min + static_cast<int>(uniform_slot(rng, 0, spec.jobs_max - spec.jobs_min));

        // Pack disjoint base runs; each job can always retreat to its base
        // run, so the agent is feasible whatever the interval relaxation.
        std::vector<SlotRun> base;
        bool packed = job_count == 0;
        for (int attempt = 0; attempt < 64 && !packed; ++attempt) {
            base.clear();
            std::vector<SlotRun> gaps{{1, T}};
            packed = true;
            const Slot len_max = std::max<Slot>(1, T / std::max(1, 2 * job_count));
            for (int j = 0; j < job_count; ++j) {
                Slot len = uniform_slot(rng, 1, len_max);
                std::vector<std::size_t> fits;
                for (std::size_t g = 0; g < gaps.size(); ++g)
                    if (gaps[g].size() >= len) fits.push_back(g);
                if (fits.empty()) {
                    packed = false;
                    break;
                }
                std::size_t g = fits[static_cast<std::size_t>(
                    uniform_slot(rng, 0, static_cast<Slot>(fits.size()) - 1))];
                Slot start = uniform_slot(rng, gaps[g].first, gaps[g].last - len + 1);
                SlotRun run{start, start + len - 1};
                base.push_back(run);
                SlotRun before{gaps[g].first, run.first - 1};
                SlotRun after{run.last + 1, gaps[g].last};
                gaps.erase(gaps.begin() + static_cast<std::ptrdiff_t>(g));
                if (!before.empty()) gaps.push_back(before);
                if (!after.empty()) gaps.push_back(after);
            }
        }
        if (!packed)
            throw GenerationFailed("could not pack " + std::to_string(job_count) +
                                   " jobs onto " + std::to_string(T) + " slots for agent " +
                                   agent.id);

        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int j = 0; j < job_count; ++j) {
            const SlotRun run = base[static_cast<std::size_t>(j)];
            Job job{"j" + std::to_string(j + 1), run.first, run.last, run.size()};
            double c = coin(rng);
            if (c < spec.mix_rigid) {
                // keep as drawn: interval equals the run
            } else if (c < spec.mix_rigid + spec.mix_unit) {
                // single unit, window widened around the run start
                job.processing = 1;
                job.release = run.first - uniform_slot(rng, 0, std::min(run.first - 1, extend_max));
                job.deadline = std::min(T, run.first + uniform_slot(rng, 0, std::min(T - run.first, extend_max)));
            } else {
                job.release = run.first - uniform_slot(rng, 0, std::min(run.first - 1, extend_max));
                job.deadline = std::min(T, run.last + uniform_slot(rng, 0, std::min(T - run.last, extend_max)));
            }
            agent.jobs.push_back(job);
        }
        instance.agents.push_back(std::move(agent));
    }

    if (!validate(instance).ok())
        throw GenerationFailed("generated instance failed validation"); // construction bug guard
    return instance;
}

Instance gen_partition(const std::vector<Slot>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("the multiset must be non-empty");
    Slot sum = 0;
    for (Slot s : sizes) {
        if (s < 1) throw std::invalid_argument("multiset elements must be positive");
        if (s > (Slot{1} << 40) - sum) throw std::invalid_argument("multiset sum too large");
        sum += s;
    }
    if (sum % 2 != 0) throw OddSum();
    const Slot Q = sum / 2;

    Instance instance;
    instance.timeline_length = 4 * Q;
    for (std::size_t k = 0; k < sizes.size(); ++k)
        instance.events.push_back({"e" + std::to_string(k + 1), sizes[k]});
    Agent agent{"a1", {}};
    agent.jobs.push_back({"j1", 1, Q, Q});
    agent.jobs.push_back({"j2", 2 * Q + 1, 3 * Q, Q});
    instance.agents.push_back(std::move(agent));
    return instance;
}

} // namespace psba

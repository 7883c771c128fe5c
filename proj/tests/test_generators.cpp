#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "psba/generators.hpp"
#include "psba/instance.hpp"
#include "psba/io.hpp"
#include "psba/oracles.hpp"

using namespace psba;

TEST_CASE("random generation is deterministic per seed") {
    GenSpec spec;
    spec.seed = 42;
    spec.agents = 3;
    spec.events = 2;
    spec.timeline_length = 20;
    spec.jobs_max = 4;
    CHECK(serialize_instance(gen_random(spec)) == serialize_instance(gen_random(spec)));
    GenSpec other = spec;
    other.seed = 43;
    CHECK(serialize_instance(gen_random(spec)) != serialize_instance(gen_random(other)));
}

TEST_CASE("random instances validate across seeds and shapes") {
    int generated = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        spec.agents = 1 + static_cast<int>(seed % 3);
        spec.events = 1 + static_cast<int>(seed % 4);
        spec.timeline_length = 8 + static_cast<Slot>(seed % 13);
        spec.jobs_min = static_cast<int>(seed % 2);
        spec.jobs_max = 2 + static_cast<int>(seed % 3);
        spec.mix_rigid = 0.1 * static_cast<double>(seed % 5);
        spec.mix_unit = 0.1 * static_cast<double>(seed % 3);
        try {
            Instance instance = gen_random(spec);
            CAPTURE(seed);
            CHECK(validate(instance).ok());
            CHECK(instance.agents.size() == static_cast<std::size_t>(spec.agents));
            CHECK(instance.events.size() == static_cast<std::size_t>(spec.events));
            for (const Agent& agent : instance.agents) {
                CHECK(agent.jobs.size() >= static_cast<std::size_t>(spec.jobs_min));
                CHECK(agent.jobs.size() <= static_cast<std::size_t>(spec.jobs_max));
            }
            ++generated;
        } catch (const GenerationFailed&) {
        }
    }
    CHECK(generated >= 150);
}

TEST_CASE("flexibility mix extremes") {
    GenSpec spec;
    spec.seed = 7;
    spec.agents = 2;
    spec.timeline_length = 24;
    spec.jobs_min = 3;
    spec.jobs_max = 3;

    spec.mix_rigid = 1.0;
    spec.mix_unit = 0.0;
    Instance rigid = gen_random(spec);
    for (const Agent& agent : rigid.agents)
        for (const Job& job : agent.jobs)
            CHECK(job.processing == job.deadline - job.release + 1);

    spec.mix_rigid = 0.0;
    spec.mix_unit = 1.0;
    Instance unit = gen_random(spec);
    for (const Agent& agent : unit.agents)
        for (const Job& job : agent.jobs)
            CHECK(job.processing == 1);
}

TEST_CASE("malformed generator parameters are rejected") {
    GenSpec spec;
    spec.agents = -1;
    CHECK_THROWS_AS(gen_random(spec), std::invalid_argument);
    spec = {};
    spec.timeline_length = 0;
    CHECK_THROWS_AS(gen_random(spec), std::invalid_argument);
    spec = {};
    spec.jobs_min = 3;
    spec.jobs_max = 2;
    CHECK_THROWS_AS(gen_random(spec), std::invalid_argument);
    spec = {};
    spec.mix_rigid = 0.7;
    spec.mix_unit = 0.4;
    CHECK_THROWS_AS(gen_random(spec), std::invalid_argument);
    spec = {};
    spec.mix_rigid = -0.1;
    CHECK_THROWS_AS(gen_random(spec), std::invalid_argument);

    spec = {};
    spec.timeline_length = 3;
    spec.jobs_min = 4;
    spec.jobs_max = 4;
    CHECK_THROWS_AS(gen_random(spec), GenerationFailed);
}

TEST_CASE("partition reduction layout") {
    Instance instance = gen_partition({1, 1, 2});
    CHECK(validate(instance).ok());
    CHECK(instance.timeline_length == 8);
    REQUIRE(instance.events.size() == 3);
    std::vector<std::pair<std::string, Slot>> expected_events{{"e1", 1}, {"e2", 1}, {"e3", 2}};
    for (std::size_t k = 0; k < expected_events.size(); ++k) {
        CHECK(instance.events[k].id == expected_events[k].first);
        CHECK(instance.events[k].length == expected_events[k].second);
    }
    REQUIRE(instance.agents.size() == 1);
    REQUIRE(instance.agents[0].jobs.size() == 2);
    const Job& first = instance.agents[0].jobs[0];
    CHECK(first.id == "j1");
    CHECK(first.release == 1);
    CHECK(first.deadline == 2);
    CHECK(first.processing == 2);
    const Job& second = instance.agents[0].jobs[1];
    CHECK(second.id == "j2");
    CHECK(second.release == 5);
    CHECK(second.deadline == 6);
    CHECK(second.processing == 2);
}

TEST_CASE("partition reduction optimum separates YES from NO multisets") {
    // {1,1,2} splits into halves of sum 2, so both free regions fill.
    CHECK(brute_optimum(gen_partition({1, 1, 2})).second == 4);
    // {2,3,5} splits as 2+3 against 5.
    CHECK(brute_optimum(gen_partition({2, 3, 5})).second == 10);
    // {1,1,4} has no subset of sum 3; one slot of overlap is forced.
    CHECK(brute_optimum(gen_partition({1, 1, 4})).second == 5);
}

TEST_CASE("partition reduction rejects bad multisets") {
    CHECK_THROWS_AS(gen_partition({1, 2}), OddSum);
    CHECK_THROWS_AS(gen_partition({}), std::invalid_argument);
    CHECK_THROWS_AS(gen_partition({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(gen_partition({-3, 3}), std::invalid_argument);
}

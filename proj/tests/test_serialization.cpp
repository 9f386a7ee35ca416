#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <vector>

#include <nlohmann/json.hpp>

#include "stoneprob/extended_real.hpp"
#include "stoneprob/harness/generator.hpp"
#include "stoneprob/serialization.hpp"

using namespace stoneprob;
using nlohmann::json;

TEST_CASE("scalars serialize with explicit infinities") {
    CHECK(scalar_to_json(1.5) == json(1.5));
    CHECK(scalar_to_json(extreal::infinity) == json("inf"));
    CHECK(scalar_to_json(-extreal::infinity) == json("-inf"));
    CHECK(scalar_from_json(json("inf")) == extreal::infinity);
    CHECK(scalar_from_json(json("-inf")) == -extreal::infinity);
    CHECK(scalar_from_json(json(-2.25)) == -2.25);
    CHECK_THROWS_AS(scalar_from_json(json("nan")), InvalidArgument);
    CHECK_THROWS_AS(scalar_from_json(json::object()), InvalidArgument);
}

TEST_CASE("elements round trip including infinities") {
    StoneSpace k(3);
    LatticeElement u(k, {2.0, extreal::infinity, -1.5});
    json j = element_to_json(u);
    CHECK(j["atoms"] == 3);
    CHECK(j["values"][1] == json("inf"));
    CHECK(element_from_json(j) == u);

    CHECK_THROWS_AS(element_from_json(json{{"atoms", 2}, {"values", {1.0}}}), InvalidArgument);
    CHECK_THROWS_AS(element_from_json(json{{"values", {1.0}}}), InvalidArgument);
}

TEST_CASE("step functions and interval sets round trip") {
    harness::SplitMix rng(301);
    for (int trial = 0; trial < 100; ++trial) {
        StepFunction f = harness::gen_step_function(rng);
        StepFunction back = step_from_json(step_to_json(f));
        CHECK(back == f);

        IntervalSet s = harness::gen_interval_set(rng);
        CHECK(intervals_from_json(intervals_to_json(s)) == s);
    }

    json j = step_to_json(StepFunction({0.0}, {1.0}, 2.0));
    CHECK(j.contains("breakpoints"));
    CHECK(j.contains("values"));
    CHECK(j.contains("value_at_infinity"));

    json rays = intervals_to_json(IntervalSet::ray_up(0.0));
    REQUIRE(rays.is_array());
    CHECK_THROWS_AS(intervals_from_json(json{{"lo", 0.0}}), InvalidArgument);
}

TEST_CASE("filtrations round trip") {
    harness::SplitMix rng(303);
    harness::GeneratorConfig cfg;
    for (int trial = 0; trial < 60; ++trial) {
        StoneSpace k = harness::gen_space(rng, cfg);
        auto filt = harness::gen_filtration(rng, k, harness::gen_horizon(rng, cfg));
        json j = filtration_to_json(*filt);
        CHECK(j.contains("weights"));
        CHECK(j.contains("stages"));
        auto back = filtration_from_json(j);
        CHECK(*back == *filt);
    }
    CHECK_THROWS_AS(filtration_from_json(json{{"weights", {1.0}}}), InvalidArgument);
}

TEST_CASE("processes round trip against their filtration") {
    harness::SplitMix rng(305);
    harness::GeneratorConfig cfg;
    for (int trial = 0; trial < 60; ++trial) {
        StoneSpace k = harness::gen_space(rng, cfg);
        std::size_t horizon = harness::gen_horizon(rng, cfg);
        auto filt = harness::gen_filtration(rng, k, horizon);
        AdaptedProcess p = harness::gen_adapted_process(rng, filt, horizon);
        json j = process_path_to_json(p);
        AdaptedProcess back = process_from_json(j, filt);
        CHECK(back.path() == p.path());
    }
}

TEST_CASE("stopping times round trip with never as a string") {
    auto filt = [] {
        StoneSpace k(2);
        return std::make_shared<const Filtration>(
            k, std::vector<double>{1.0, 1.0},
            std::vector<std::vector<std::vector<std::size_t>>>{{{0, 1}}, {{0}, {1}}});
    }();
    StoppingTime t(filt, {2, kNever});
    json j = stopping_to_json(t, "filt-0");
    CHECK(j["values"][1] == json("inf"));
    CHECK(stopping_from_json(j, filt) == t);

    CHECK_THROWS_AS(stopping_from_json(json{{"values", {0}}}, filt), InvalidArgument);
    CHECK_THROWS_AS(stopping_from_json(json{{"values", {1.5, 2.0}}}, filt), InvalidArgument);
}

TEST_CASE("malformed documents are rejected not crashed") {
    for (const char* text :
         {"null", "[]", "{}", "{\"atoms\": -1, \"values\": []}", "{\"atoms\": \"x\"}"}) {
        json j = json::parse(text);
        CHECK_THROWS_AS(element_from_json(j), Error);
    }
}

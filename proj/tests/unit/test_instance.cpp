#include <doctest.h>

#include <json.hpp>

#include "gradalg/errors.hpp"
#include "gradalg/instance.hpp"

using namespace gradalg;

#ifndef GRADALG_FIXTURE_DIR
#define GRADALG_FIXTURE_DIR "fixtures"
#endif

TEST_CASE("instances round-trip through JSON") {
    for (const auto& fx : standard_fixtures()) {
        auto inst = instance_of_fixture(fx);
        auto text = instance_to_json_text(inst);
        auto raw = parse_instance_text(text);
        REQUIRE(validate_raw(raw).ok());
        auto back = build_instance(raw);
        CHECK(back.algebra->dim() == inst.algebra->dim());
        CHECK(back.algebra->algebra().sc == inst.algebra->algebra().sc);
        CHECK(back.algebra->algebra().unit == inst.algebra->algebra().unit);
        REQUIRE(back.graded_modules.size() == 1);
        CHECK(back.graded_modules[0].second.dims == inst.graded_modules[0].second.dims);
        CHECK(back.graded_modules[0].second.act == inst.graded_modules[0].second.act);
        REQUIRE(back.ae_modules.size() == 1);
        CHECK(back.ae_modules[0].second.act == inst.ae_modules[0].second.act);
        // serialization is byte-deterministic
        CHECK(instance_to_json_text(back) == text);
    }
}

TEST_CASE("shipped fixture files match the built-in constructors") {
    for (const auto& fx : standard_fixtures()) {
        std::string path = std::string(GRADALG_FIXTURE_DIR) + "/" + fx.name + ".json";
        auto raw = parse_instance_file(path);
        REQUIRE(validate_raw(raw).ok());
        auto inst = build_instance(raw);
        CHECK(inst.name == fx.name);
        CHECK(inst.algebra->algebra().sc == fx.algebra->algebra().sc);
        CHECK(inst.algebra->algebra().unit == fx.algebra->algebra().unit);
        CHECK(inst.find_graded("shift_e") != nullptr);
        CHECK(inst.find_ae("ae_regular") != nullptr);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_instance_text("{ not json"), InvalidInput);
    CHECK_THROWS_AS(parse_instance_text("{}"), InvalidInput);
    CHECK_THROWS_AS(parse_instance_text(R"({"format":"other"})"), InvalidInput);
    // structurally broken: sc index out of range
    auto text = instance_to_json_text(instance_of_fixture(standard_fixtures()[0]));
    auto j = nlohmann::json::parse(text);
    j["algebra"]["sc"].push_back({9, 9, 9, 1});
    auto raw = parse_instance_text(j.dump());
    auto rep = validate_raw(raw);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("axiom failures carry witnesses") {
    auto text = instance_to_json_text(instance_of_fixture(standard_fixtures()[0]));
    auto j = nlohmann::json::parse(text);

    // break associativity/unit: g*g = g
    auto broken = j;
    for (auto& q : broken["algebra"]["sc"])
        if (q[0] == 1 && q[1] == 1) q[2] = 1;
    auto rep = validate_raw(parse_instance_text(broken.dump()));
    CHECK_FALSE(rep.ok());
    CHECK(rep.first_failure() != nullptr);
    CHECK_FALSE(rep.first_failure()->witness.empty());
    CHECK_THROWS_AS(build_instance(parse_instance_text(broken.dump())), CheckFailure);

    // break the grading: 1*1 gains a degree-g component
    auto graded_broken = j;
    graded_broken["algebra"]["sc"].push_back({0, 0, 1, 1});
    auto rep2 = validate_raw(parse_instance_text(graded_broken.dump()));
    CHECK_FALSE(rep2.ok());
}

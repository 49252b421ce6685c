#pragma once

#include <map>
#include <string>
#include <vector>

#include "cpsmeta/model.hpp"

namespace cpsmeta {

// Demonstration model of an oil and gas pipeline and its control system,
// covering the architecture, behavior, risk, and resilience viewpoints. It is
// the canonical corpus for tests, golden files, and documentation.
//
// Deliberate modeling choices the numbers below depend on: two routes and two
// segments per route are expressed as cardinality labels on the build edges;
// loss priorities are Equipment Damage 1, Sub-Optimal Capacity 3; the loss
// scenario's time budgets are detection 5 s, operator decision 10 s, restore
// 30 s. The manifest tags these so downstream consumers know they are fixture
// choices, not requirements.
ModelStore build_pipeline_model();

struct FixtureAnchor {
    std::string name;
    std::string typeName;
};

struct FixtureManifest {
    std::map<std::string, std::size_t> counts;  // entity type -> expected count
    std::vector<FixtureAnchor> anchors;         // named entities tests rely on
    std::vector<std::string> unexercisedRelations;  // declared but not used
    std::vector<std::string> fixtureChoices;        // values invented here
};

FixtureManifest pipeline_manifest();

}  // namespace cpsmeta

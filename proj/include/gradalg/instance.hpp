#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gradalg/fixtures.hpp"
#include "gradalg/graded.hpp"
#include "gradalg/homs.hpp"
#include "gradalg/report.hpp"

namespace gradalg {

/// Parsed-but-unvalidated instance file contents (JSON syntax, sparse
/// structure constants and actions).
struct RawModule {
    std::string name;
    std::string kind;                            // "graded" or "ae"
    std::vector<int> deg_dims;                   // graded
    int dim = 0;                                 // ae
    std::vector<std::vector<long long>> entries; // [i,y,r,c,v] or [k,r,c,v]
};

struct RawInstance {
    std::string format;
    std::string name;
    std::string comment;
    std::vector<std::vector<int>> table;
    u32 p = 2;
    std::vector<int> deg;
    std::vector<std::vector<long long>> sc; // quadruples [i,j,k,v]
    std::vector<u32> unit;
    std::vector<RawModule> modules;
};

/// Throws InvalidInput on malformed JSON or structural problems
/// (bad shapes, out-of-range indices).
RawInstance parse_instance_text(const std::string& text);
RawInstance parse_instance_file(const std::string& path);

/// Every axiom with pass/fail and witnesses: group table, graded algebra,
/// then each module (skipped when the algebra already fails).
Report validate_raw(const RawInstance& raw);

/// Fully built and validated instance.
struct Instance {
    std::string name;
    std::shared_ptr<const GradedAlgebra> algebra;
    std::vector<std::pair<std::string, GradedModule>> graded_modules;
    std::vector<std::pair<std::string, AeModule>> ae_modules;

    const GradedModule* find_graded(const std::string& module_name) const;
    const AeModule* find_ae(const std::string& module_name) const;
};

/// Throws CheckFailure (first axiom failure) or InvalidInput (structure).
Instance build_instance(const RawInstance& raw);
Instance load_instance(const std::string& path);

/// Canonical JSON text (sorted keys, sorted sparse entries, 2-space indent,
/// trailing newline); byte-deterministic for a fixed instance.
std::string instance_to_json_text(const Instance& inst, const std::string& comment = "");
void save_instance(const Instance& inst, const std::string& path, const std::string& comment = "");

/// The standard fixture as a full instance: its algebra plus the canonical
/// module blocks "shift_e" ([e]A) and "ae_regular" (regular A_e-module).
Instance instance_of_fixture(const Fixture& fx);

} // namespace gradalg

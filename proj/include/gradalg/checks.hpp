#pragma once

#include <string>
#include <vector>

#include "gradalg/instance.hpp"
#include "gradalg/report.hpp"

namespace gradalg {

struct SuiteOptions {
    u64 bound = kDefaultEnumBound;
    u64 seed = 0xC0FFEE;
};

/// Named property suites over a validated instance:
///   coring, smash, adjunction, radical, bijection, mod-simple, semisimple,
/// and "all" for the union. Unknown names raise InvalidInput.
Report run_check_suite(const std::string& suite, const Instance& inst,
                       const SuiteOptions& opt = {});

std::vector<std::string> known_suites();

Report check_coring_suite(const Instance& inst, const SuiteOptions& opt);
Report check_smash_suite(const Instance& inst, const SuiteOptions& opt);
Report check_adjunction_suite(const Instance& inst, const SuiteOptions& opt);
Report check_radical_suite(const Instance& inst, const SuiteOptions& opt);
Report check_bijection_suite(const Instance& inst, const SuiteOptions& opt);
Report check_mod_simple_suite(const Instance& inst, const SuiteOptions& opt);
Report check_semisimple_suite(const Instance& inst, const SuiteOptions& opt);

} // namespace gradalg

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gradalg/checks.hpp"
#include "gradalg/coind.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/instance.hpp"
#include "gradalg/simples.hpp"
#include "gradalg/smash.hpp"
#include "gradalg/torsion.hpp"

using namespace gradalg;
using nlohmann::json;

namespace {

json report_json(const Report& rep) {
    json items = json::array();
    for (const auto& it : rep.items()) {
        json e{{"name", it.name}, {"pass", it.pass}};
        if (!it.witness.empty()) e["witness"] = it.witness;
        items.push_back(e);
    }
    return json{{"checks", items}, {"pass", rep.ok()}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int exit_code_of(const Report& rep) { return rep.ok() ? 0 : 1; }

int cmd_validate(const std::string& file) {
    RawInstance raw = parse_instance_file(file); // InvalidInput -> exit 2
    Report rep = validate_raw(raw);
    json j = report_json(rep);
    j["file"] = file;
    emit(j);
    std::cerr << "validate " << file << "\n" << rep.summary();
    return exit_code_of(rep);
}

int cmd_coind(const std::string& file, int degree, const std::string& module,
              const std::string& out_path) {
    Instance inst = load_instance(file);
    const AeModule* n = inst.find_ae(module);
    if (!n) throw InvalidInput("no A_e-module named '" + module + "' in " + file);
    if (degree < 0 || degree >= inst.algebra->group().order())
        throw InvalidInput("degree out of range");
    auto cn = coind(inst.algebra, degree, *n);

    Instance out = inst;
    std::string out_name = module + "_coind_" + std::to_string(degree);
    out.graded_modules.push_back({out_name, cn.mod});
    save_instance(out, out_path);

    json j{{"module", module},
           {"degree", degree},
           {"coinduced", out_name},
           {"dims", cn.mod.dims},
           {"out", out_path}};
    emit(j);
    std::cerr << "coind degree " << degree << " of '" << module << "': dims [";
    for (size_t i = 0; i < cn.mod.dims.size(); ++i)
        std::cerr << (i ? "," : "") << cn.mod.dims[i];
    std::cerr << "] -> " << out_path << "\n";
    return 0;
}

int cmd_radical(const std::string& file, int degree, const std::string& module) {
    Instance inst = load_instance(file);
    const GradedModule* m = inst.find_graded(module);
    if (!m) throw InvalidInput("no graded module named '" + module + "' in " + file);
    if (degree < 0 || degree >= inst.algebra->group().order())
        throw InvalidInput("degree out of range");
    auto rep = torsion_report(*m, degree);
    json j{{"module", module},
           {"degree", degree},
           {"module_dims", m->dims},
           {"radical_dims", graded_subspace_dims(rep.radical)},
           {"is_torsion", rep.is_torsion},
           {"is_torsionfree", rep.is_torsionfree}};
    emit(j);
    return 0;
}

int cmd_simples(const std::string& file, int degree, u64 bound, u64 seed) {
    Instance inst = load_instance(file);
    if (degree < 0 || degree >= inst.algebra->group().order())
        throw InvalidInput("degree out of range");
    SimplesOptions opt;
    opt.bound = bound;
    opt.iso.bound = bound;
    opt.iso.seed = seed;
    auto s = simple_ae_modules(inst.algebra->ae(), opt);
    auto sx = sweep_graded_simples(inst.algebra, degree, opt);
    std::vector<int> ae_dims;
    for (const auto& cls : s) ae_dims.push_back(cls.rep.dim);
    std::vector<std::vector<int>> graded_dims;
    for (const auto& cls : sx) graded_dims.push_back(cls.rep.dims);
    json j{{"degree", degree},
           {"ae_simple_count", int(s.size())},
           {"ae_simple_dims", ae_dims},
           {"graded_simple_count", int(sx.size())},
           {"graded_simple_dims", graded_dims}};
    emit(j);
    return 0;
}

int cmd_bijection(const std::string& file, int degree, u64 bound, u64 seed) {
    Instance inst = load_instance(file);
    if (degree < 0 || degree >= inst.algebra->group().order())
        throw InvalidInput("degree out of range");
    SimplesOptions opt;
    opt.bound = bound;
    opt.iso.bound = bound;
    opt.iso.seed = seed;
    auto rep = bijection_check(inst.algebra, degree, opt);
    json j{{"S_count", rep.s_count},
           {"Sx_count", rep.sx_count},
           {"roundtrips", rep.ok() ? "pass" : "fail"}};
    emit(j);
    std::cerr << rep.details.summary();
    return rep.ok() ? 0 : 1;
}

int cmd_smash(const std::string& file) {
    Instance inst = load_instance(file);
    auto b = SmashAlgebra::build(inst.algebra);
    Report rel = verify_smash_relations(*b);
    auto r = rat(*b, regular_module(b->ring()));
    json j{{"dimB", b->dim()},
           {"relations", rel.ok() ? "pass" : "fail"},
           {"ratB_dim", r.subspace.dim()}};
    emit(j);
    std::cerr << rel.summary();
    return rel.ok() ? 0 : 1;
}

int cmd_check(const std::string& file, const std::string& suite, u64 bound, u64 seed) {
    Instance inst = load_instance(file);
    SuiteOptions opt{bound, seed};
    Report rep = run_check_suite(suite, inst, opt);
    json j = report_json(rep);
    j["suite"] = suite;
    emit(j);
    std::cerr << "suite '" << suite << "' on " << file << "\n" << rep.summary();
    return exit_code_of(rep);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gradalg: exact computations for group-graded algebras over GF(p)"};
    app.require_subcommand(1);

    std::string file, module, out_path, suite = "all";
    int degree = 0;
    u64 bound = kDefaultEnumBound;
    u64 seed = 0xC0FFEE;

    auto add_common = [&](CLI::App* sub, bool with_bound) {
        sub->add_option("file", file, "instance file (JSON)")->required();
        if (with_bound) {
            sub->add_option("--bound", bound, "enumeration cap (default 2^20)")
                ->envname("GRADALG_BOUND");
            sub->add_option("--seed", seed, "seed for randomized isomorphism search");
        }
    };

    auto* validate = app.add_subcommand("validate", "check every axiom of an instance file");
    add_common(validate, false);

    auto* coind_cmd = app.add_subcommand("coind", "coinduce an A_e-module to a graded module");
    add_common(coind_cmd, false);
    coind_cmd->add_option("--degree", degree, "coinduction degree x")->required();
    coind_cmd->add_option("--module", module, "A_e-module name")->required();
    coind_cmd->add_option("--out", out_path, "output instance file")->required();

    auto* radical = app.add_subcommand("radical", "idempotent radical r_x of a graded module");
    add_common(radical, false);
    radical->add_option("--degree", degree, "degree x")->required();
    radical->add_option("--module", module, "graded module name")->required();

    auto* simples = app.add_subcommand("simples", "simple modules on both sides of the bijection");
    add_common(simples, true);
    simples->add_option("--degree", degree, "support degree x")->required();

    auto* bijection = app.add_subcommand("bijection", "verify the simples bijection at degree x");
    add_common(bijection, true);
    bijection->add_option("--degree", degree, "support degree x")->required();

    auto* smash = app.add_subcommand("smash", "build the smash ring B and its trace ideal");
    add_common(smash, false);

    auto* check = app.add_subcommand("check", "run a named property suite");
    add_common(check, true);
    check->add_option("--suite", suite,
                      "coring|smash|adjunction|radical|bijection|mod-simple|semisimple|all");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(file);
        if (coind_cmd->parsed()) return cmd_coind(file, degree, module, out_path);
        if (radical->parsed()) return cmd_radical(file, degree, module);
        if (simples->parsed()) return cmd_simples(file, degree, bound, seed);
        if (bijection->parsed()) return cmd_bijection(file, degree, bound, seed);
        if (smash->parsed()) return cmd_smash(file);
        if (check->parsed()) return cmd_check(file, suite, bound, seed);
    } catch (const CheckFailure& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    } catch (const InvalidInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BoundExceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

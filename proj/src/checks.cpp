#include "gradalg/checks.hpp"

#include <random>

#include "gradalg/coind.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/simples.hpp"
#include "gradalg/smash.hpp"
#include "gradalg/torsion.hpp"

namespace gradalg {

namespace {

// The module family every suite quantifies over: the shifts, their pairwise
// direct sum, plus any graded modules shipped in the instance file.
std::vector<GradedModule> fixture_modules(const Instance& inst) {
    const auto& ga = inst.algebra;
    const int n = ga->group().order();
    std::vector<GradedModule> mods;
    for (int y = 0; y < n; ++y) mods.push_back(make_shift(ga, y));
    mods.push_back(direct_sum(mods[0], mods[size_t(n - 1)]).module);
    for (const auto& [name, m] : inst.graded_modules) mods.push_back(m);
    return mods;
}

std::vector<AeModule> fixture_ae_modules(const Instance& inst, const SuiteOptions& opt) {
    std::vector<AeModule> mods{zero_module(inst.algebra->ae()),
                               regular_module(inst.algebra->ae())};
    SimplesOptions sopt;
    sopt.bound = opt.bound;
    sopt.iso.bound = opt.bound;
    sopt.iso.seed = opt.seed;
    for (auto& cls : simple_ae_modules(inst.algebra->ae(), sopt)) mods.push_back(std::move(cls.rep));
    for (const auto& [name, m] : inst.ae_modules) mods.push_back(m);
    return mods;
}

} // namespace

Report check_coring_suite(const Instance& inst, const SuiteOptions&) {
    auto c = GroupCoring::build(inst.algebra);
    return verify_coring(*c);
}

Report check_smash_suite(const Instance& inst, const SuiteOptions& opt) {
    Report rep;
    auto c = GroupCoring::build(inst.algebra);
    auto b = SmashAlgebra::build(inst.algebra);
    rep.merge(verify_smash_relations(*b));

    const auto& ga = *inst.algebra;
    const int n = ga.group().order();
    const u32 p = ga.modulus();

    // Pairing reconstruction c = sum_z <c, e_z> z on random elements.
    std::mt19937_64 rng(opt.seed);
    bool recon = true;
    for (int trial = 0; trial < 20 && recon; ++trial) {
        std::vector<u32> cv(size_t(c->dim()), 0);
        for (auto& v : cv) v = u32(rng() % p);
        std::vector<u32> rebuilt(size_t(c->dim()), 0);
        Fp f(p);
        for (int z = 0; z < n; ++z) {
            auto coef = smash_pairing(*b, *c, cv, b->idempotent(z));
            auto part = c->left_action(coef, c->group_element(z));
            for (size_t t = 0; t < rebuilt.size(); ++t) rebuilt[t] = f.add(rebuilt[t], part[t]);
        }
        recon = rebuilt == cv;
    }
    rep.add("pairing_reconstruction", recon);

    // Operator identities and Rat on the fixture modules.
    bool rat_identity = true, operator_ok = true;
    for (const auto& m : fixture_modules(inst)) {
        BModule bm = b_module_of(*b, m); // validates the operator relations
        for (int x = 0; x < n && operator_ok; ++x) {
            Mat ex = ae_action_of(bm, b->idempotent(x));
            // e_x acts as the projection onto M_x
            Mat proj(bm.dim, bm.dim, p);
            for (int r = 0; r < m.dims[size_t(x)]; ++r)
                proj.at(m.offset(x) + r, m.offset(x) + r) = 1;
            operator_ok = operator_ok && ex == proj;
        }
        auto r = rat(*b, bm);
        rat_identity = rat_identity && r.subspace.dim() == bm.dim && r.graded.dims == m.dims &&
                       r.graded.act == m.act;
    }
    rep.add("idempotents_are_component_projections", operator_ok);
    rep.add("rat_identity_on_graded_modules", rat_identity);

    rep.merge(exactness_witness(*b, *c));
    return rep;
}

Report check_adjunction_suite(const Instance& inst, const SuiteOptions& opt) {
    Report rep;
    const auto& ga = inst.algebra;
    const int n = ga->group().order();
    auto b = SmashAlgebra::build(ga);
    auto mods = fixture_modules(inst);
    auto ns = fixture_ae_modules(inst, opt);

    bool dims_ok = true, inverses_ok = true, t1_ok = true, t2_ok = true, xi_ok = true;
    for (int x = 0; x < n; ++x) {
        for (const auto& nmod : ns) {
            auto cn = coind(ga, x, nmod);
            for (const auto& m : mods) {
                auto tr = adjunction_transpose(m, cn);
                dims_ok = dims_ok && tr.graded_side.dim() == tr.ae_side.dim();
                if (tr.graded_side.dim() > 0) {
                    inverses_ok = inverses_ok && (tr.forward * tr.backward).is_identity() &&
                                  (tr.backward * tr.forward).is_identity();
                }
            }
            // T2 on Coind(N) and xi bijectivity.
            auto c_r = coind(ga, x, restrict_to_ae(cn.mod, x));
            auto eta = unit_eta(cn.mod, c_r);
            auto down = coind_map(c_r, cn, counit_epsilon(cn));
            t2_ok = t2_ok && compose(eta, down).blocks == identity_map(cn.mod).blocks;
            auto xi = counit_xi(cn);
            xi_ok = xi_ok && xi.hom.dim() == nmod.dim &&
                    (nmod.dim == 0 || inverse(xi.matrix).has_value());
        }
        // T1 on the fixture modules.
        for (const auto& m : mods) {
            auto cm = coind(ga, x, restrict_to_ae(m, x));
            auto eta = unit_eta(m, cm);
            Mat t1 = eta.blocks[size_t(x)] * counit_epsilon(cm);
            t1_ok = t1_ok && t1.is_identity();
        }
    }
    rep.add("hom_dimensions_agree", dims_ok);
    rep.add("transposes_mutually_inverse", inverses_ok);
    rep.add("triangle_identity_counit", t1_ok);
    rep.add("triangle_identity_unit", t2_ok);
    rep.add("xi_bijective", xi_ok);

    // Naturality of eta on two fixture morphisms (direct-sum injection and
    // projection), at every degree.
    bool natural = true;
    {
        auto m0 = make_shift(ga, 0);
        auto sum = direct_sum(m0, make_shift(ga, n - 1));
        for (int x = 0; x < n && natural; ++x) {
            struct Square {
                const GradedModule& src;
                const GradedModule& tgt;
                const GradedMap& f;
            };
            for (const auto& [src, tgt, f] :
                 {Square{m0, sum.module, sum.inj1}, Square{sum.module, m0, sum.proj1}}) {
                auto c_src = coind(ga, x, restrict_to_ae(src, x));
                auto c_tgt = coind(ga, x, restrict_to_ae(tgt, x));
                auto lifted = coind_map(c_src, c_tgt, f.blocks[size_t(x)]);
                auto lhs = compose(unit_eta(src, c_src), lifted);
                auto rhs = compose(f, unit_eta(tgt, c_tgt));
                natural = natural && lhs.blocks == rhs.blocks;
            }
        }
    }
    rep.add("eta_natural", natural);

    // Commutative diagram against the smash-side construction.
    bool diagram = true;
    for (int x = 0; x < n && diagram; ++x)
        diagram = coind_diagram_check(*b, x, regular_module(ga->ae())).ok();
    rep.add("coind_diagram", diagram);
    return rep;
}

Report check_radical_suite(const Instance& inst, const SuiteOptions&) {
    Report rep;
    const auto& ga = inst.algebra;
    const int n = ga->group().order();
    auto mods = fixture_modules(inst);

    bool idem = true, vanish = true, functorial = true, criterion = true;
    for (int x = 0; x < n; ++x) {
        for (const auto& m : mods) {
            auto rad = radical_submodule(m, x);
            idem = idem && graded_subspace_dims(radical_subspace(rad.module, x)) ==
                               rad.module.dims;
            auto q = quotient_module(m, rad.subspace);
            vanish = vanish && graded_subspace_dims(radical_subspace(q.module, x)) ==
                                   std::vector<int>(size_t(n), 0);
            criterion = criterion &&
                        ((m.dims[size_t(x)] == 0) ==
                         (graded_subspace_dims(rad.subspace) == std::vector<int>(size_t(n), 0)));
        }
        // functoriality across all pairs of shifts
        for (int y = 0; y < n && functorial; ++y)
            for (int z = 0; z < n && functorial; ++z) {
                auto m = make_shift(ga, y);
                auto nn = make_shift(ga, z);
                auto rm = radical_subspace(m, x);
                auto rn = radical_subspace(nn, x);
                for (const auto& f : graded_hom(m, nn).basis)
                    for (int w = 0; w < n; ++w)
                        for (int r = 0; r < rm[size_t(w)].dim(); ++r)
                            if (!rn[size_t(w)].contains_row(rm[size_t(w)].basis().row(r) *
                                                            f.blocks[size_t(w)]))
                                functorial = false;
            }
    }
    rep.add("radical_idempotent", idem);
    rep.add("radical_vanishes_on_quotient", vanish);
    rep.add("radical_functorial", functorial);
    rep.add("torsionfree_criterion", criterion);
    return rep;
}

Report check_bijection_suite(const Instance& inst, const SuiteOptions& opt) {
    Report rep;
    SimplesOptions sopt;
    sopt.bound = opt.bound;
    sopt.iso.bound = opt.bound;
    sopt.iso.seed = opt.seed;
    for (int x = 0; x < inst.algebra->group().order(); ++x) {
        auto r = bijection_check(inst.algebra, x, sopt);
        rep.add("degree " + std::to_string(x) + " cardinality", r.s_count == r.sx_count,
                std::to_string(r.s_count) + " vs " + std::to_string(r.sx_count));
        for (const auto& item : r.details.items())
            rep.add("degree " + std::to_string(x) + " " + item.name, item.pass, item.witness);
    }
    return rep;
}

Report check_mod_simple_suite(const Instance& inst, const SuiteOptions& opt) {
    Report rep;
    auto b = SmashAlgebra::build(inst.algebra);
    for (int x = 0; x < inst.algebra->group().order(); ++x) {
        try {
            Report r = maximal_ideal_transport_check(*b, x, opt.bound);
            for (const auto& item : r.items())
                rep.add("degree " + std::to_string(x) + " " + item.name, item.pass, item.witness);
        } catch (const BoundExceeded& e) {
            rep.add("degree " + std::to_string(x) + " transport_skipped_bound", true, e.what());
        }
    }
    return rep;
}

Report check_semisimple_suite(const Instance& inst, const SuiteOptions& opt) {
    Report rep;
    SimplesOptions sopt;
    sopt.bound = opt.bound;
    sopt.iso.bound = opt.bound;
    sopt.iso.seed = opt.seed;
    bool all = true;
    for (int x = 0; x < inst.algebra->group().order(); ++x)
        for (const auto& cls : sweep_graded_simples(inst.algebra, x, sopt))
            all = all && is_semisimple_over_ae(cls.rep, opt.bound);
    rep.add("graded_simples_annihilate_jacobson_radical", all);
    return rep;
}

std::vector<std::string> known_suites() {
    return {"coring", "smash", "adjunction", "radical", "bijection", "mod-simple", "semisimple"};
}

Report run_check_suite(const std::string& suite, const Instance& inst, const SuiteOptions& opt) {
    if (suite == "coring") return check_coring_suite(inst, opt);
    if (suite == "smash") return check_smash_suite(inst, opt);
    if (suite == "adjunction") return check_adjunction_suite(inst, opt);
    if (suite == "radical") return check_radical_suite(inst, opt);
    if (suite == "bijection") return check_bijection_suite(inst, opt);
    if (suite == "mod-simple") return check_mod_simple_suite(inst, opt);
    if (suite == "semisimple") return check_semisimple_suite(inst, opt);
    if (suite == "all") {
        Report rep;
        for (const auto& s : known_suites()) {
            Report r = run_check_suite(s, inst, opt);
            for (const auto& item : r.items()) rep.add(s + ": " + item.name, item.pass, item.witness);
        }
        return rep;
    }
    throw InvalidInput("unknown suite '" + suite + "'");
}

} // namespace gradalg

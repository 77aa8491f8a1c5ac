#include <doctest.h>

#include <memory>

#include "gradalg/coring.hpp"
#include "gradalg/fixtures.hpp"

using namespace gradalg;

TEST_CASE("coring builds and verifies on every fixture") {
    for (const auto& fx : standard_fixtures()) {
        auto c = GroupCoring::build(fx.algebra);
        CHECK(c->dim() == fx.algebra->dim() * fx.algebra->group().order());
        CHECK(verify_coring(*c).ok());
    }
}

TEST_CASE("trivial group: C = A, Delta(a) = a (x) e") {
    auto a = dual_numbers_trivial();
    auto c = GroupCoring::build(a);
    CHECK(c->dim() == a->dim());
    std::vector<u32> t{0, 1}; // the element t
    auto d = c->delta(t);
    CHECK(d[size_t(c->flat_cc(1, 0, 0))] == 1);
    CHECK(c->counit(t) == t);
}

TEST_CASE("grouplike verdicts") {
    auto gz2 = group_algebra(std::make_shared<FiniteGroup>(cyclic_group(2)), 2);
    auto c = GroupCoring::build(gz2);

    for (int x = 0; x < 2; ++x) CHECK(c->is_grouplike(c->group_element(x)));

    // zero: counit 0 != 1
    CHECK_FALSE(c->is_grouplike(std::vector<u32>(size_t(c->dim()), 0)));

    // e + g in characteristic 2: counit vanishes
    Fp f(2);
    std::vector<u32> eg(size_t(c->dim()), 0);
    for (int x = 0; x < 2; ++x)
        for (size_t i = 0; i < 2; ++i)
            eg[size_t(c->flat(int(i), x))] =
                f.add(eg[size_t(c->flat(int(i), x))], c->group_element(x)[size_t(c->flat(int(i), x))]);
    CHECK_FALSE(c->is_grouplike(eg));

    // 2e + 2g over GF(3)[Z/2]: counit = 1 but Delta disagrees with the square.
    auto gz2_3 = group_algebra(std::make_shared<FiniteGroup>(cyclic_group(2)), 3);
    auto c3 = GroupCoring::build(gz2_3);
    std::vector<u32> v(size_t(c3->dim()), 0);
    Fp f3(3);
    for (int x = 0; x < 2; ++x) {
        auto gx = c3->group_element(x);
        for (size_t t = 0; t < v.size(); ++t) v[t] = f3.add(v[t], f3.mul(2, gx[t]));
    }
    CHECK(c3->counit(v) == c3->algebra().algebra().unit);
    CHECK_FALSE(c3->is_grouplike(v));
}

TEST_CASE("coinvariance components recover the grading") {
    for (const auto& fx : standard_fixtures()) {
        const auto& ga = fx.algebra;
        const int n = ga->group().order();
        std::vector<GradedModule> mods{make_shift(ga, 0), make_shift(ga, n - 1)};
        mods.push_back(direct_sum(mods[0], mods[1]).module);
        for (const auto& m : mods) {
            auto cd = comodule_of(m);
            int total = 0;
            for (int x = 0; x < n; ++x) {
                auto cov = cov_component(cd, x);
                CHECK(cov.dim() == m.dims[size_t(x)]);
                total += cov.dim();
            }
            CHECK(total == m.total_dim());
            // Round trip: regrading the comodule gives back the same module.
            auto back = graded_of(cd);
            CHECK(back.dims == m.dims);
            CHECK(back.act == m.act);
        }
        // zero module: all cov components vanish
        auto z = comodule_of(zero_graded_module(ga));
        for (int x = 0; x < n; ++x) CHECK(cov_component(z, x).dim() == 0);
    }
}

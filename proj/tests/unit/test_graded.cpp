#include <doctest.h>

#include <memory>

#include "gradalg/errors.hpp"
#include "gradalg/fixtures.hpp"
#include "gradalg/graded.hpp"

using namespace gradalg;

namespace {

std::shared_ptr<const FiniteGroup> z2() {
    return std::make_shared<FiniteGroup>(cyclic_group(2));
}

std::vector<Mat> no_gens(const GradedModule& m) {
    std::vector<Mat> g;
    for (size_t y = 0; y < m.dims.size(); ++y)
        g.push_back(Mat(0, m.dims[y], m.algebra->modulus()));
    return g;
}

} // namespace

TEST_CASE("group algebra GF(2)[Z/2] validates") {
    auto a = group_algebra(z2(), 2);
    CHECK(a->dim() == 2);
    CHECK(a->dim_of_degree(0) == 1);
    CHECK(a->dim_of_degree(1) == 1);
    CHECK(a->ae()->dim == 1);
}

TEST_CASE("broken structure constants are rejected with a witness") {
    // g*g = g instead of 1: violates associativity/unit axioms.
    std::vector<std::vector<std::vector<u32>>> sc(
        2, std::vector<std::vector<u32>>(2, std::vector<u32>(2, 0)));
    sc[0][0][0] = 1;
    sc[0][1][1] = 1;
    sc[1][0][1] = 1;
    sc[1][1][1] = 1; // g*g = g
    auto rep = validate_graded_algebra(cyclic_group(2), 2, {0, 1}, sc, {1, 0});
    CHECK_FALSE(rep.ok());
    CHECK(rep.first_failure() != nullptr);
    CHECK_THROWS_AS(GradedAlgebra::create(z2(), 2, {0, 1}, sc, {1, 0}), CheckFailure);

    // Grading violation: 1*1 picks up a degree-g component.
    auto sc2 = sc;
    sc2[1][1][1] = 0;
    sc2[1][1][0] = 1;
    sc2[0][0][1] = 1;
    auto rep2 = validate_graded_algebra(cyclic_group(2), 2, {0, 1}, sc2, {1, 0});
    CHECK_FALSE(rep2.ok());
    CHECK(rep2.first_failure()->name == "grading_compatible");
}

TEST_CASE("matrix algebra M2(GF(2)) with Z/2 grading validates") {
    auto a = mat2_gf2_z2();
    CHECK(a->dim() == 4);
    CHECK(a->dim_of_degree(0) == 2);
    CHECK(a->dim_of_degree(1) == 2);
    CHECK(a->ae()->dim == 2); // diagonal: GF(2) x GF(2)
}

TEST_CASE("component projection identities") {
    auto a = group_algebra(z2(), 2);
    std::vector<u32> one{1, 0}, oneplusg{1, 1};
    CHECK(a->project(one, 0) == one);
    CHECK(a->project(oneplusg, 1) == std::vector<u32>{0, 1});
    // pi_x is idempotent and orthogonal across degrees; parts sum back.
    for (int x = 0; x < 2; ++x) {
        auto px = a->project(oneplusg, x);
        CHECK(a->project(px, x) == px);
        CHECK(a->project(px, 1 - x) == std::vector<u32>{0, 0});
    }
    Fp f(2);
    std::vector<u32> total(2, 0);
    for (int x = 0; x < 2; ++x) {
        auto px = a->project(oneplusg, x);
        for (size_t i = 0; i < total.size(); ++i) total[i] = f.add(total[i], px[i]);
    }
    CHECK(total == oneplusg);
}

TEST_CASE("shift modules") {
    auto a = group_algebra(z2(), 2);
    auto me = make_shift(a, 0);
    CHECK(me.dims == std::vector<int>{1, 1});

    auto mg = make_shift(a, 1);
    CHECK(mg.dims == std::vector<int>{1, 1}); // degree-e comp = A_g, degree-g comp = A_e

    // ([x]A)_x = A_e for every fixture and degree.
    for (const auto& fx : standard_fixtures()) {
        for (int x = 0; x < fx.algebra->group().order(); ++x) {
            auto sh = make_shift(fx.algebra, x);
            CHECK(sh.dims[size_t(x)] == fx.algebra->ae()->dim);
        }
    }
}

TEST_CASE("submodule closure examples") {
    auto a = group_algebra(z2(), 2);
    auto m = make_shift(a, 0);

    // closure of 1 in ([e]A)_e is everything
    auto gens = no_gens(m);
    gens[0] = Mat::from_rows({{1}}, 1, 2);
    auto s = submodule_from_homogeneous(m, gens);
    CHECK(s.module.dims == m.dims);

    // closure of the empty set is zero
    auto s0 = submodule_from_homogeneous(m, no_gens(m));
    CHECK(s0.module.total_dim() == 0);

    // closure of g (degree g) is everything since g*g = 1
    auto gg = no_gens(m);
    gg[1] = Mat::from_rows({{1}}, 1, 2);
    auto sg = submodule_from_homogeneous(m, gg);
    CHECK(sg.module.dims == m.dims);

    // inclusion is a graded map
    CHECK(check_graded_map(sg.module, m, sg.inclusion));
}

TEST_CASE("closure is a closure operator") {
    auto a = upper_triangular_gf2_z2();
    auto m = make_shift(a, 0);
    // extensive + idempotent + monotone, seeded with E22 in degree e.
    auto gens = no_gens(m);
    gens[0] = Mat::from_rows({{0, 1}}, 2, 2); // E22 coords in A_e basis (E11,E22)
    auto c1 = close_under_action(m, gens);
    CHECK(c1[0].contains_row(Mat::from_rows({{0, 1}}, 2, 2)));
    // idempotent: closing the closure changes nothing
    std::vector<Mat> again;
    for (size_t y = 0; y < c1.size(); ++y) again.push_back(c1[y].basis());
    CHECK(close_under_action(m, again) == c1);
    // monotone: bigger seed gives bigger closure
    auto gens2 = gens;
    gens2[0] = Mat::from_rows({{0, 1}, {1, 0}}, 2, 2);
    auto c2 = close_under_action(m, gens2);
    CHECK(graded_subspace_contains(c2, c1));
}

TEST_CASE("quotients") {
    auto a = group_algebra(z2(), 2);
    auto m = make_shift(a, 0);

    auto q0 = quotient_module(m, zero_subspace_of(m));
    CHECK(q0.module.dims == m.dims);

    auto qfull = quotient_module(m, full_subspace_of(m));
    CHECK(qfull.module.total_dim() == 0);

    // ([e]A)/closure(g) = 0 because g generates.
    auto gg = no_gens(m);
    gg[1] = Mat::from_rows({{1}}, 1, 2);
    auto cl = close_under_action(m, gg);
    CHECK(quotient_module(m, cl).module.total_dim() == 0);

    // non-closed subspace rejected: span{E11} in upper-triangular [e]A
    auto b = upper_triangular_gf2_z2();
    auto mb = make_shift(b, 0);
    GradedSubspace bad = zero_subspace_of(mb);
    bad[0] = Subspace::span_rows(Mat::from_rows({{1, 0}}, 2, 2));
    CHECK_THROWS_AS(quotient_module(mb, bad), CheckFailure);
}

TEST_CASE("direct sums") {
    auto a = group_algebra(z2(), 2);
    auto me = make_shift(a, 0);
    auto mg = make_shift(a, 1);
    auto s = direct_sum(me, mg);
    CHECK(s.module.dims == std::vector<int>{2, 2});
    CHECK(check_graded_map(me, s.module, s.inj1));
    CHECK(check_graded_map(s.module, mg, s.proj2));

    auto z = zero_graded_module(a);
    auto s2 = direct_sum(me, z);
    CHECK(s2.module.dims == me.dims);

    // projection then injection composes to identity on the summand
    auto back = compose(s.inj1, s.proj1);
    CHECK(back.blocks[0].is_identity());
    CHECK(back.blocks[1].is_identity());
}

TEST_CASE("quotient projection is a graded map and well-defined") {
    auto b = upper_triangular_gf2_z2();
    auto mb = make_shift(b, 0);
    // closure(E11) = span{E11} + span{E12} since E11*E12 = E12
    auto gens = no_gens(mb);
    gens[0] = Mat::from_rows({{1, 0}}, 2, 2);
    auto cl = close_under_action(mb, gens);
    CHECK(graded_subspace_dims(cl) == std::vector<int>{1, 1});
    auto q = quotient_module(mb, cl);
    CHECK(q.module.dims == std::vector<int>{1, 0});
    CHECK(check_graded_map(mb, q.module, q.projection));
    // closure(E22) stays 1-dimensional: E22*E12 = 0
    auto gens2 = no_gens(mb);
    gens2[0] = Mat::from_rows({{0, 1}}, 2, 2);
    CHECK(graded_subspace_dims(close_under_action(mb, gens2)) == std::vector<int>{1, 0});
}

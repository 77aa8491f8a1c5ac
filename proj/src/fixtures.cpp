#include "gradalg/fixtures.hpp"

namespace gradalg {

namespace {

std::vector<std::vector<std::vector<u32>>> zero_sc(int dim) {
    return std::vector<std::vector<std::vector<u32>>>(
        size_t(dim), std::vector<std::vector<u32>>(size_t(dim), std::vector<u32>(size_t(dim), 0)));
}

} // namespace

std::shared_ptr<const GradedAlgebra> group_algebra(std::shared_ptr<const FiniteGroup> g, u32 p) {
    const int n = g->order();
    auto sc = zero_sc(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) sc[size_t(x)][size_t(y)][size_t(g->mul(x, y))] = 1;
    std::vector<int> deg(size_t(n), 0);
    for (int x = 0; x < n; ++x) deg[size_t(x)] = x;
    std::vector<u32> unit(size_t(n), 0);
    unit[size_t(g->neutral())] = 1;
    return GradedAlgebra::create(std::move(g), p, std::move(deg), std::move(sc), std::move(unit));
}

std::shared_ptr<const GradedAlgebra> mat2_gf2_z2() {
    // Basis: E11, E22, E12, E21; E_ab * E_cd = delta_bc E_ad.
    auto sc = zero_sc(4);
    struct MU { int a, b; };
    const MU mu[4] = {{1, 1}, {2, 2}, {1, 2}, {2, 1}};
    auto find = [&](int a, int b) {
        for (int k = 0; k < 4; ++k)
            if (mu[k].a == a && mu[k].b == b) return k;
        return -1;
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (mu[i].b == mu[j].a) sc[size_t(i)][size_t(j)][size_t(find(mu[i].a, mu[j].b))] = 1;
    std::vector<int> deg{0, 0, 1, 1};
    std::vector<u32> unit{1, 1, 0, 0};
    auto z2 = std::make_shared<FiniteGroup>(cyclic_group(2));
    return GradedAlgebra::create(std::move(z2), 2, std::move(deg), std::move(sc), std::move(unit));
}

std::shared_ptr<const GradedAlgebra> upper_triangular_gf2_z2() {
    // Basis: E11, E22, E12. Products: E11*E11=E11, E22*E22=E22,
    // E11*E12=E12, E12*E22=E12, everything else zero.
    auto sc = zero_sc(3);
    sc[0][0][0] = 1;
    sc[1][1][1] = 1;
    sc[0][2][2] = 1;
    sc[2][1][2] = 1;
    std::vector<int> deg{0, 0, 1};
    std::vector<u32> unit{1, 1, 0};
    auto z2 = std::make_shared<FiniteGroup>(cyclic_group(2));
    return GradedAlgebra::create(std::move(z2), 2, std::move(deg), std::move(sc), std::move(unit));
}

std::shared_ptr<const GradedAlgebra> dual_numbers_trivial() {
    // Basis: 1, t with t^2 = 0.
    auto sc = zero_sc(2);
    sc[0][0][0] = 1;
    sc[0][1][1] = 1;
    sc[1][0][1] = 1;
    std::vector<int> deg{0, 0};
    std::vector<u32> unit{1, 0};
    auto triv = std::make_shared<FiniteGroup>(trivial_group());
    return GradedAlgebra::create(std::move(triv), 2, std::move(deg), std::move(sc), std::move(unit));
}

std::vector<Fixture> standard_fixtures() {
    auto z2 = std::make_shared<FiniteGroup>(cyclic_group(2));
    auto z3 = std::make_shared<FiniteGroup>(cyclic_group(3));
    return {
        {"gf2_z2_group_algebra", group_algebra(z2, 2)},
        {"gf3_z2_group_algebra", group_algebra(z2, 3)},
        {"gf2_z3_group_algebra", group_algebra(z3, 2)},
        {"mat2_gf2_z2", mat2_gf2_z2()},
        {"upper_triangular_gf2_z2", upper_triangular_gf2_z2()},
        {"dual_numbers_trivial", dual_numbers_trivial()},
    };
}

} // namespace gradalg

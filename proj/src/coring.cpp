#include "gradalg/coring.hpp"

#include <string>

#include "gradalg/errors.hpp"

namespace gradalg {

std::shared_ptr<const GroupCoring> GroupCoring::build(std::shared_ptr<const GradedAlgebra> algebra) {
    auto c = std::make_shared<GroupCoring>();
    c->algebra_ = std::move(algebra);
    Report rep = verify_coring(*c);
    if (!rep.ok()) {
        const CheckItem* f = rep.first_failure();
        throw CheckFailure("coring verification failed: " + f->name +
                           (f->witness.empty() ? "" : " " + f->witness));
    }
    return c;
}

std::vector<u32> GroupCoring::right_action(const std::vector<u32>& c,
                                           const std::vector<u32>& a) const {
    // (b_i x) * a_z = (b_i a_z)(xz) for homogeneous a_z.
    const auto& ga = *algebra_;
    const FiniteGroup& g = ga.group();
    Fp f(ga.modulus());
    std::vector<u32> out(size_t(dim()), 0);
    for (int x = 0; x < group_order(); ++x)
        for (int i = 0; i < ga.dim(); ++i) {
            u32 ci = c[size_t(flat(i, x))];
            if (ci == 0) continue;
            for (int j = 0; j < ga.dim(); ++j) {
                u32 aj = a[size_t(j)];
                if (aj == 0) continue;
                int tx = g.mul(x, ga.degree_of(j));
                const auto& prod = ga.algebra().sc[size_t(i)][size_t(j)];
                u32 s = f.mul(ci, aj);
                for (int k = 0; k < ga.dim(); ++k)
                    if (prod[size_t(k)] != 0) {
                        int t = flat(k, tx);
                        out[size_t(t)] = f.add(out[size_t(t)], f.mul(s, prod[size_t(k)]));
                    }
            }
        }
    return out;
}

std::vector<u32> GroupCoring::left_action(const std::vector<u32>& a,
                                          const std::vector<u32>& c) const {
    const auto& ga = *algebra_;
    Fp f(ga.modulus());
    std::vector<u32> out(size_t(dim()), 0);
    for (int x = 0; x < group_order(); ++x) {
        std::vector<u32> comp(size_t(ga.dim()), 0);
        for (int i = 0; i < ga.dim(); ++i) comp[size_t(i)] = c[size_t(flat(i, x))];
        auto prod = ga.algebra().mul(a, comp);
        for (int k = 0; k < ga.dim(); ++k)
            out[size_t(flat(k, x))] = f.add(out[size_t(flat(k, x))], prod[size_t(k)]);
    }
    return out;
}

std::vector<u32> GroupCoring::group_component(const std::vector<u32>& c, int x) const {
    std::vector<u32> out(size_t(algebra_->dim()), 0);
    for (int i = 0; i < algebra_->dim(); ++i) out[size_t(i)] = c[size_t(flat(i, x))];
    return out;
}

std::vector<u32> GroupCoring::delta(const std::vector<u32>& c) const {
    const int n = group_order(), d = algebra_->dim();
    std::vector<u32> out(size_t(n) * n * d, 0);
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < d; ++i) out[size_t(flat_cc(i, x, x))] = c[size_t(flat(i, x))];
    return out;
}

std::vector<u32> GroupCoring::counit(const std::vector<u32>& c) const {
    const int n = group_order(), d = algebra_->dim();
    Fp f(algebra_->modulus());
    std::vector<u32> out(size_t(d), 0);
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < d; ++i) out[size_t(i)] = f.add(out[size_t(i)], c[size_t(flat(i, x))]);
    return out;
}

std::vector<u32> GroupCoring::tensor_cc(const std::vector<u32>& c,
                                        const std::vector<u32>& cp) const {
    // c (x) a_j y = (c * a_j) (x) y  -- coefficients of the right leg move
    // across the tensor as a right action on the left leg.
    const int n = group_order(), d = algebra_->dim();
    Fp f(algebra_->modulus());
    std::vector<u32> out(size_t(n) * n * d, 0);
    for (int y = 0; y < n; ++y)
        for (int j = 0; j < d; ++j) {
            u32 coef = cp[size_t(flat(j, y))];
            if (coef == 0) continue;
            std::vector<u32> a(size_t(d), 0);
            a[size_t(j)] = coef;
            auto moved = right_action(c, a);
            for (int x = 0; x < n; ++x)
                for (int i = 0; i < d; ++i) {
                    int t = flat_cc(i, x, y);
                    out[size_t(t)] = f.add(out[size_t(t)], moved[size_t(flat(i, x))]);
                }
        }
    return out;
}

std::vector<u32> GroupCoring::group_element(int x) const {
    std::vector<u32> c(size_t(dim()), 0);
    const auto& unit = algebra_->algebra().unit;
    for (int i = 0; i < algebra_->dim(); ++i) c[size_t(flat(i, x))] = unit[size_t(i)];
    return c;
}

bool GroupCoring::is_grouplike(const std::vector<u32>& c) const {
    if (counit(c) != algebra_->algebra().unit) return false;
    return delta(c) == tensor_cc(c, c);
}

Report verify_coring(const GroupCoring& c) {
    Report rep;
    const auto& ga = c.algebra();
    const int n = c.group_order(), d = ga.dim();
    Fp f(ga.modulus());

    // (Delta (x) id) Delta = (id (x) Delta) Delta on all basis elements.
    bool coassoc = true;
    std::string cw;
    for (int x = 0; x < n && coassoc; ++x)
        for (int i = 0; i < d && coassoc; ++i) {
            std::vector<u32> basis(size_t(c.dim()), 0);
            basis[size_t(c.flat(i, x))] = 1;
            auto dd = c.delta(basis);
            // left: apply Delta to the left leg of each (j, u, v).
            std::vector<u32> lhs(size_t(n) * n * n * d, 0);
            std::vector<u32> rhs(size_t(n) * n * n * d, 0);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    for (int j = 0; j < d; ++j) {
                        u32 coef = dd[size_t(c.flat_cc(j, u, v))];
                        if (coef == 0) continue;
                        // Delta(b_j u) = (b_j u) (x) u
                        int il = c.flat_ccc(j, u, u, v);
                        lhs[size_t(il)] = f.add(lhs[size_t(il)], coef);
                        // Delta(v) = v (x) v on the free right leg
                        int ir = c.flat_ccc(j, u, v, v);
                        rhs[size_t(ir)] = f.add(rhs[size_t(ir)], coef);
                    }
            if (lhs != rhs) {
                coassoc = false;
                cw = "basis (" + std::to_string(i) + "," + std::to_string(x) + ")";
            }
        }
    rep.add("coassociative", coassoc, cw);

    // (eps (x) id) Delta = id = (id (x) eps) Delta.
    bool counit_ok = true;
    std::string uw;
    for (int x = 0; x < n && counit_ok; ++x)
        for (int i = 0; i < d && counit_ok; ++i) {
            std::vector<u32> basis(size_t(c.dim()), 0);
            basis[size_t(c.flat(i, x))] = 1;
            auto dd = c.delta(basis);
            std::vector<u32> lhs(size_t(c.dim()), 0), rhs(size_t(c.dim()), 0);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    for (int j = 0; j < d; ++j) {
                        u32 coef = dd[size_t(c.flat_cc(j, u, v))];
                        if (coef == 0) continue;
                        // eps on the left leg: eps(b_j u) * v = b_j * v placed at (j, v)
                        lhs[size_t(c.flat(j, v))] = f.add(lhs[size_t(c.flat(j, v))], coef);
                        // eps on the right leg: (b_j u) * eps(v) = (b_j u) * 1
                        rhs[size_t(c.flat(j, u))] = f.add(rhs[size_t(c.flat(j, u))], coef);
                    }
            if (lhs != basis || rhs != basis) {
                counit_ok = false;
                uw = "basis (" + std::to_string(i) + "," + std::to_string(x) + ")";
            }
        }
    rep.add("counital", counit_ok, uw);

    // The right action rule x a_y = a_y (xy) on homogeneous basis pairs.
    bool act_ok = true;
    std::string aw;
    for (int x = 0; x < n && act_ok; ++x)
        for (int j = 0; j < d && act_ok; ++j) {
            auto lhs = c.right_action(c.group_element(x), unit_vector(d, j));
            // expected: b_j placed at group slot x*deg(b_j), i.e. left_action(b_j, xy)
            int ty = ga.group().mul(x, ga.degree_of(j));
            auto rhs = c.left_action(unit_vector(d, j), c.group_element(ty));
            if (lhs != rhs) {
                act_ok = false;
                aw = "x=" + std::to_string(x) + ", b" + std::to_string(j);
            }
        }
    rep.add("right_action_rule", act_ok, aw);

    // Every group element is grouplike.
    bool gl = true;
    std::string gw;
    for (int x = 0; x < n; ++x)
        if (!c.is_grouplike(c.group_element(x))) {
            gl = false;
            gw = "x=" + std::to_string(x);
            break;
        }
    rep.add("group_elements_grouplike", gl, gw);
    return rep;
}

ComoduleData comodule_of(const GradedModule& m) {
    const auto& ga = *m.algebra;
    const int n = ga.group().order();
    const int total = m.total_dim();
    ComoduleData out;
    out.algebra = m.algebra;
    out.dim = total;
    for (int i = 0; i < ga.dim(); ++i) out.action.push_back(m.global_action(i));
    out.rho = Mat(total, total * n, ga.modulus());
    for (int y = 0; y < n; ++y)
        for (int r = 0; r < m.dims[size_t(y)]; ++r) {
            int g = m.offset(y) + r;
            out.rho.at(g, y * total + g) = 1;
        }
    return out;
}

Subspace cov_component(const ComoduleData& c, int x) {
    // Solve rho(m) = m (x) x over the flattened module.
    const int n = c.algebra->group().order();
    const int total = c.dim;
    Mat sys(total, total * n, c.algebra->modulus());
    Fp f(c.algebra->modulus());
    for (int g = 0; g < total; ++g) {
        for (int t = 0; t < total * n; ++t) sys.at(g, t) = c.rho.at(g, t);
        int slot = x * total + g;
        sys.at(g, slot) = f.sub(sys.at(g, slot), 1);
    }
    return left_kernel(sys);
}

GradedModule graded_of(const ComoduleData& c) {
    const auto& ga = *c.algebra;
    const int n = ga.group().order();
    std::vector<Subspace> cov;
    int total_cov = 0;
    for (int x = 0; x < n; ++x) {
        cov.push_back(cov_component(c, x));
        total_cov += cov.back().dim();
    }
    if (total_cov != c.dim)
        throw CheckFailure("graded_of: coinvariance components do not span the module");

    std::vector<int> dims;
    for (const auto& s : cov) dims.push_back(s.dim());
    std::vector<std::vector<Mat>> act(size_t(ga.dim()), std::vector<Mat>(size_t(n)));
    for (int i = 0; i < ga.dim(); ++i)
        for (int y = 0; y < n; ++y) {
            int ty = ga.group().mul(y, ga.degree_of(i));
            Mat blk(dims[size_t(y)], dims[size_t(ty)], ga.modulus());
            for (int r = 0; r < dims[size_t(y)]; ++r) {
                Mat img = cov[size_t(y)].basis().row(r) * c.action[size_t(i)];
                auto coords = cov[size_t(ty)].try_coords_of(img);
                if (!coords)
                    throw CheckFailure("graded_of: action does not respect cov components");
                for (size_t k = 0; k < coords->size(); ++k) blk.at(r, int(k)) = (*coords)[k];
            }
            act[size_t(i)][size_t(y)] = blk;
        }
    return make_graded_module(c.algebra, std::move(dims), std::move(act));
}

} // namespace gradalg

#include "gradalg/torsion.hpp"

#include "gradalg/errors.hpp"

namespace gradalg {

GradedSubspace radical_subspace(const GradedModule& m, int x) {
    const auto& ga = *m.algebra;
    const FiniteGroup& g = ga.group();
    const int n = g.order();
    GradedSubspace rad;
    for (int y = 0; y < n; ++y) {
        int d = g.mul(g.inverse(x), y);
        Mat gens(0, m.dims[size_t(y)], ga.modulus());
        for (int r = 0; r < m.dims[size_t(x)]; ++r) {
            Mat v(1, m.dims[size_t(x)], ga.modulus());
            v.at(0, r) = 1;
            for (int gi : ga.basis_of_degree(d))
                gens = Mat::vstack(gens, v * m.act[size_t(gi)][size_t(x)]);
        }
        rad.push_back(Subspace::span_rows(gens));
    }
    return rad;
}

SubmoduleResult radical_submodule(const GradedModule& m, int x) {
    return submodule_from_subspace(m, radical_subspace(m, x));
}

TorsionReport torsion_report(const GradedModule& m, int x) {
    TorsionReport rep;
    rep.degree = x;
    rep.radical = radical_subspace(m, x);
    rep.is_torsionfree = m.dims[size_t(x)] == 0;
    rep.is_torsion = graded_subspace_dims(rep.radical) == m.dims;
    return rep;
}

bool is_torsion(const GradedModule& m, int x) { return torsion_report(m, x).is_torsion; }
bool is_torsionfree(const GradedModule& m, int x) { return m.dims[size_t(x)] == 0; }

TensorModel tensor_model(std::shared_ptr<const GradedAlgebra> ga, int x, const AeModule& y) {
    const FiniteGroup& g = ga->group();
    const int n = g.order();
    const u32 p = ga->modulus();
    const Algebra& alg = ga->algebra();
    const int ae_dim = ga->ae()->dim;
    const auto& ae_idx = ga->ae_indices();

    // Per degree: the balancing subspace of Y (x) A_{x^-1 w} and its quotient.
    std::vector<int> raw_dims(size_t(n), 0);
    std::vector<Subspace> balancing;
    std::vector<QuotientStructure> qs;
    std::vector<int> dims(size_t(n), 0);
    for (int w = 0; w < n; ++w) {
        int d = g.mul(g.inverse(x), w);
        const auto& didx = ga->basis_of_degree(d);
        const int dn = int(didx.size());
        raw_dims[size_t(w)] = y.dim * dn;
        Mat gens(0, raw_dims[size_t(w)], p);
        for (int u = 0; u < y.dim; ++u)
            for (int k = 0; k < ae_dim; ++k)
                for (int v = 0; v < dn; ++v) {
                    Mat rel(1, raw_dims[size_t(w)], p);
                    Fp f(p);
                    // (u a_k) (x) v
                    for (int uu = 0; uu < y.dim; ++uu) {
                        u32 c = y.act[size_t(k)].at(u, uu);
                        if (c != 0)
                            rel.at(0, uu * dn + v) = f.add(rel.at(0, uu * dn + v), c);
                    }
                    // - u (x) (a_k v)
                    auto prod = alg.sc[size_t(ae_idx[size_t(k)])][size_t(didx[size_t(v)])];
                    auto local = ga->component_coords(prod, d);
                    for (int vv = 0; vv < dn; ++vv)
                        if (local[size_t(vv)] != 0)
                            rel.at(0, u * dn + vv) =
                                f.sub(rel.at(0, u * dn + vv), local[size_t(vv)]);
                    if (!rel.is_zero()) gens = Mat::vstack(gens, rel);
                }
        balancing.push_back(Subspace::span_rows(gens));
        qs.push_back(quotient_structure(balancing.back()));
        dims[size_t(w)] = raw_dims[size_t(w)] - balancing.back().dim();
    }

    // Raw action on the second tensor factor, checked to preserve balancing.
    auto raw_action = [&](int i, int w) {
        int d = g.mul(g.inverse(x), w);
        int tw = g.mul(w, ga->degree_of(i));
        int td = g.mul(g.inverse(x), tw);
        const auto& didx = ga->basis_of_degree(d);
        const auto& tidx = ga->basis_of_degree(td);
        Mat raw(raw_dims[size_t(w)], raw_dims[size_t(tw)], p);
        for (int u = 0; u < y.dim; ++u)
            for (int v = 0; v < int(didx.size()); ++v) {
                auto prod = alg.sc[size_t(didx[size_t(v)])][size_t(i)];
                auto local = ga->component_coords(prod, td);
                for (int vv = 0; vv < int(tidx.size()); ++vv)
                    raw.at(u * int(didx.size()) + v, u * int(tidx.size()) + vv) = local[size_t(vv)];
            }
        return raw;
    };

    std::vector<std::vector<Mat>> act(size_t(ga->dim()), std::vector<Mat>(size_t(n)));
    for (int i = 0; i < ga->dim(); ++i)
        for (int w = 0; w < n; ++w) {
            int tw = g.mul(w, ga->degree_of(i));
            Mat raw = raw_action(i, w);
            for (int r = 0; r < balancing[size_t(w)].dim(); ++r) {
                Mat img = balancing[size_t(w)].basis().row(r) * raw;
                if (!balancing[size_t(tw)].contains_row(img))
                    throw CheckFailure("tensor_model: action does not preserve balancing");
            }
            act[size_t(i)][size_t(w)] = qs[size_t(w)].reps * raw * qs[size_t(tw)].proj;
        }

    TensorModel out{make_graded_module(ga, std::move(dims), std::move(act)), coind(ga, x, y), {}};

    // Canonical map: u (x) v |-> [b' |-> u * (v b')], evaluated on coset reps.
    for (int w = 0; w < n; ++w) {
        int d = g.mul(g.inverse(x), w);
        int dprime = g.mul(g.inverse(w), x);
        const auto& didx = ga->basis_of_degree(d);
        const auto& bidx = ga->basis_of_degree(dprime);
        const int dn = int(didx.size());
        Mat blk(out.mod.dims[size_t(w)], out.coind_target.mod.dims[size_t(w)], p);
        for (int r = 0; r < blk.rows(); ++r) {
            Mat rep_row = qs[size_t(w)].reps.row(r);
            Mat phi(int(bidx.size()), y.dim, p);
            for (int u = 0; u < y.dim; ++u)
                for (int v = 0; v < dn; ++v) {
                    u32 coef = rep_row.at(0, u * dn + v);
                    if (coef == 0) continue;
                    for (int bi = 0; bi < int(bidx.size()); ++bi) {
                        // v * b' lands in A_e; let it act on u in Y.
                        auto prod = alg.sc[size_t(didx[size_t(v)])][size_t(bidx[size_t(bi)])];
                        auto elocal = ga->component_coords(prod, g.neutral());
                        Mat upart = Mat::row_vector(unit_vector(y.dim, u), p).scaled(coef) *
                                    ae_action_of(y, elocal);
                        for (int c = 0; c < y.dim; ++c) {
                            Fp f(p);
                            phi.at(bi, c) = f.add(phi.at(bi, c), upart.at(0, c));
                        }
                    }
                }
            auto coords = ae_hom_coords(out.coind_target.hom[size_t(w)], phi);
            for (size_t c = 0; c < coords.size(); ++c) blk.at(r, int(c)) = coords[c];
        }
        out.to_coind.blocks.push_back(blk);
    }
    if (!check_graded_map(out.mod, out.coind_target.mod, out.to_coind))
        throw CheckFailure("tensor_model: canonical map is not a graded morphism");
    return out;
}

} // namespace gradalg

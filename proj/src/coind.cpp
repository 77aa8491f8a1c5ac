#include "gradalg/coind.hpp"

#include <string>

#include "gradalg/errors.hpp"

namespace gradalg {

namespace {

// Flat coordinate of each global algebra basis element inside [x]A, whose
// components are ordered by degree block.
std::vector<int> shift_perm(const GradedAlgebra& ga, int x) {
    const FiniteGroup& g = ga.group();
    std::vector<int> perm(size_t(ga.dim()), 0);
    int off = 0;
    for (int y = 0; y < g.order(); ++y) {
        const auto& idx = ga.basis_of_degree(g.mul(g.inverse(x), y));
        for (size_t a = 0; a < idx.size(); ++a) perm[size_t(idx[a])] = off + int(a);
        off += int(idx.size());
    }
    return perm;
}

} // namespace

std::vector<u32> CoinducedModule::eval(int y, const std::vector<u32>& coords,
                                       const std::vector<u32>& b_local) const {
    const u32 p = n.ring->p;
    Mat f = ae_hom_from_coords(hom[size_t(y)], coords, p);
    Mat val = Mat::row_vector(b_local, p) * f;
    return val.row_copy(0);
}

CoinducedModule coind(std::shared_ptr<const GradedAlgebra> ga, int x, const AeModule& n) {
    if (n.ring != ga->ae()) throw InvalidInput("coind: module is not over this A_e");
    const FiniteGroup& g = ga->group();
    const int ng = g.order();
    const u32 p = ga->modulus();

    CoinducedModule out;
    out.x = x;
    out.n = n;

    std::vector<int> dims(size_t(ng), 0);
    for (int y = 0; y < ng; ++y) {
        int d = g.mul(g.inverse(y), x);
        out.hom.push_back(ae_hom(algebra_component_module(*ga, d), n));
        dims[size_t(y)] = out.hom.back().dim();
    }

    // (f * a_z)(b) = f(a_z b): the action moves degree y to yz by
    // precomposition with left multiplication a_z: A_{(yz)^-1 x} -> A_{y^-1 x}.
    std::vector<std::vector<Mat>> act(size_t(ga->dim()), std::vector<Mat>(size_t(ng)));
    for (int i = 0; i < ga->dim(); ++i) {
        const int z = ga->degree_of(i);
        for (int y = 0; y < ng; ++y) {
            int ty = g.mul(y, z);
            int src_deg = g.mul(g.inverse(y), x);   // domain of f
            int tgt_deg = g.mul(g.inverse(ty), x);  // domain of f * a_z
            const auto& tgt_idx = ga->basis_of_degree(tgt_deg);
            Mat lmul(int(tgt_idx.size()), ga->dim_of_degree(src_deg), p);
            for (size_t r = 0; r < tgt_idx.size(); ++r) {
                auto prod = ga->algebra().sc[size_t(i)][size_t(tgt_idx[r])];
                auto local = ga->component_coords(prod, src_deg);
                for (size_t cidx = 0; cidx < local.size(); ++cidx)
                    lmul.at(int(r), int(cidx)) = local[cidx];
            }
            Mat blk(dims[size_t(y)], dims[size_t(ty)], p);
            for (int m = 0; m < dims[size_t(y)]; ++m) {
                Mat moved = lmul * out.hom[size_t(y)].basis[size_t(m)];
                auto coords = ae_hom_coords(out.hom[size_t(ty)], moved);
                for (size_t cidx = 0; cidx < coords.size(); ++cidx)
                    blk.at(m, int(cidx)) = coords[cidx];
            }
            act[size_t(i)][size_t(y)] = blk;
        }
    }
    out.mod = make_graded_module(std::move(ga), std::move(dims), std::move(act));
    return out;
}

GradedMap coind_map(const CoinducedModule& src, const CoinducedModule& tgt, const Mat& h) {
    const int ng = int(src.hom.size());
    GradedMap f;
    for (int y = 0; y < ng; ++y) {
        Mat blk(src.hom[size_t(y)].dim(), tgt.hom[size_t(y)].dim(), h.modulus());
        for (int m = 0; m < blk.rows(); ++m) {
            Mat composed = src.hom[size_t(y)].basis[size_t(m)] * h;
            auto coords = ae_hom_coords(tgt.hom[size_t(y)], composed);
            for (size_t c = 0; c < coords.size(); ++c) blk.at(m, int(c)) = coords[c];
        }
        f.blocks.push_back(blk);
    }
    return f;
}

GradedMap unit_eta(const GradedModule& m, const CoinducedModule& target) {
    const auto& ga = *m.algebra;
    const FiniteGroup& g = ga.group();
    const int ng = g.order();
    const int x = target.x;
    const u32 p = ga.modulus();

    GradedMap eta;
    for (int y = 0; y < ng; ++y) {
        int d = g.mul(g.inverse(y), x); // domain degree of the hom component
        const auto& idx = ga.basis_of_degree(d);
        Mat blk(m.dims[size_t(y)], target.mod.dims[size_t(y)], p);
        for (int r = 0; r < m.dims[size_t(y)]; ++r) {
            // the map b |-> m_r * b as a matrix A_d -> M_x
            Mat phi(int(idx.size()), m.dims[size_t(x)], p);
            for (size_t bi = 0; bi < idx.size(); ++bi) {
                Mat v(1, m.dims[size_t(y)], p);
                v.at(0, r) = 1;
                Mat img = v * m.act[size_t(idx[bi])][size_t(y)];
                for (int c = 0; c < img.cols(); ++c) phi.at(int(bi), c) = img.at(0, c);
            }
            auto coords = ae_hom_coords(target.hom[size_t(y)], phi);
            for (size_t c = 0; c < coords.size(); ++c) blk.at(r, int(c)) = coords[c];
        }
        eta.blocks.push_back(blk);
    }
    return eta;
}

Mat counit_epsilon(const CoinducedModule& cn) {
    const auto& ga = *cn.mod.algebra;
    const u32 p = ga.modulus();
    const int x = cn.x;
    Mat eps(cn.mod.dims[size_t(x)], cn.n.dim, p);
    Mat unit_row = Mat::row_vector(ga.unit_ae_coords(), p);
    for (int m = 0; m < eps.rows(); ++m) {
        Mat val = unit_row * cn.hom[size_t(x)].basis[size_t(m)];
        for (int c = 0; c < val.cols(); ++c) eps.at(m, c) = val.at(0, c);
    }
    return eps;
}

AdjunctionTranspose adjunction_transpose(const GradedModule& m, const CoinducedModule& cn) {
    const auto& ga = *m.algebra;
    const FiniteGroup& g = ga.group();
    const int x = cn.x;
    const u32 p = ga.modulus();

    AdjunctionTranspose out{graded_hom(m, cn.mod), ae_hom(restrict_to_ae(m, x), cn.n), Mat(), Mat()};
    Mat eps = counit_epsilon(cn);

    out.forward = Mat(out.graded_side.dim(), out.ae_side.dim(), p);
    for (int gi = 0; gi < out.graded_side.dim(); ++gi) {
        Mat h = out.graded_side.basis[size_t(gi)].blocks[size_t(x)] * eps;
        auto coords = ae_hom_coords(out.ae_side, h);
        for (size_t c = 0; c < coords.size(); ++c) out.forward.at(gi, int(c)) = coords[c];
    }

    out.backward = Mat(out.ae_side.dim(), out.graded_side.dim(), p);
    for (int hi = 0; hi < out.ae_side.dim(); ++hi) {
        const Mat& h = out.ae_side.basis[size_t(hi)];
        GradedMap gm;
        for (int y = 0; y < g.order(); ++y) {
            int d = g.mul(g.inverse(y), x);
            const auto& idx = ga.basis_of_degree(d);
            Mat blk(m.dims[size_t(y)], cn.mod.dims[size_t(y)], p);
            for (int r = 0; r < m.dims[size_t(y)]; ++r) {
                Mat phi(int(idx.size()), cn.n.dim, p);
                for (size_t bi = 0; bi < idx.size(); ++bi) {
                    Mat v(1, m.dims[size_t(y)], p);
                    v.at(0, r) = 1;
                    Mat img = (v * m.act[size_t(idx[bi])][size_t(y)]) * h;
                    for (int c = 0; c < img.cols(); ++c) phi.at(int(bi), c) = img.at(0, c);
                }
                auto coords = ae_hom_coords(cn.hom[size_t(y)], phi);
                for (size_t c = 0; c < coords.size(); ++c) blk.at(r, int(c)) = coords[c];
            }
            gm.blocks.push_back(blk);
        }
        auto gcoords = graded_hom_coords(out.graded_side, gm);
        for (size_t c = 0; c < gcoords.size(); ++c) out.backward.at(hi, int(c)) = gcoords[c];
    }
    return out;
}

CounitXi counit_xi(const CoinducedModule& cy) {
    const auto& ga = *cy.mod.algebra;
    const u32 p = ga.modulus();
    auto shift = make_shift(cy.mod.algebra, cy.x);
    CounitXi out{graded_hom(shift, cy.mod), Mat()};
    Mat eps = counit_epsilon(cy);
    Mat unit_row = Mat::row_vector(ga.unit_ae_coords(), p);
    out.matrix = Mat(out.hom.dim(), cy.n.dim, p);
    for (int gi = 0; gi < out.hom.dim(); ++gi) {
        // f |-> eps(f_x(1)); ([x]A)_x has the A_e basis, so 1 = unit coords.
        Mat val = (unit_row * out.hom.basis[size_t(gi)].blocks[size_t(cy.x)]) * eps;
        for (int c = 0; c < val.cols(); ++c) out.matrix.at(gi, c) = val.at(0, c);
    }
    return out;
}

SigmaDual sigma_dual(const SmashAlgebra& b, int x) {
    const auto& ga = b.graded();
    const u32 p = ga.modulus();
    const int da = ga.dim();

    SigmaDual out;
    out.x = x;
    out.sigma = b_module_of(b, make_shift(b.graded_ptr(), x));
    BModule regular_b = regular_module(b.ring());
    out.hom_b = ae_hom(out.sigma, regular_b);
    const int hd = out.hom_b.dim();

    // Dual basis: u_j the standard basis of Sigma, find u_j* in Sigma* with
    // sum_j u_j * (u_j*(v)) = v for all v. Solvability certifies that
    // Sigma_B is finitely generated projective.
    {
        const int unknowns = da * hd;
        Mat w(unknowns, da * da, p);
        for (int j = 0; j < da; ++j)
            for (int m = 0; m < hd; ++m)
                for (int v = 0; v < da; ++v) {
                    Mat sig = out.hom_b.basis[size_t(m)]; // dimSigma x dimB
                    Mat elem = sig.row(v);                // u_m*(e_v) in B coords
                    Mat action = ae_action_of(out.sigma, elem.row_copy(0));
                    for (int c = 0; c < da; ++c)
                        w.at(j * hd + m, v * da + c) = action.at(j, c);
                }
        Mat target(1, da * da, p);
        for (int v = 0; v < da; ++v) target.at(0, v * da + v) = 1;
        auto sol = solve_rows(w, target);
        if (!sol)
            throw CheckFailure("sigma_dual: no dual basis; Sigma_B not projective?");
        for (int j = 0; j < da; ++j) {
            Mat uj(out.sigma.dim, b.dim(), p);
            for (int m = 0; m < hd; ++m) {
                u32 lam = sol->at(0, j * hd + m);
                if (lam != 0) uj = uj + out.hom_b.basis[size_t(m)].scaled(lam);
            }
            out.dual_basis.push_back(uj);
        }
    }

    // Left B-action on Sigma*-coordinates: (b sigma)(v) = b * sigma(v).
    for (int bi = 0; bi < b.dim(); ++bi) {
        Mat lmul = b.ring()->left_mult_elem(unit_vector(b.dim(), bi));
        Mat blk(hd, hd, p);
        for (int m = 0; m < hd; ++m) {
            Mat moved = out.hom_b.basis[size_t(m)] * lmul;
            auto coords = ae_hom_coords(out.hom_b, moved);
            for (size_t c = 0; c < coords.size(); ++c) blk.at(m, int(c)) = coords[c];
        }
        out.left_b_action.push_back(blk);
    }

    // Right A_e-action: (sigma a)(v) = sigma(a v), a acting by left
    // multiplication on [x]A = A; rows/cols permuted to flat [x]A coords.
    auto perm = shift_perm(ga, x);
    for (int k = 0; k < ga.ae()->dim; ++k) {
        auto a_global = ga.from_component(unit_vector(ga.ae()->dim, k), ga.group().neutral());
        Mat la = ga.algebra().left_mult_elem(a_global);
        Mat la_flat(da, da, p);
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < da; ++j)
                la_flat.at(perm[size_t(i)], perm[size_t(j)]) = la.at(i, j);
        Mat blk(hd, hd, p);
        for (int m = 0; m < hd; ++m) {
            Mat moved = la_flat * out.hom_b.basis[size_t(m)];
            auto coords = ae_hom_coords(out.hom_b, moved);
            for (size_t c = 0; c < coords.size(); ++c) blk.at(m, int(c)) = coords[c];
        }
        out.right_ae_action.push_back(blk);
    }

    // End_B(Sigma) computed honestly; right action by composition.
    out.endo = ae_hom(out.sigma, out.sigma);
    for (int t = 0; t < out.endo.dim(); ++t) {
        Mat blk(hd, hd, p);
        for (int m = 0; m < hd; ++m) {
            Mat moved = out.endo.basis[size_t(t)] * out.hom_b.basis[size_t(m)];
            auto coords = ae_hom_coords(out.hom_b, moved);
            for (size_t c = 0; c < coords.size(); ++c) blk.at(m, int(c)) = coords[c];
        }
        out.right_endo_action.push_back(blk);
    }
    return out;
}

Report coind_diagram_check(const SmashAlgebra& b, int x, const AeModule& n) {
    Report rep;
    const auto& ga = b.graded();
    const FiniteGroup& g = ga.group();
    const int ng = g.order();
    const u32 p = ga.modulus();

    SigmaDual sd = sigma_dual(b, x);
    const int hd = sd.hom_b.dim();

    // Sigma* as a right A_e-module, then H = Hom_{A_e}(Sigma*, N).
    AeModule sigma_star{ga.ae(), hd, sd.right_ae_action};
    Report sr = validate_ae_module(sigma_star);
    rep.add("sigma_star_ae_module", sr.ok());
    if (!sr.ok()) return rep;

    AeHomSpace h_basis = ae_hom(sigma_star, n);

    // H as a right B-module: (phi b)(sigma) = phi(b sigma).
    std::vector<Mat> h_act;
    for (int bi = 0; bi < b.dim(); ++bi) {
        Mat blk(h_basis.dim(), h_basis.dim(), p);
        for (int k = 0; k < h_basis.dim(); ++k) {
            Mat moved = sd.left_b_action[size_t(bi)] * h_basis.basis[size_t(k)];
            auto coords = ae_hom_coords(h_basis, moved);
            for (size_t c = 0; c < coords.size(); ++c) blk.at(k, int(c)) = coords[c];
        }
        h_act.push_back(blk);
    }
    BModule h_mod = make_ae_module(b.ring(), h_basis.dim(), std::move(h_act));
    RatResult r = rat(b, h_mod);

    CoinducedModule cn = coind(b.graded_ptr(), x, n);
    rep.add("component_dims_match", r.graded.dims == cn.mod.dims);
    if (!r.graded.dims.empty() && !(r.graded.dims == cn.mod.dims)) return rep;

    // Canonical map per degree: phi in He_y |-> [a' |-> phi(iota_y(a'))],
    // where iota_y(a') in Sigma* is v |-> e_y (a' v)~.
    GradedMap canonical;
    bool coords_ok = true;
    auto perm = shift_perm(ga, x);
    for (int y = 0; y < ng; ++y) {
        int d = g.mul(g.inverse(y), x);
        const auto& didx = ga.basis_of_degree(d);
        // iota_y per basis element of A_{y^-1 x}, as Sigma*-coordinates.
        std::vector<std::vector<u32>> iota;
        for (int a = 0; a < int(didx.size()); ++a) {
            Mat sig(ga.dim(), b.dim(), p);
            for (int v = 0; v < ga.dim(); ++v) {
                auto prod = ga.algebra().sc[size_t(didx[size_t(a)])][size_t(v)];
                auto elem = b.ring()->mul(b.idempotent(y), b.embed(prod));
                sig.set_row(perm[size_t(v)], elem);
            }
            try {
                iota.push_back(ae_hom_coords(sd.hom_b, sig));
            } catch (const InvalidInput&) {
                coords_ok = false;
                iota.push_back(std::vector<u32>(size_t(hd), 0));
            }
        }
        Mat blk(r.graded.dims[size_t(y)], cn.mod.dims[size_t(y)], p);
        for (int row = 0; row < blk.rows(); ++row) {
            // the H-element phi: lift the Rat-component basis row back to H coords
            Mat phi_coords = r.components[size_t(y)].basis().row(row);
            Mat phi(hd, n.dim, p);
            for (int k = 0; k < h_basis.dim(); ++k)
                if (phi_coords.at(0, k) != 0)
                    phi = phi + h_basis.basis[size_t(k)].scaled(phi_coords.at(0, k));
            Mat f(int(didx.size()), n.dim, p);
            for (int a = 0; a < int(didx.size()); ++a) {
                Mat val = Mat::row_vector(iota[size_t(a)], p) * phi;
                for (int c = 0; c < val.cols(); ++c) f.at(a, c) = val.at(0, c);
            }
            try {
                auto coords = ae_hom_coords(cn.hom[size_t(y)], f);
                for (size_t c = 0; c < coords.size(); ++c) blk.at(row, int(c)) = coords[c];
            } catch (const InvalidInput&) {
                coords_ok = false;
            }
        }
        canonical.blocks.push_back(blk);
    }
    rep.add("canonical_map_well_defined", coords_ok);
    if (!coords_ok) return rep;

    bool bijective = true;
    for (const auto& blk : canonical.blocks)
        if (blk.rows() != blk.cols() || !inverse(blk).has_value()) bijective = false;
    rep.add("canonical_map_bijective", bijective);
    rep.add("canonical_map_graded", check_graded_map(r.graded, cn.mod, canonical));
    return rep;
}

} // namespace gradalg

#include "gradalg/smash.hpp"

#include <string>

#include "gradalg/errors.hpp"

namespace gradalg {

std::shared_ptr<const SmashAlgebra> SmashAlgebra::build(std::shared_ptr<const GradedAlgebra> graded) {
    auto b = std::make_shared<SmashAlgebra>();
    b->graded_ = std::move(graded);
    const auto& ga = *b->graded_;
    const FiniteGroup& g = ga.group();
    const int da = ga.dim(), n = g.order();
    const int dim = da * (n + 1);
    const u32 p = ga.modulus();
    Fp f(p);

    std::vector<std::vector<std::vector<u32>>> sc(
        size_t(dim), std::vector<std::vector<u32>>(size_t(dim), std::vector<u32>(size_t(dim), 0)));

    auto add_product = [&](int row, int col, int corner, int k, u32 coef) {
        // corner = -1 means the plain a~ block.
        int t = (corner < 0) ? k : (1 + corner) * da + k;
        sc[size_t(row)][size_t(col)][size_t(t)] = f.add(sc[size_t(row)][size_t(col)][size_t(t)], coef);
    };

    for (int i = 0; i < da; ++i) {
        const int zi = ga.degree_of(i);
        for (int j = 0; j < da; ++j) {
            const auto& prod = ga.algebra().sc[size_t(i)][size_t(j)];
            // a~_i a~_j = (b_i b_j)~
            for (int k = 0; k < da; ++k)
                if (prod[size_t(k)] != 0) add_product(i, j, -1, k, prod[size_t(k)]);
            for (int x = 0; x < n; ++x) {
                // a~_i (e_x a~_j) = e_{x zi^-1} (b_i b_j)~
                int shifted = g.mul(x, g.inverse(zi));
                for (int k = 0; k < da; ++k)
                    if (prod[size_t(k)] != 0)
                        add_product(i, (1 + x) * da + j, shifted, k, prod[size_t(k)]);
                // (e_x a~_i) a~_j = e_x (b_i b_j)~
                for (int k = 0; k < da; ++k)
                    if (prod[size_t(k)] != 0)
                        add_product((1 + x) * da + i, j, x, k, prod[size_t(k)]);
                // (e_x a~_i)(e_y a~_j) = delta_{x, y zi^-1} e_x (b_i b_j)~
                for (int y = 0; y < n; ++y) {
                    if (x != g.mul(y, g.inverse(zi))) continue;
                    for (int k = 0; k < da; ++k)
                        if (prod[size_t(k)] != 0)
                            add_product((1 + x) * da + i, (1 + y) * da + j, x, k, prod[size_t(k)]);
                }
            }
        }
    }

    std::vector<u32> unit(size_t(dim), 0);
    for (int i = 0; i < da; ++i) unit[size_t(i)] = ga.algebra().unit[size_t(i)];

    b->ring_ = make_algebra(p, dim, std::move(sc), std::move(unit)); // associativity + unit
    Report rep = verify_smash_relations(*b);
    if (!rep.ok()) {
        const CheckItem* fail = rep.first_failure();
        throw CheckFailure("smash relations failed: " + fail->name +
                           (fail->witness.empty() ? "" : " " + fail->witness));
    }
    return b;
}

std::vector<u32> SmashAlgebra::embed(const std::vector<u32>& a) const {
    std::vector<u32> out(size_t(dim()), 0);
    for (int i = 0; i < graded_->dim(); ++i) out[size_t(i)] = a[size_t(i)];
    return out;
}

std::vector<u32> SmashAlgebra::idempotent(int x) const {
    std::vector<u32> out(size_t(dim()), 0);
    const auto& unit = graded_->algebra().unit;
    for (int i = 0; i < graded_->dim(); ++i) out[size_t(corner_index(x, i))] = unit[size_t(i)];
    return out;
}

Report verify_smash_relations(const SmashAlgebra& b) {
    Report rep;
    const auto& ga = b.graded();
    const FiniteGroup& g = ga.group();
    const Algebra& ring = *b.ring();
    const int da = ga.dim(), n = g.order();

    rep.add("dimension", ring.dim == da * (n + 1),
            "dim B = " + std::to_string(ring.dim));

    // e_x e_y = delta_{x,y} e_x
    bool orth = true;
    std::string ow;
    for (int x = 0; x < n && orth; ++x)
        for (int y = 0; y < n && orth; ++y) {
            auto prod = ring.mul(b.idempotent(x), b.idempotent(y));
            auto expect = (x == y) ? b.idempotent(x) : std::vector<u32>(size_t(ring.dim), 0);
            if (prod != expect) {
                orth = false;
                ow = "e_" + std::to_string(x) + " e_" + std::to_string(y);
            }
        }
    rep.add("idempotents_orthogonal", orth, ow);

    // Homogeneous shift: e_x a~_z = a~_z e_{xz} for basis a~_z of degree z.
    bool shift = true;
    std::string sw;
    for (int x = 0; x < n && shift; ++x)
        for (int i = 0; i < da && shift; ++i) {
            auto lhs = ring.mul(b.idempotent(x), b.embed(unit_vector(da, i)));
            auto rhs = ring.mul(b.embed(unit_vector(da, i)),
                                b.idempotent(g.mul(x, ga.degree_of(i))));
            if (lhs != rhs) {
                shift = false;
                sw = "e_" + std::to_string(x) + " b" + std::to_string(i);
            }
        }
    rep.add("shift_relation", shift, sw);

    // Projection: e_x a~ e_y = (pi_{x^-1 y}(a))~ e_y for all basis a, x, y.
    bool proj = true;
    std::string pw;
    for (int x = 0; x < n && proj; ++x)
        for (int y = 0; y < n && proj; ++y)
            for (int j = 0; j < da && proj; ++j) {
                auto lhs = ring.mul(ring.mul(b.idempotent(x), b.embed(unit_vector(da, j))),
                                    b.idempotent(y));
                auto part = ga.project(unit_vector(da, j), g.mul(g.inverse(x), y));
                auto rhs = ring.mul(b.embed(part), b.idempotent(y));
                if (lhs != rhs) {
                    proj = false;
                    pw = "e_" + std::to_string(x) + " b" + std::to_string(j) + " e_" +
                         std::to_string(y);
                }
            }
    rep.add("projection_relation", proj, pw);

    // Embedding is multiplicative and unit-preserving.
    bool emb = true;
    for (int i = 0; i < da && emb; ++i)
        for (int j = 0; j < da && emb; ++j) {
            auto lhs = ring.mul(b.embed(unit_vector(da, i)), b.embed(unit_vector(da, j)));
            auto rhs = b.embed(ga.algebra().sc[size_t(i)][size_t(j)]);
            emb = lhs == rhs;
        }
    rep.add("embedding_multiplicative", emb);

    // Faithfulness per corner: e_x a~ = 0 forces a = 0.
    bool faithful = true;
    std::string fw;
    for (int x = 0; x < n && faithful; ++x) {
        Mat map(da, ring.dim, ring.p);
        for (int j = 0; j < da; ++j) {
            auto img = ring.mul(b.idempotent(x), b.embed(unit_vector(da, j)));
            map.set_row(j, img);
        }
        if (left_kernel(map).dim() != 0) {
            faithful = false;
            fw = "corner " + std::to_string(x);
        }
    }
    rep.add("corner_embedding_faithful", faithful, fw);
    return rep;
}

std::vector<u32> smash_pairing(const SmashAlgebra& b, const GroupCoring& c,
                               const std::vector<u32>& cvec, const std::vector<u32>& bvec) {
    const auto& ga = b.graded();
    const int da = ga.dim(), n = ga.group().order();
    Fp f(ga.modulus());
    std::vector<u32> out(size_t(da), 0);
    auto accumulate = [&](u32 coef, int i, int j) {
        // coef * b_i b_j
        const auto& prod = ga.algebra().sc[size_t(i)][size_t(j)];
        for (int k = 0; k < da; ++k)
            if (prod[size_t(k)] != 0)
                out[size_t(k)] = f.add(out[size_t(k)], f.mul(coef, prod[size_t(k)]));
    };
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < da; ++i) {
            u32 ci = cvec[size_t(c.flat(i, x))];
            if (ci == 0) continue;
            for (int j = 0; j < da; ++j) {
                // <b_i x, a~_j> = b_i b_j
                u32 bj = bvec[size_t(b.atilde_index(j))];
                if (bj != 0) accumulate(f.mul(ci, bj), i, j);
                // <b_i x, e_y a~_j> = delta_{x,y} b_i b_j
                u32 by = bvec[size_t(b.corner_index(x, j))];
                if (by != 0) accumulate(f.mul(ci, by), i, j);
            }
        }
    return out;
}

BModule b_module_of(const SmashAlgebra& b, const GradedModule& m) {
    const auto& ga = b.graded();
    const int da = ga.dim(), n = ga.group().order();
    const int total = m.total_dim();
    const u32 p = ga.modulus();

    std::vector<Mat> act;
    act.reserve(size_t(b.dim()));
    for (int j = 0; j < da; ++j) act.push_back(m.global_action(j));
    for (int x = 0; x < n; ++x) {
        // projection onto M_x followed by the action of b_j
        Mat proj(total, total, p);
        for (int r = 0; r < m.dims[size_t(x)]; ++r)
            proj.at(m.offset(x) + r, m.offset(x) + r) = 1;
        for (int j = 0; j < da; ++j) act.push_back(proj * m.global_action(j));
    }
    // Module axioms over B are exactly the relations as operator identities.
    return make_ae_module(b.ring(), total, std::move(act));
}

BModule coring_b_module(const SmashAlgebra& b, const GroupCoring& c) {
    const auto& ga = b.graded();
    const int da = ga.dim(), n = ga.group().order();
    const int total = c.dim();
    const u32 p = ga.modulus();

    auto action_of = [&](auto&& fn) {
        Mat mat(total, total, p);
        for (int g = 0; g < total; ++g) {
            std::vector<u32> basis(size_t(total), 0);
            basis[size_t(g)] = 1;
            auto img = fn(basis);
            mat.set_row(g, img);
        }
        return mat;
    };

    std::vector<Mat> act;
    for (int j = 0; j < da; ++j)
        act.push_back(action_of([&](const std::vector<u32>& v) {
            return c.right_action(v, unit_vector(da, j));
        }));
    for (int x = 0; x < n; ++x)
        for (int j = 0; j < da; ++j)
            act.push_back(action_of([&](const std::vector<u32>& v) {
                std::vector<u32> kept(size_t(total), 0);
                for (int i = 0; i < da; ++i) kept[size_t(c.flat(i, x))] = v[size_t(c.flat(i, x))];
                return c.right_action(kept, unit_vector(da, j));
            }));
    return make_ae_module(b.ring(), total, std::move(act));
}

RatResult rat(const SmashAlgebra& b, const BModule& m) {
    const auto& ga = b.graded();
    const int n = ga.group().order();
    RatResult out{Subspace(m.dim, m.ring->p), {}, {}};
    for (int x = 0; x < n; ++x) {
        Mat ex = ae_action_of(m, b.idempotent(x));
        out.components.push_back(row_space(ex));
        out.subspace = out.subspace.sum(out.components.back());
    }

    // Graded structure on (+)_x M e_x: component x has basis the RREF rows of
    // M e_x; b_j maps M e_x into M e_{x deg j}.
    std::vector<int> dims;
    for (const auto& s : out.components) dims.push_back(s.dim());
    std::vector<std::vector<Mat>> act(size_t(ga.dim()), std::vector<Mat>(size_t(n)));
    for (int j = 0; j < ga.dim(); ++j)
        for (int x = 0; x < n; ++x) {
            int tx = ga.group().mul(x, ga.degree_of(j));
            Mat blk(dims[size_t(x)], dims[size_t(tx)], m.ring->p);
            for (int r = 0; r < dims[size_t(x)]; ++r) {
                Mat img = out.components[size_t(x)].basis().row(r) * m.act[size_t(j)];
                auto coords = out.components[size_t(tx)].try_coords_of(img);
                if (!coords)
                    throw CheckFailure("rat: action of a~ does not shift M e_x into M e_{x z}");
                for (size_t k = 0; k < coords->size(); ++k) blk.at(r, int(k)) = (*coords)[k];
            }
            act[size_t(j)][size_t(x)] = blk;
        }
    out.graded = make_graded_module(b.graded_ptr(), std::move(dims), std::move(act));
    return out;
}

Report exactness_witness(const SmashAlgebra& b, const GroupCoring& c) {
    Report rep;
    const int n = b.graded().group().order();
    const int da = b.graded().dim();

    // C * Rat(B_B) = C: the corner elements e_x a~_j act on C and their images
    // span everything.
    BModule cb = coring_b_module(b, c);
    Subspace span(cb.dim, cb.ring->p);
    for (int x = 0; x < n; ++x)
        for (int j = 0; j < da; ++j) {
            Mat action = cb.act[size_t(b.corner_index(x, j))];
            span = span.sum(row_space(action));
        }
    rep.add("C_RatB_equals_C", span.dim() == cb.dim,
            "dim " + std::to_string(span.dim()) + " of " + std::to_string(cb.dim));

    // Rat of the SES 0 -> Rat(B) -> B -> B/Rat(B) -> 0 stays exact.
    BModule reg = regular_module(b.ring());
    RatResult rb = rat(b, reg);
    auto sub = ae_submodule(reg, rb.subspace);
    auto quot = ae_quotient(reg, rb.subspace);

    RatResult rat_sub = rat(b, sub.module);
    RatResult rat_quot = rat(b, quot.module);

    // Left: inclusion restricted to Rat(sub) is injective.
    Mat incl_restricted = rat_sub.subspace.basis() * sub.inclusion;
    bool left_exact = rank(incl_restricted) == rat_sub.subspace.dim();
    rep.add("rat_ses_left_injective", left_exact);

    // Middle: image of Rat(sub) = Rat(B) intersect kernel of projection.
    Subspace img = row_space(incl_restricted);
    Subspace kerproj = rb.subspace.intersect(left_kernel(quot.projection));
    rep.add("rat_ses_middle_exact", img == kerproj);

    // Right: projection maps Rat(B) onto Rat(B/Rat(B)).
    Subspace proj_img = row_space(rb.subspace.basis() * quot.projection);
    rep.add("rat_ses_right_surjective", proj_img == rat_quot.subspace);

    // Rat(B) = (+) e_x A~ with Rat(B) n A~ = 0, and Rat idempotent on B.
    bool rat_dim = rb.subspace.dim() == n * da;
    rep.add("ratB_dimension", rat_dim, "dim " + std::to_string(rb.subspace.dim()));
    Mat atilde_rows(da, reg.dim, reg.ring->p);
    for (int j = 0; j < da; ++j) atilde_rows.at(j, b.atilde_index(j)) = 1;
    Subspace atilde = Subspace::span_rows(atilde_rows);
    rep.add("ratB_meets_Atilde_trivially", rb.subspace.intersect(atilde).dim() == 0);
    rep.add("rat_idempotent_on_B", rat_sub.subspace.dim() == rb.subspace.dim());
    return rep;
}

} // namespace gradalg

#include "gradalg/homs.hpp"

#include <random>
#include <string>

#include "gradalg/errors.hpp"

namespace gradalg {

Report validate_ae_module(const AeModule& u) {
    Report rep;
    const Algebra& r = *u.ring;
    bool shapes = int(u.act.size()) == r.dim;
    for (const auto& a : u.act)
        shapes = shapes && a.rows() == u.dim && a.cols() == u.dim && a.modulus() == r.p;
    rep.add("action_shape", shapes);
    if (!shapes) return rep;

    Mat unit_act(u.dim, u.dim, r.p);
    for (int i = 0; i < r.dim; ++i)
        if (r.unit[size_t(i)] != 0) unit_act = unit_act + u.act[size_t(i)].scaled(r.unit[size_t(i)]);
    rep.add("unit_acts_as_identity", unit_act.is_identity());

    bool assoc = true;
    std::string w;
    for (int i = 0; i < r.dim && assoc; ++i)
        for (int j = 0; j < r.dim && assoc; ++j) {
            Mat lhs = u.act[size_t(i)] * u.act[size_t(j)];
            Mat rhs(u.dim, u.dim, r.p);
            for (int k = 0; k < r.dim; ++k) {
                u32 c = r.sc[size_t(i)][size_t(j)][size_t(k)];
                if (c != 0) rhs = rhs + u.act[size_t(k)].scaled(c);
            }
            if (!(lhs == rhs)) {
                assoc = false;
                w = "ActionNotAssociative(b" + std::to_string(i) + ",b" + std::to_string(j) + ")";
            }
        }
    rep.add("action_associative", assoc, w);
    return rep;
}

AeModule make_ae_module(std::shared_ptr<const Algebra> ring, int dim, std::vector<Mat> act) {
    AeModule u{std::move(ring), dim, std::move(act)};
    Report rep = validate_ae_module(u);
    if (!rep.ok()) {
        const CheckItem* f = rep.first_failure();
        throw CheckFailure("module invalid: " + f->name +
                           (f->witness.empty() ? "" : " " + f->witness));
    }
    return u;
}

AeModule regular_module(std::shared_ptr<const Algebra> ring) {
    std::vector<Mat> act;
    for (int i = 0; i < ring->dim; ++i) act.push_back(ring->right_mult(i));
    int dim = ring->dim;
    return make_ae_module(std::move(ring), dim, std::move(act));
}

AeModule zero_module(std::shared_ptr<const Algebra> ring) {
    std::vector<Mat> act(size_t(ring->dim), Mat(0, 0, ring->p));
    return AeModule{std::move(ring), 0, std::move(act)};
}

AeModule restrict_to_ae(const GradedModule& m, int x) {
    const auto& ga = *m.algebra;
    if (x < 0 || x >= ga.group().order()) throw InvalidInput("restrict_to_ae: degree out of range");
    std::vector<Mat> act;
    for (int gi : ga.ae_indices()) act.push_back(m.act[size_t(gi)][size_t(x)]);
    return make_ae_module(ga.ae(), m.dims[size_t(x)], std::move(act));
}

AeModule algebra_component_module(const GradedAlgebra& ga, int d) {
    const auto& idx = ga.basis_of_degree(d);
    const int dim = int(idx.size());
    std::vector<Mat> act;
    for (int gk : ga.ae_indices()) {
        Mat blk(dim, dim, ga.modulus());
        for (int r = 0; r < dim; ++r) {
            auto prod = ga.algebra().sc[size_t(idx[size_t(r)])][size_t(gk)];
            auto local = ga.component_coords(prod, d);
            for (size_t c = 0; c < local.size(); ++c) blk.at(r, int(c)) = local[c];
        }
        act.push_back(blk);
    }
    return make_ae_module(ga.ae(), dim, std::move(act));
}

Mat ae_action_of(const AeModule& u, const std::vector<u32>& elem) {
    Mat out(u.dim, u.dim, u.ring->p);
    for (int i = 0; i < u.ring->dim; ++i)
        if (elem[size_t(i)] != 0) out = out + u.act[size_t(i)].scaled(elem[size_t(i)]);
    return out;
}

bool ae_action_closed(const AeModule& u, const Subspace& s) {
    for (int i = 0; i < u.ring->dim; ++i)
        for (int r = 0; r < s.dim(); ++r)
            if (!s.contains_row(s.basis().row(r) * u.act[size_t(i)])) return false;
    return true;
}

AeSubmoduleResult ae_submodule(const AeModule& u, const Subspace& s) {
    if (!ae_action_closed(u, s)) throw CheckFailure("ae_submodule: subspace not action-closed");
    std::vector<Mat> act;
    for (int i = 0; i < u.ring->dim; ++i) {
        Mat blk(s.dim(), s.dim(), u.ring->p);
        for (int r = 0; r < s.dim(); ++r) {
            auto coords = s.coords_of(s.basis().row(r) * u.act[size_t(i)]);
            for (size_t c = 0; c < coords.size(); ++c) blk.at(r, int(c)) = coords[c];
        }
        act.push_back(blk);
    }
    return AeSubmoduleResult{make_ae_module(u.ring, s.dim(), std::move(act)), s.basis()};
}

AeQuotientResult ae_quotient(const AeModule& u, const Subspace& s) {
    if (!ae_action_closed(u, s)) throw CheckFailure("ae_quotient: subspace not action-closed");
    auto qs = quotient_structure(s);
    std::vector<Mat> act;
    for (int i = 0; i < u.ring->dim; ++i) act.push_back(qs.reps * u.act[size_t(i)] * qs.proj);
    return AeQuotientResult{make_ae_module(u.ring, u.dim - s.dim(), std::move(act)), qs.proj};
}

std::vector<Subspace> ae_submodule_subspaces(const AeModule& u, u64 bound) {
    std::vector<Subspace> out;
    for (auto& s : enumerate_subspaces(u.dim, u.ring->p, bound))
        if (ae_action_closed(u, s)) out.push_back(std::move(s));
    return out;
}

std::vector<Subspace> ae_maximal_submodules(const AeModule& u, u64 bound) {
    auto subs = ae_submodule_subspaces(u, bound);
    std::vector<Subspace> maximal;
    for (const auto& s : subs) {
        if (s.dim() == u.dim) continue;
        bool is_max = true;
        for (const auto& t : subs) {
            if (t.dim() == u.dim || t == s) continue;
            if (t.contains(s) && t.dim() > s.dim()) { is_max = false; break; }
        }
        if (is_max) maximal.push_back(s);
    }
    return maximal;
}

Subspace ae_closure(const AeModule& u, const Mat& rows) {
    Subspace s = Subspace::span_rows(rows);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int r = 0; r < s.dim(); ++r)
            for (int i = 0; i < u.ring->dim; ++i) {
                Mat img = s.basis().row(r) * u.act[size_t(i)];
                if (!s.contains_row(img)) {
                    s = s.sum(Subspace::span_rows(img));
                    changed = true;
                }
            }
    }
    return s;
}

bool is_simple_ae(const AeModule& u, u64 bound) {
    if (u.dim == 0) return false;
    auto total = checked_pow(u.ring->p, u64(u.dim));
    if (!total || *total > bound)
        throw BoundExceeded("is_simple_ae: p^" + std::to_string(u.dim) + " exceeds bound");
    const u32 p = u.ring->p;
    std::vector<u32> v(size_t(u.dim), 0);
    while (true) {
        size_t k = 0;
        while (k < v.size() && ++v[k] == p) v[k++] = 0;
        if (k == v.size()) break;
        if (ae_closure(u, Mat::row_vector(v, p)).dim() != u.dim) return false;
    }
    return true;
}

AeHomSpace ae_hom(const AeModule& u, const AeModule& v) {
    const u32 p = u.ring->p;
    const int nu = u.dim, nv = v.dim;
    const int unknowns = nu * nv;
    const int ring_dim = u.ring->dim;
    // Rows: unknowns H[r][c]; cols: equations (i, a, b) of actU[i]*H = H*actV[i].
    Mat sys(unknowns, ring_dim * nu * nv, p);
    Fp f(p);
    for (int i = 0; i < ring_dim; ++i)
        for (int a = 0; a < nu; ++a)
            for (int b = 0; b < nv; ++b) {
                int eq = (i * nu + a) * nv + b;
                for (int k = 0; k < nu; ++k) {
                    int un = k * nv + b;
                    sys.at(un, eq) = f.add(sys.at(un, eq), u.act[size_t(i)].at(a, k));
                }
                for (int k = 0; k < nv; ++k) {
                    int un = a * nv + k;
                    sys.at(un, eq) = f.sub(sys.at(un, eq), v.act[size_t(i)].at(k, b));
                }
            }
    Subspace sols = left_kernel(sys);
    AeHomSpace hs;
    hs.src_dim = nu;
    hs.tgt_dim = nv;
    for (int r = 0; r < sols.dim(); ++r) {
        Mat h(nu, nv, p);
        for (int a = 0; a < nu; ++a)
            for (int b = 0; b < nv; ++b) h.at(a, b) = sols.basis().at(r, a * nv + b);
        hs.basis.push_back(h);
    }
    return hs;
}

Mat ae_hom_from_coords(const AeHomSpace& hs, const std::vector<u32>& coords, u32 p) {
    Mat out(hs.src_dim, hs.tgt_dim, p);
    for (size_t i = 0; i < hs.basis.size(); ++i)
        if (coords[i] != 0) out = out + hs.basis[i].scaled(coords[i]);
    return out;
}

namespace {

Mat flatten_mats(const std::vector<Mat>& mats, u32 p) {
    int len = 0;
    for (const auto& m : mats) len += m.rows() * m.cols();
    Mat row(1, len, p);
    int at = 0;
    for (const auto& m : mats)
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) row.at(0, at++) = m.at(r, c);
    return row;
}

} // namespace

std::vector<u32> ae_hom_coords(const AeHomSpace& hs, const Mat& f) {
    const u32 p = f.modulus();
    Mat stacked(0, f.rows() * f.cols(), p);
    for (const auto& b : hs.basis) stacked = Mat::vstack(stacked, flatten_mats({b}, p));
    auto sol = solve_rows(stacked, flatten_mats({f}, p));
    if (!sol) throw InvalidInput("map outside the Hom space");
    return sol->row_copy(0);
}

GradedHomSpace graded_hom(const GradedModule& m, const GradedModule& n) {
    if (m.algebra != n.algebra) throw InvalidInput("graded_hom: algebra mismatch");
    const auto& ga = *m.algebra;
    const int ng = ga.group().order();
    const u32 p = ga.modulus();
    Fp f(p);

    std::vector<int> off(size_t(ng) + 1, 0);
    for (int y = 0; y < ng; ++y)
        off[size_t(y) + 1] = off[size_t(y)] + m.dims[size_t(y)] * n.dims[size_t(y)];
    const int unknowns = off[size_t(ng)];
    auto idx = [&](int y, int r, int c) { return off[size_t(y)] + r * n.dims[size_t(y)] + c; };

    int eqs = 0;
    for (int i = 0; i < ga.dim(); ++i)
        for (int y = 0; y < ng; ++y) {
            int ty = ga.group().mul(y, ga.degree_of(i));
            eqs += m.dims[size_t(y)] * n.dims[size_t(ty)];
        }

    Mat sys(unknowns, eqs, p);
    int eq = 0;
    for (int i = 0; i < ga.dim(); ++i)
        for (int y = 0; y < ng; ++y) {
            int ty = ga.group().mul(y, ga.degree_of(i));
            const Mat& am = m.act[size_t(i)][size_t(y)];
            const Mat& an = n.act[size_t(i)][size_t(y)];
            // (actM * F_ty)[a][b] - (F_y * actN)[a][b] = 0
            for (int a = 0; a < m.dims[size_t(y)]; ++a)
                for (int b = 0; b < n.dims[size_t(ty)]; ++b) {
                    for (int k = 0; k < m.dims[size_t(ty)]; ++k)
                        sys.at(idx(ty, k, b), eq) = f.add(sys.at(idx(ty, k, b), eq), am.at(a, k));
                    for (int k = 0; k < n.dims[size_t(y)]; ++k)
                        sys.at(idx(y, a, k), eq) = f.sub(sys.at(idx(y, a, k), eq), an.at(k, b));
                    ++eq;
                }
        }

    Subspace sols = left_kernel(sys);
    GradedHomSpace hs;
    for (int r = 0; r < sols.dim(); ++r) {
        GradedMap g;
        for (int y = 0; y < ng; ++y) {
            Mat blk(m.dims[size_t(y)], n.dims[size_t(y)], p);
            for (int a = 0; a < blk.rows(); ++a)
                for (int b = 0; b < blk.cols(); ++b) blk.at(a, b) = sols.basis().at(r, idx(y, a, b));
            g.blocks.push_back(blk);
        }
        hs.basis.push_back(std::move(g));
    }
    return hs;
}

GradedMap graded_hom_from_coords(const GradedHomSpace& hs, const std::vector<u32>& coords,
                                 const GradedModule& m, const GradedModule& n) {
    GradedMap out = zero_map(m, n);
    for (size_t i = 0; i < hs.basis.size(); ++i)
        if (coords[i] != 0) out = map_add(out, map_scale(hs.basis[i], coords[i]));
    return out;
}

std::vector<u32> graded_hom_coords(const GradedHomSpace& hs, const GradedMap& f) {
    if (hs.basis.empty()) {
        if (!map_is_zero(f)) throw InvalidInput("map outside the Hom space");
        return {};
    }
    const u32 p = hs.basis[0].blocks[0].modulus();
    int len = 0;
    for (const auto& b : hs.basis[0].blocks) len += b.rows() * b.cols();
    Mat stacked(0, len, p);
    for (const auto& b : hs.basis) stacked = Mat::vstack(stacked, flatten_mats(b.blocks, p));
    auto sol = solve_rows(stacked, flatten_mats(f.blocks, p));
    if (!sol) throw InvalidInput("map outside the Hom space");
    return sol->row_copy(0);
}

namespace {

bool graded_map_invertible(const GradedMap& f) {
    for (const auto& b : f.blocks) {
        if (b.rows() != b.cols()) return false;
        if (!inverse(b).has_value()) return false;
    }
    return true;
}

} // namespace

GradedIsoResult graded_isomorphic(const GradedModule& m, const GradedModule& n,
                                  const IsoOptions& opt) {
    if (m.dims != n.dims) return {IsoVerdict::no, std::nullopt};
    if (m.total_dim() == 0) return {IsoVerdict::yes, zero_map(m, n)};
    auto hs = graded_hom(m, n);
    if (hs.dim() == 0) return {IsoVerdict::no, std::nullopt};
    const u32 p = m.algebra->modulus();
    auto total = checked_pow(p, u64(hs.dim()));
    if (total && *total <= opt.bound) {
        std::vector<u32> coords(size_t(hs.dim()), 0);
        while (true) {
            size_t k = 0;
            while (k < coords.size() && ++coords[k] == p) coords[k++] = 0;
            if (k == coords.size()) break;
            GradedMap cand = graded_hom_from_coords(hs, coords, m, n);
            if (graded_map_invertible(cand)) return {IsoVerdict::yes, std::move(cand)};
        }
        return {IsoVerdict::no, std::nullopt};
    }
    std::mt19937_64 rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
        std::vector<u32> coords(size_t(hs.dim()), 0);
        for (auto& c : coords) c = u32(rng() % p);
        GradedMap cand = graded_hom_from_coords(hs, coords, m, n);
        if (graded_map_invertible(cand)) return {IsoVerdict::yes, std::move(cand)};
    }
    return {IsoVerdict::inconclusive, std::nullopt};
}

AeIsoResult ae_isomorphic(const AeModule& u, const AeModule& v, const IsoOptions& opt) {
    if (u.dim != v.dim) return {IsoVerdict::no, std::nullopt};
    if (u.dim == 0) return {IsoVerdict::yes, Mat(0, 0, u.ring->p)};
    auto hs = ae_hom(u, v);
    if (hs.dim() == 0) return {IsoVerdict::no, std::nullopt};
    const u32 p = u.ring->p;
    auto total = checked_pow(p, u64(hs.dim()));
    if (total && *total <= opt.bound) {
        std::vector<u32> coords(size_t(hs.dim()), 0);
        while (true) {
            size_t k = 0;
            while (k < coords.size() && ++coords[k] == p) coords[k++] = 0;
            if (k == coords.size()) break;
            Mat cand = ae_hom_from_coords(hs, coords, p);
            if (inverse(cand).has_value()) return {IsoVerdict::yes, std::move(cand)};
        }
        return {IsoVerdict::no, std::nullopt};
    }
    std::mt19937_64 rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
        std::vector<u32> coords(size_t(hs.dim()), 0);
        for (auto& c : coords) c = u32(rng() % p);
        Mat cand = ae_hom_from_coords(hs, coords, p);
        if (inverse(cand).has_value()) return {IsoVerdict::yes, std::move(cand)};
    }
    return {IsoVerdict::inconclusive, std::nullopt};
}

} // namespace gradalg

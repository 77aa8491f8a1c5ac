#include "gradalg/graded.hpp"

#include <string>

#include "gradalg/errors.hpp"

namespace gradalg {

Report validate_graded_algebra(const FiniteGroup& group, u32 p, const std::vector<int>& deg,
                               const std::vector<std::vector<std::vector<u32>>>& sc,
                               const std::vector<u32>& unit) {
    Report rep;
    rep.add("p_prime", Fp::is_prime(p), Fp::is_prime(p) ? "" : std::to_string(p));
    if (!rep.ok()) return rep;

    const int dim = int(deg.size());
    bool labels_ok = true;
    for (int d : deg) labels_ok = labels_ok && d >= 0 && d < group.order();
    rep.add("degree_labels", labels_ok, labels_ok ? "" : "label out of range");

    bool shapes = int(sc.size()) == dim && int(unit.size()) == dim;
    for (const auto& row : sc) {
        shapes = shapes && int(row.size()) == dim;
        for (const auto& v : row) shapes = shapes && int(v.size()) == dim;
    }
    rep.add("sc_shape", shapes);
    if (!labels_ok || !shapes) return rep;

    // Grading compatibility: A_x A_y inside A_{xy}.
    bool grading = true;
    std::string gw;
    for (int i = 0; i < dim && grading; ++i)
        for (int j = 0; j < dim && grading; ++j)
            for (int k = 0; k < dim && grading; ++k)
                if (sc[size_t(i)][size_t(j)][size_t(k)] % p != 0 &&
                    deg[size_t(k)] != group.mul(deg[size_t(i)], deg[size_t(j)])) {
                    grading = false;
                    gw = "GradingViolation(b" + std::to_string(i) + "*b" + std::to_string(j) +
                         " hits b" + std::to_string(k) + ")";
                }
    rep.add("grading_compatible", grading, gw);

    Algebra a{p, dim, sc, unit};
    rep.merge(validate_algebra(a));
    if (!rep.ok()) return rep;

    // Unit lies in A_e.
    int e = group.neutral();
    bool unit_in_ae = true;
    for (int i = 0; i < dim; ++i)
        if (unit[size_t(i)] % p != 0 && deg[size_t(i)] != e) unit_in_ae = false;
    rep.add("unit_in_Ae", unit_in_ae, unit_in_ae ? "" : "unit has a component outside A_e");
    return rep;
}

std::shared_ptr<const GradedAlgebra> GradedAlgebra::create(
    std::shared_ptr<const FiniteGroup> group, u32 p, std::vector<int> deg,
    std::vector<std::vector<std::vector<u32>>> sc, std::vector<u32> unit) {
    Report rep = validate_graded_algebra(*group, p, deg, sc, unit);
    if (!rep.ok()) {
        const CheckItem* f = rep.first_failure();
        throw CheckFailure("graded algebra invalid: " + f->name +
                           (f->witness.empty() ? "" : " " + f->witness));
    }
    auto ga = std::make_shared<GradedAlgebra>();
    ga->group_ = std::move(group);
    ga->alg_ = Algebra{p, int(deg.size()), std::move(sc), std::move(unit)};
    ga->deg_ = std::move(deg);
    ga->by_degree_.assign(size_t(ga->group_->order()), {});
    for (int i = 0; i < ga->alg_.dim; ++i)
        ga->by_degree_[size_t(ga->deg_[size_t(i)])].push_back(i);

    // Assemble A_e: products of degree-e elements stay in degree e.
    const auto& idx = ga->by_degree_[size_t(ga->group_->neutral())];
    const int d = int(idx.size());
    std::vector<std::vector<std::vector<u32>>> aesc(
        size_t(d), std::vector<std::vector<u32>>(size_t(d), std::vector<u32>(size_t(d), 0)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                aesc[size_t(i)][size_t(j)][size_t(k)] =
                    ga->alg_.sc[size_t(idx[size_t(i)])][size_t(idx[size_t(j)])][size_t(idx[size_t(k)])];
    std::vector<u32> aeunit(size_t(d), 0);
    for (int i = 0; i < d; ++i) aeunit[size_t(i)] = ga->alg_.unit[size_t(idx[size_t(i)])];
    ga->ae_ = make_algebra(p, d, std::move(aesc), aeunit);
    ga->unit_ae_ = std::move(aeunit);
    return ga;
}

std::vector<u32> GradedAlgebra::project(const std::vector<u32>& v, int x) const {
    std::vector<u32> out(size_t(dim()), 0);
    for (int i : by_degree_[size_t(x)]) out[size_t(i)] = v[size_t(i)];
    return out;
}

std::vector<u32> GradedAlgebra::component_coords(const std::vector<u32>& v, int x) const {
    const auto& idx = by_degree_[size_t(x)];
    std::vector<u32> out(idx.size(), 0);
    for (size_t k = 0; k < idx.size(); ++k) out[k] = v[size_t(idx[k])];
    return out;
}

std::vector<u32> GradedAlgebra::from_component(const std::vector<u32>& local, int x) const {
    const auto& idx = by_degree_[size_t(x)];
    std::vector<u32> out(size_t(dim()), 0);
    for (size_t k = 0; k < idx.size(); ++k) out[size_t(idx[k])] = local[k];
    return out;
}

int GradedModule::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

int GradedModule::offset(int y) const {
    int t = 0;
    for (int z = 0; z < y; ++z) t += dims[size_t(z)];
    return t;
}

Mat GradedModule::global_action(int i) const {
    const int n = algebra->group().order();
    Mat out(total_dim(), total_dim(), algebra->modulus());
    for (int y = 0; y < n; ++y) {
        int ty = algebra->group().mul(y, algebra->degree_of(i));
        const Mat& blk = act[size_t(i)][size_t(y)];
        for (int r = 0; r < blk.rows(); ++r)
            for (int c = 0; c < blk.cols(); ++c) out.at(offset(y) + r, offset(ty) + c) = blk.at(r, c);
    }
    return out;
}

Report validate_graded_module(const GradedModule& m) {
    Report rep;
    const auto& ga = *m.algebra;
    const int n = ga.group().order();
    const u32 p = ga.modulus();

    bool shapes = int(m.dims.size()) == n && int(m.act.size()) == ga.dim();
    if (shapes)
        for (int i = 0; i < ga.dim() && shapes; ++i) {
            if (int(m.act[size_t(i)].size()) != n) { shapes = false; break; }
            for (int y = 0; y < n; ++y) {
                int ty = ga.group().mul(y, ga.degree_of(i));
                const Mat& blk = m.act[size_t(i)][size_t(y)];
                if (blk.rows() != m.dims[size_t(y)] || blk.cols() != m.dims[size_t(ty)] ||
                    blk.modulus() != p)
                    shapes = false;
            }
        }
    rep.add("action_shape", shapes);
    if (!shapes) return rep;

    // Unit acts as identity on every component.
    bool unit_ok = true;
    std::string uw;
    for (int y = 0; y < n && unit_ok; ++y) {
        Mat u(m.dims[size_t(y)], m.dims[size_t(y)], p);
        for (int i = 0; i < ga.dim(); ++i) {
            u32 c = ga.algebra().unit[size_t(i)];
            if (c == 0) continue;
            u = u + m.act[size_t(i)][size_t(y)].scaled(c);
        }
        if (!u.is_identity()) {
            unit_ok = false;
            uw = "unit not identity on degree " + std::to_string(y);
        }
    }
    rep.add("unit_acts_as_identity", unit_ok, uw);

    // (m b_i) b_j = m (b_i b_j), expanded through structure constants.
    bool assoc = true;
    std::string aw;
    for (int i = 0; i < ga.dim() && assoc; ++i)
        for (int j = 0; j < ga.dim() && assoc; ++j)
            for (int y = 0; y < n && assoc; ++y) {
                int yi = ga.group().mul(y, ga.degree_of(i));
                Mat lhs = m.act[size_t(i)][size_t(y)] * m.act[size_t(j)][size_t(yi)];
                int tgt = ga.group().mul(yi, ga.degree_of(j));
                Mat rhs(m.dims[size_t(y)], m.dims[size_t(tgt)], p);
                for (int k = 0; k < ga.dim(); ++k) {
                    u32 c = ga.algebra().sc[size_t(i)][size_t(j)][size_t(k)];
                    if (c == 0) continue;
                    rhs = rhs + m.act[size_t(k)][size_t(y)].scaled(c);
                }
                if (!(lhs == rhs)) {
                    assoc = false;
                    aw = "ActionNotAssociative(b" + std::to_string(i) + ",b" + std::to_string(j) +
                         ",deg " + std::to_string(y) + ")";
                }
            }
    rep.add("action_associative", assoc, aw);
    return rep;
}

GradedModule make_graded_module(std::shared_ptr<const GradedAlgebra> algebra,
                                std::vector<int> dims, std::vector<std::vector<Mat>> act) {
    GradedModule m{std::move(algebra), std::move(dims), std::move(act)};
    Report rep = validate_graded_module(m);
    if (!rep.ok()) {
        const CheckItem* f = rep.first_failure();
        throw CheckFailure("graded module invalid: " + f->name +
                           (f->witness.empty() ? "" : " " + f->witness));
    }
    return m;
}

GradedModule zero_graded_module(std::shared_ptr<const GradedAlgebra> algebra) {
    const int n = algebra->group().order();
    const u32 p = algebra->modulus();
    std::vector<int> dims(size_t(n), 0);
    std::vector<std::vector<Mat>> act(size_t(algebra->dim()),
                                      std::vector<Mat>(size_t(n), Mat(0, 0, p)));
    return GradedModule{std::move(algebra), std::move(dims), std::move(act)};
}

GradedModule make_shift(std::shared_ptr<const GradedAlgebra> algebra, int x) {
    const auto& ga = *algebra;
    const FiniteGroup& g = ga.group();
    if (x < 0 || x >= g.order()) throw InvalidInput("make_shift: degree out of range");
    const int n = g.order();
    const u32 p = ga.modulus();
    const int xinv = g.inverse(x);

    std::vector<int> dims(size_t(n), 0);
    for (int y = 0; y < n; ++y) dims[size_t(y)] = ga.dim_of_degree(g.mul(xinv, y));

    std::vector<std::vector<Mat>> act(size_t(ga.dim()), std::vector<Mat>(size_t(n)));
    for (int i = 0; i < ga.dim(); ++i) {
        for (int y = 0; y < n; ++y) {
            int src_deg = g.mul(xinv, y);
            int ty = g.mul(y, ga.degree_of(i));
            Mat blk(dims[size_t(y)], dims[size_t(ty)], p);
            const auto& src_idx = ga.basis_of_degree(src_deg);
            for (size_t a = 0; a < src_idx.size(); ++a) {
                // b_{src} * b_i, restricted to its (forced) degree component.
                const auto& prod = ga.algebra().sc[size_t(src_idx[a])][size_t(i)];
                auto local = ga.component_coords(prod, g.mul(src_deg, ga.degree_of(i)));
                for (size_t c = 0; c < local.size(); ++c) blk.at(int(a), int(c)) = local[c];
            }
            act[size_t(i)][size_t(y)] = blk;
        }
    }
    return make_graded_module(algebra, std::move(dims), std::move(act));
}

GradedMap identity_map(const GradedModule& m) {
    GradedMap f;
    for (size_t y = 0; y < m.dims.size(); ++y)
        f.blocks.push_back(Mat::identity(m.dims[y], m.algebra->modulus()));
    return f;
}

GradedMap zero_map(const GradedModule& src, const GradedModule& tgt) {
    GradedMap f;
    for (size_t y = 0; y < src.dims.size(); ++y)
        f.blocks.push_back(Mat(src.dims[y], tgt.dims[y], src.algebra->modulus()));
    return f;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
    GradedMap out;
    for (size_t y = 0; y < f.blocks.size(); ++y) out.blocks.push_back(f.blocks[y] * g.blocks[y]);
    return out;
}

GradedMap map_add(const GradedMap& f, const GradedMap& g) {
    GradedMap out;
    for (size_t y = 0; y < f.blocks.size(); ++y) out.blocks.push_back(f.blocks[y] + g.blocks[y]);
    return out;
}

GradedMap map_scale(const GradedMap& f, u32 c) {
    GradedMap out;
    for (const auto& b : f.blocks) out.blocks.push_back(b.scaled(c));
    return out;
}

bool map_is_zero(const GradedMap& f) {
    for (const auto& b : f.blocks)
        if (!b.is_zero()) return false;
    return true;
}

bool check_graded_map(const GradedModule& src, const GradedModule& tgt, const GradedMap& f) {
    const auto& ga = *src.algebra;
    const int n = ga.group().order();
    if (int(f.blocks.size()) != n) return false;
    for (int y = 0; y < n; ++y)
        if (f.blocks[size_t(y)].rows() != src.dims[size_t(y)] ||
            f.blocks[size_t(y)].cols() != tgt.dims[size_t(y)])
            return false;
    for (int i = 0; i < ga.dim(); ++i)
        for (int y = 0; y < n; ++y) {
            int ty = ga.group().mul(y, ga.degree_of(i));
            if (!(src.act[size_t(i)][size_t(y)] * f.blocks[size_t(ty)] ==
                  f.blocks[size_t(y)] * tgt.act[size_t(i)][size_t(y)]))
                return false;
        }
    return true;
}

GradedSubspace zero_subspace_of(const GradedModule& m) {
    GradedSubspace s;
    for (int d : m.dims) s.emplace_back(d, m.algebra->modulus());
    return s;
}

GradedSubspace full_subspace_of(const GradedModule& m) {
    GradedSubspace s;
    for (int d : m.dims) s.push_back(Subspace::full(d, m.algebra->modulus()));
    return s;
}

bool graded_subspace_equal(const GradedSubspace& a, const GradedSubspace& b) { return a == b; }

bool graded_subspace_contains(const GradedSubspace& outer, const GradedSubspace& inner) {
    for (size_t y = 0; y < outer.size(); ++y)
        if (!outer[y].contains(inner[y])) return false;
    return true;
}

GradedSubspace graded_subspace_sum(const GradedSubspace& a, const GradedSubspace& b) {
    GradedSubspace s;
    for (size_t y = 0; y < a.size(); ++y) s.push_back(a[y].sum(b[y]));
    return s;
}

std::vector<int> graded_subspace_dims(const GradedSubspace& s) {
    std::vector<int> d;
    for (const auto& sub : s) d.push_back(sub.dim());
    return d;
}

bool is_action_closed(const GradedModule& m, const GradedSubspace& s) {
    const auto& ga = *m.algebra;
    for (int i = 0; i < ga.dim(); ++i)
        for (int y = 0; y < ga.group().order(); ++y) {
            int ty = ga.group().mul(y, ga.degree_of(i));
            for (int r = 0; r < s[size_t(y)].dim(); ++r) {
                Mat img = s[size_t(y)].basis().row(r) * m.act[size_t(i)][size_t(y)];
                if (!s[size_t(ty)].contains_row(img)) return false;
            }
        }
    return true;
}

GradedSubspace close_under_action(const GradedModule& m, const std::vector<Mat>& gens) {
    const auto& ga = *m.algebra;
    const int n = ga.group().order();
    GradedSubspace s;
    for (int y = 0; y < n; ++y) s.push_back(Subspace::span_rows(gens[size_t(y)]));
    bool changed = true;
    while (changed) {
        changed = false;
        for (int y = 0; y < n; ++y) {
            for (int r = 0; r < s[size_t(y)].dim(); ++r) {
                Mat v = s[size_t(y)].basis().row(r);
                for (int i = 0; i < ga.dim(); ++i) {
                    int ty = ga.group().mul(y, ga.degree_of(i));
                    Mat img = v * m.act[size_t(i)][size_t(y)];
                    if (!s[size_t(ty)].contains_row(img)) {
                        s[size_t(ty)] = s[size_t(ty)].sum(Subspace::span_rows(img));
                        changed = true;
                    }
                }
            }
        }
    }
    return s;
}

GradedSubspace map_image(const GradedMap& f) {
    GradedSubspace s;
    for (const auto& b : f.blocks) s.push_back(row_space(b));
    return s;
}

GradedSubspace map_kernel(const GradedMap& f) {
    GradedSubspace s;
    for (const auto& b : f.blocks) s.push_back(left_kernel(b));
    return s;
}

SubmoduleResult submodule_from_subspace(const GradedModule& m, const GradedSubspace& s) {
    if (!is_action_closed(m, s))
        throw CheckFailure("submodule_from_subspace: subspace is not action-closed");
    const auto& ga = *m.algebra;
    const int n = ga.group().order();
    std::vector<int> dims;
    for (const auto& sub : s) dims.push_back(sub.dim());
    std::vector<std::vector<Mat>> act(size_t(ga.dim()), std::vector<Mat>(size_t(n)));
    for (int i = 0; i < ga.dim(); ++i)
        for (int y = 0; y < n; ++y) {
            int ty = ga.group().mul(y, ga.degree_of(i));
            Mat blk(dims[size_t(y)], dims[size_t(ty)], ga.modulus());
            for (int r = 0; r < dims[size_t(y)]; ++r) {
                Mat img = s[size_t(y)].basis().row(r) * m.act[size_t(i)][size_t(y)];
                auto coords = s[size_t(ty)].coords_of(img);
                for (size_t c = 0; c < coords.size(); ++c) blk.at(r, int(c)) = coords[c];
            }
            act[size_t(i)][size_t(y)] = blk;
        }
    GradedModule sub = make_graded_module(m.algebra, std::move(dims), std::move(act));
    GradedMap incl;
    for (int y = 0; y < n; ++y) incl.blocks.push_back(s[size_t(y)].basis());
    return SubmoduleResult{std::move(sub), std::move(incl), s};
}

SubmoduleResult submodule_from_homogeneous(const GradedModule& m, const std::vector<Mat>& gens) {
    return submodule_from_subspace(m, close_under_action(m, gens));
}

QuotientResult quotient_module(const GradedModule& m, const GradedSubspace& s) {
    if (!is_action_closed(m, s))
        throw CheckFailure("quotient_module: subspace is not action-closed");
    const auto& ga = *m.algebra;
    const int n = ga.group().order();
    std::vector<QuotientStructure> qs;
    std::vector<int> dims;
    for (int y = 0; y < n; ++y) {
        qs.push_back(quotient_structure(s[size_t(y)]));
        dims.push_back(m.dims[size_t(y)] - s[size_t(y)].dim());
    }
    std::vector<std::vector<Mat>> act(size_t(ga.dim()), std::vector<Mat>(size_t(n)));
    for (int i = 0; i < ga.dim(); ++i)
        for (int y = 0; y < n; ++y) {
            int ty = ga.group().mul(y, ga.degree_of(i));
            act[size_t(i)][size_t(y)] =
                qs[size_t(y)].reps * m.act[size_t(i)][size_t(y)] * qs[size_t(ty)].proj;
        }
    GradedModule q = make_graded_module(m.algebra, std::move(dims), std::move(act));
    GradedMap proj;
    for (int y = 0; y < n; ++y) proj.blocks.push_back(qs[size_t(y)].proj);
    return QuotientResult{std::move(q), std::move(proj)};
}

DirectSumResult direct_sum(const GradedModule& a, const GradedModule& b) {
    if (a.algebra != b.algebra) throw InvalidInput("direct_sum: algebra mismatch");
    const auto& ga = *a.algebra;
    const int n = ga.group().order();
    const u32 p = ga.modulus();
    std::vector<int> dims(size_t(n), 0);
    for (int y = 0; y < n; ++y) dims[size_t(y)] = a.dims[size_t(y)] + b.dims[size_t(y)];
    std::vector<std::vector<Mat>> act(size_t(ga.dim()), std::vector<Mat>(size_t(n)));
    for (int i = 0; i < ga.dim(); ++i)
        for (int y = 0; y < n; ++y) {
            int ty = ga.group().mul(y, ga.degree_of(i));
            Mat blk(dims[size_t(y)], dims[size_t(ty)], p);
            const Mat& ba = a.act[size_t(i)][size_t(y)];
            const Mat& bb = b.act[size_t(i)][size_t(y)];
            for (int r = 0; r < ba.rows(); ++r)
                for (int c = 0; c < ba.cols(); ++c) blk.at(r, c) = ba.at(r, c);
            for (int r = 0; r < bb.rows(); ++r)
                for (int c = 0; c < bb.cols(); ++c)
                    blk.at(a.dims[size_t(y)] + r, a.dims[size_t(ty)] + c) = bb.at(r, c);
            act[size_t(i)][size_t(y)] = blk;
        }
    GradedModule sum = make_graded_module(a.algebra, std::move(dims), std::move(act));

    DirectSumResult out{std::move(sum), {}, {}, {}, {}};
    for (int y = 0; y < n; ++y) {
        int da = a.dims[size_t(y)], db = b.dims[size_t(y)];
        Mat i1(da, da + db, p), i2(db, da + db, p), p1(da + db, da, p), p2(da + db, db, p);
        for (int r = 0; r < da; ++r) { i1.at(r, r) = 1; p1.at(r, r) = 1; }
        for (int r = 0; r < db; ++r) { i2.at(r, da + r) = 1; p2.at(da + r, r) = 1; }
        out.inj1.blocks.push_back(i1);
        out.inj2.blocks.push_back(i2);
        out.proj1.blocks.push_back(p1);
        out.proj2.blocks.push_back(p2);
    }
    return out;
}

} // namespace gradalg

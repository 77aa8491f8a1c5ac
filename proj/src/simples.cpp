#include "gradalg/simples.hpp"

#include <string>

#include "gradalg/errors.hpp"

namespace gradalg {

GradedSimplicity is_graded_simple(const GradedModule& m, u64 bound) {
    GradedSimplicity out;
    if (m.total_dim() == 0) return out;
    const auto& ga = *m.algebra;
    const int n = ga.group().order();
    const u32 p = ga.modulus();

    u64 cost = 0;
    for (int y = 0; y < n; ++y) {
        auto c = checked_pow(p, u64(m.dims[size_t(y)]));
        if (!c) throw BoundExceeded("is_graded_simple: component too large");
        cost += *c;
    }
    if (cost > bound) throw BoundExceeded("is_graded_simple: enumeration exceeds bound");

    for (int y = 0; y < n; ++y) {
        const int d = m.dims[size_t(y)];
        if (d == 0) continue;
        std::vector<u32> v(size_t(d), 0);
        while (true) {
            size_t k = 0;
            while (k < v.size() && ++v[k] == p) v[k++] = 0;
            if (k == v.size()) break;
            std::vector<Mat> gens;
            for (int w = 0; w < n; ++w)
                gens.push_back(w == y ? Mat::row_vector(v, p) : Mat(0, m.dims[size_t(w)], p));
            auto cl = close_under_action(m, gens);
            if (graded_subspace_dims(cl) != m.dims) {
                out.simple = false;
                out.witness_degree = y;
                out.witness_vector = Mat::row_vector(v, p);
                return out;
            }
        }
    }
    out.simple = true;
    return out;
}

std::vector<GradedSubspace> graded_submodule_subspaces(const GradedModule& m, u64 bound) {
    const auto& ga = *m.algebra;
    const int n = ga.group().order();
    const u32 p = ga.modulus();
    std::vector<std::vector<Subspace>> per_degree;
    u64 combos = 1;
    for (int y = 0; y < n; ++y) {
        per_degree.push_back(enumerate_subspaces(m.dims[size_t(y)], p, bound));
        u64 c = per_degree.back().size();
        if (combos > bound / (c == 0 ? 1 : c))
            throw BoundExceeded("graded_submodule_subspaces: tuple count exceeds bound");
        combos *= c;
    }
    std::vector<GradedSubspace> out;
    std::vector<size_t> pick(size_t(n), 0);
    while (true) {
        GradedSubspace s;
        for (int y = 0; y < n; ++y) s.push_back(per_degree[size_t(y)][pick[size_t(y)]]);
        if (is_action_closed(m, s)) out.push_back(std::move(s));
        size_t k = 0;
        while (k < pick.size() && ++pick[k] == per_degree[k].size()) pick[k++] = 0;
        if (k == pick.size()) break;
    }
    return out;
}

std::vector<GradedSubspace> maximal_graded_submodules(const GradedModule& m, u64 bound) {
    auto subs = graded_submodule_subspaces(m, bound);
    auto dims = m.dims;
    std::vector<GradedSubspace> maximal;
    for (const auto& s : subs) {
        if (graded_subspace_dims(s) == dims) continue;
        bool is_max = true;
        for (const auto& t : subs) {
            if (graded_subspace_dims(t) == dims) continue;
            if (graded_subspace_equal(t, s)) continue;
            if (graded_subspace_contains(t, s)) { is_max = false; break; }
        }
        if (is_max) maximal.push_back(s);
    }
    return maximal;
}

std::vector<AeSimpleClass> simple_ae_modules(std::shared_ptr<const Algebra> ae,
                                             const SimplesOptions& opt) {
    AeModule reg = regular_module(ae);
    std::vector<AeSimpleClass> classes;
    for (const auto& mx : ae_maximal_submodules(reg, opt.bound)) {
        auto q = ae_quotient(reg, mx);
        bool known = false;
        for (const auto& cls : classes) {
            auto iso = ae_isomorphic(cls.rep, q.module, opt.iso);
            if (iso.verdict == IsoVerdict::inconclusive)
                throw CheckFailure("simple_ae_modules: isomorphism search inconclusive");
            if (iso.verdict == IsoVerdict::yes) { known = true; break; }
        }
        if (!known) classes.push_back(AeSimpleClass{std::move(q.module), mx});
    }
    return classes;
}

Subspace jacobson_radical(std::shared_ptr<const Algebra> r, u64 bound) {
    AeModule reg = regular_module(r);
    Subspace j = Subspace::full(r->dim, r->p);
    for (const auto& mx : ae_maximal_submodules(reg, bound)) j = j.intersect(mx);

    // Verified two-sided: right closure is inherited from the submodules;
    // left closure checked directly.
    for (int i = 0; i < r->dim; ++i) {
        Mat lm = r->left_mult_elem(unit_vector(r->dim, i));
        for (int row = 0; row < j.dim(); ++row)
            if (!j.contains_row(j.basis().row(row) * lm))
                throw CheckFailure("jacobson_radical: not a left ideal");
    }

    // Verified nilpotent: power the subspace until it hits zero.
    Subspace power = j;
    for (int step = 0; step <= r->dim && power.dim() > 0; ++step) {
        Mat gens(0, r->dim, r->p);
        for (int a = 0; a < power.dim(); ++a)
            for (int b = 0; b < j.dim(); ++b) {
                auto prod = r->mul(power.basis().row_copy(a), j.basis().row_copy(b));
                gens = Mat::vstack(gens, Mat::row_vector(prod, r->p));
            }
        Subspace next = Subspace::span_rows(gens);
        if (next.dim() >= power.dim() && next == power && power.dim() > 0)
            throw CheckFailure("jacobson_radical: radical is not nilpotent");
        power = next;
    }
    if (power.dim() != 0) throw CheckFailure("jacobson_radical: radical is not nilpotent");
    return j;
}

GradedModule to_simple_graded(std::shared_ptr<const GradedAlgebra> ga, int x, const AeModule& y,
                              const SimplesOptions& opt) {
    auto cy = coind(ga, x, y);
    auto rad = radical_submodule(cy.mod, x);
    if (rad.module.total_dim() == 0)
        throw CheckFailure("to_simple_graded: r_x(Coind_x(Y)) is zero");
    auto verdict = is_graded_simple(rad.module, opt.bound);
    if (!verdict.simple)
        throw CheckFailure("to_simple_graded: r_x(Coind_x(Y)) is not graded-simple");
    auto back = ae_isomorphic(restrict_to_ae(rad.module, x), y, opt.iso);
    if (back.verdict != IsoVerdict::yes)
        throw CheckFailure("to_simple_graded: degree-x restriction is not Y");
    return rad.module;
}

AeModule of_simple_graded(const GradedModule& s, int x, const SimplesOptions& opt) {
    if (s.dims[size_t(x)] == 0)
        throw InvalidInput("of_simple_graded: degree " + std::to_string(x) +
                           " is not in the support");
    AeModule u = restrict_to_ae(s, x);
    if (!is_simple_ae(u, opt.bound))
        throw CheckFailure("of_simple_graded: S_x is not simple over A_e");
    return u;
}

std::vector<GradedSimpleClass> sweep_graded_simples(std::shared_ptr<const GradedAlgebra> ga, int x,
                                                    const SimplesOptions& opt) {
    const int n = ga->group().order();
    std::vector<GradedSimpleClass> classes;
    for (int y = 0; y < n; ++y) {
        auto shift = make_shift(ga, y);
        for (const auto& mx : maximal_graded_submodules(shift, opt.bound)) {
            auto q = quotient_module(shift, mx);
            if (q.module.dims[size_t(x)] == 0) continue;
            auto verdict = is_graded_simple(q.module, opt.bound);
            if (!verdict.simple)
                throw CheckFailure("sweep_graded_simples: quotient by a maximal submodule "
                                   "is not graded-simple");
            bool known = false;
            for (const auto& cls : classes) {
                auto iso = graded_isomorphic(cls.rep, q.module, opt.iso);
                if (iso.verdict == IsoVerdict::inconclusive)
                    throw CheckFailure("sweep_graded_simples: isomorphism search inconclusive");
                if (iso.verdict == IsoVerdict::yes) { known = true; break; }
            }
            if (!known) {
                GradedSimpleClass cls{std::move(q.module), {}};
                for (int w = 0; w < n; ++w) {
                    if (cls.rep.dims[size_t(w)] == 0) continue;
                    Mat gen(1, cls.rep.dims[size_t(w)], ga->modulus());
                    gen.at(0, 0) = 1; // every nonzero homogeneous vector generates
                    cls.generators.push_back(gen);
                }
                classes.push_back(std::move(cls));
            }
        }
    }
    return classes;
}

BijectionReport bijection_check(std::shared_ptr<const GradedAlgebra> ga, int x,
                                const SimplesOptions& opt) {
    BijectionReport out;
    auto s_classes = simple_ae_modules(ga->ae(), opt);
    auto sx_classes = sweep_graded_simples(ga, x, opt);
    out.s_count = int(s_classes.size());
    out.sx_count = int(sx_classes.size());
    out.details.add("equal_cardinality", s_classes.size() == sx_classes.size(),
                    std::to_string(s_classes.size()) + " vs " + std::to_string(sx_classes.size()));

    // forward images and the round trip of o to = id on S
    std::vector<GradedModule> images;
    bool of_to = true;
    for (const auto& y : s_classes) {
        auto img = to_simple_graded(ga, x, y.rep, opt); // already verifies S_x = Y
        images.push_back(std::move(img));
    }
    out.details.add("roundtrip_of_to", of_to);

    // injectivity across distinct simples
    bool injective = true;
    for (size_t a = 0; a < images.size() && injective; ++a)
        for (size_t b = a + 1; b < images.size() && injective; ++b) {
            auto iso = graded_isomorphic(images[a], images[b], opt.iso);
            if (iso.verdict == IsoVerdict::inconclusive)
                throw CheckFailure("bijection_check: isomorphism search inconclusive");
            if (iso.verdict == IsoVerdict::yes) injective = false;
        }
    out.details.add("injective", injective);

    // surjectivity: every sweep class is an image
    bool surjective = true;
    for (const auto& cls : sx_classes) {
        bool hit = false;
        for (const auto& img : images) {
            auto iso = graded_isomorphic(cls.rep, img, opt.iso);
            if (iso.verdict == IsoVerdict::inconclusive)
                throw CheckFailure("bijection_check: isomorphism search inconclusive");
            if (iso.verdict == IsoVerdict::yes) { hit = true; break; }
        }
        if (!hit) surjective = false;
    }
    out.details.add("surjective_onto_sweep", surjective);

    // round trip to o of = id on S_x
    bool to_of = true;
    for (const auto& cls : sx_classes) {
        auto y = of_simple_graded(cls.rep, x, opt);
        auto back = to_simple_graded(ga, x, y, opt);
        auto iso = graded_isomorphic(back, cls.rep, opt.iso);
        if (iso.verdict != IsoVerdict::yes) to_of = false;
    }
    out.details.add("roundtrip_to_of", to_of);
    return out;
}

bool is_semisimple_over_ae(const GradedModule& s, u64 bound) {
    const auto& ga = *s.algebra;
    Subspace j = jacobson_radical(ga.ae(), bound);
    for (int y = 0; y < ga.group().order(); ++y) {
        AeModule comp = restrict_to_ae(s, y);
        for (int r = 0; r < j.dim(); ++r)
            if (!ae_action_of(comp, j.basis().row_copy(r)).is_zero()) return false;
    }
    return true;
}

Report maximal_ideal_transport_check(const SmashAlgebra& b, int x, u64 bound) {
    Report rep;
    SigmaDual sd = sigma_dual(b, x);
    const int hd = sd.hom_b.dim();
    const u32 p = b.ring()->p;

    // All End_B(Sigma)-submodules of Sigma*.
    std::vector<Subspace> t_submodules;
    for (auto& s : enumerate_subspaces(hd, p, bound)) {
        bool closed = true;
        for (const auto& act : sd.right_endo_action) {
            for (int r = 0; r < s.dim() && closed; ++r)
                if (!s.contains_row(s.basis().row(r) * act)) closed = false;
            if (!closed) break;
        }
        if (closed) t_submodules.push_back(std::move(s));
    }

    auto ideals = ae_maximal_submodules(regular_module(b.ring()), bound);
    rep.add("maximal_right_ideals_found", !ideals.empty(),
            "count " + std::to_string(ideals.size()));

    int qualifying = 0, transported = 0;
    for (const auto& ideal : ideals) {
        // I Sigma* = sum of images of left multiplication by elements of I.
        Subspace isigma(hd, p);
        for (int r = 0; r < ideal.dim(); ++r) {
            Mat lact(hd, hd, p);
            for (int j = 0; j < b.dim(); ++j) {
                u32 c = ideal.basis().at(r, j);
                if (c != 0) lact = lact + sd.left_b_action[size_t(j)].scaled(c);
            }
            isigma = isigma.sum(row_space(lact));
        }
        if (isigma.dim() == hd) continue; // only proper I Sigma* qualifies
        ++qualifying;
        bool maximal = true;
        for (const auto& w : t_submodules) {
            if (w.dim() == hd || w == isigma) continue;
            if (w.contains(isigma)) { maximal = false; break; }
        }
        if (maximal) ++transported;
    }
    rep.add("qualifying_ideals", true, "count " + std::to_string(qualifying));
    rep.add("transport_maximality", qualifying == transported,
            std::to_string(transported) + " of " + std::to_string(qualifying));
    return rep;
}

} // namespace gradalg

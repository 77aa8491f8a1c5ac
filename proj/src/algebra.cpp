#include "gradalg/algebra.hpp"

#include <string>

#include "gradalg/errors.hpp"

namespace gradalg {

std::vector<u32> Algebra::mul(const std::vector<u32>& a, const std::vector<u32>& b) const {
    Fp f(p);
    std::vector<u32> out(size_t(dim), 0);
    for (int i = 0; i < dim; ++i) {
        if (a[size_t(i)] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[size_t(j)] == 0) continue;
            u32 c = f.mul(a[size_t(i)], b[size_t(j)]);
            for (int k = 0; k < dim; ++k)
                out[size_t(k)] = f.add(out[size_t(k)], f.mul(c, sc[size_t(i)][size_t(j)][size_t(k)]));
        }
    }
    return out;
}

Mat Algebra::right_mult(int i) const {
    Mat m(dim, dim, p);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) m.at(j, k) = sc[size_t(j)][size_t(i)][size_t(k)];
    return m;
}

Mat Algebra::left_mult_elem(const std::vector<u32>& a) const {
    Fp f(p);
    Mat m(dim, dim, p);
    for (int i = 0; i < dim; ++i) {
        u32 c = a[size_t(i)];
        if (c == 0) continue;
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                m.at(j, k) = f.add(m.at(j, k), f.mul(c, sc[size_t(i)][size_t(j)][size_t(k)]));
    }
    return m;
}

Report validate_algebra(const Algebra& a) {
    Report rep;
    bool shapes = int(a.sc.size()) == a.dim && int(a.unit.size()) == a.dim;
    for (const auto& row : a.sc) {
        shapes = shapes && int(row.size()) == a.dim;
        for (const auto& v : row) shapes = shapes && int(v.size()) == a.dim;
    }
    rep.add("sc_shape", shapes, shapes ? "" : "structure constant tensor shape mismatch");
    if (!shapes) return rep;

    auto basis = [&](int i) {
        std::vector<u32> v(size_t(a.dim), 0);
        v[size_t(i)] = 1;
        return v;
    };

    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                auto lhs = a.mul(a.mul(basis(i), basis(j)), basis(k));
                auto rhs = a.mul(basis(i), a.mul(basis(j), basis(k)));
                if (lhs != rhs) {
                    rep.add("associative", false,
                            "NotAssociative(b" + std::to_string(i) + ",b" + std::to_string(j) +
                                ",b" + std::to_string(k) + ")");
                    return rep;
                }
            }
    rep.add("associative", true);

    for (int i = 0; i < a.dim; ++i) {
        if (a.mul(a.unit, basis(i)) != basis(i) || a.mul(basis(i), a.unit) != basis(i)) {
            rep.add("unit_identity", false, "UnitViolation(b" + std::to_string(i) + ")");
            return rep;
        }
    }
    rep.add("unit_identity", true);
    return rep;
}

std::shared_ptr<const Algebra> make_algebra(u32 p, int dim,
                                            std::vector<std::vector<std::vector<u32>>> sc,
                                            std::vector<u32> unit) {
    Fp field(p); // prime check
    auto alg = std::make_shared<Algebra>();
    alg->p = p;
    alg->dim = dim;
    alg->sc = std::move(sc);
    alg->unit = std::move(unit);
    Report rep = validate_algebra(*alg);
    if (!rep.ok()) {
        const CheckItem* f = rep.first_failure();
        throw CheckFailure("algebra invalid: " + f->name +
                           (f->witness.empty() ? "" : " " + f->witness));
    }
    return alg;
}

} // namespace gradalg

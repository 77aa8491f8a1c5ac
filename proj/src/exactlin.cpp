#include "gradalg/exactlin.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace gradalg {

Fp::Fp(u32 p) : p_(p) {
    if (!is_prime(p)) throw InvalidInput("modulus " + std::to_string(p) + " is not prime");
}

bool Fp::is_prime(u32 n) {
    if (n < 2) return false;
    for (u32 d = 2; u64(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u32 Fp::pow(u32 a, u64 e) const {
    u32 r = 1 % p_, b = a % p_;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

u32 Fp::inv(u32 a) const {
    if (a % p_ == 0) throw InvalidInput("division by zero in GF(" + std::to_string(p_) + ")");
    return pow(a, p_ - 2);
}

Mat::Mat(int rows, int cols, u32 p)
    : rows_(rows), cols_(cols), p_(p), a_(size_t(rows) * size_t(cols), 0) {
    if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
}

Mat Mat::identity(int n, u32 p) {
    Mat m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

Mat Mat::row_vector(const std::vector<u32>& v, u32 p) {
    Mat m(1, int(v.size()), p);
    for (int c = 0; c < int(v.size()); ++c) m.at(0, c) = v[c] % p;
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<u32>>& rows, int cols, u32 p) {
    Mat m(int(rows.size()), cols, p);
    for (int r = 0; r < m.rows(); ++r) {
        if (int(rows[r].size()) != cols) throw InvalidInput("ragged row list");
        for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c] % p;
    }
    return m;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_) throw InvalidInput("matrix product shape mismatch");
    Mat out(rows_, rhs.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            u32 v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = u32((u64(out.at(i, j)) + u64(v) * rhs.at(k, j)) % p_);
        }
    return out;
}

Mat Mat::operator+(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || p_ != rhs.p_)
        throw InvalidInput("matrix sum shape mismatch");
    Fp f(p_);
    Mat out(rows_, cols_, p_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = f.add(a_[i], rhs.a_[i]);
    return out;
}

Mat Mat::operator-(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || p_ != rhs.p_)
        throw InvalidInput("matrix difference shape mismatch");
    Fp f(p_);
    Mat out(rows_, cols_, p_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = f.sub(a_[i], rhs.a_[i]);
    return out;
}

Mat Mat::scaled(u32 c) const {
    Fp f(p_);
    Mat out = *this;
    for (auto& v : out.a_) v = f.mul(v, c);
    return out;
}

Mat Mat::transpose() const {
    Mat out(cols_, rows_, p_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](u32 v) { return v == 0; });
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_, p_);
}

std::vector<u32> Mat::row_copy(int r) const {
    return std::vector<u32>(a_.begin() + size_t(r) * cols_, a_.begin() + size_t(r + 1) * cols_);
}

void Mat::set_row(int r, const std::vector<u32>& v) {
    if (int(v.size()) != cols_) throw InvalidInput("row length mismatch");
    for (int c = 0; c < cols_; ++c) at(r, c) = v[c] % p_;
}

Mat Mat::row(int r) const { return rows_slice(r, r + 1); }

Mat Mat::rows_slice(int r0, int r1) const {
    Mat out(r1 - r0, cols_, p_);
    for (int r = r0; r < r1; ++r)
        for (int c = 0; c < cols_; ++c) out.at(r - r0, c) = at(r, c);
    return out;
}

Mat Mat::cols_slice(int c0, int c1) const {
    Mat out(rows_, c1 - c0, p_);
    for (int r = 0; r < rows_; ++r)
        for (int c = c0; c < c1; ++c) out.at(r, c - c0) = at(r, c);
    return out;
}

Mat Mat::vstack(const Mat& top, const Mat& bottom) {
    if (top.cols_ != bottom.cols_ || top.p_ != bottom.p_)
        throw InvalidInput("vstack shape mismatch");
    Mat out(top.rows_ + bottom.rows_, top.cols_, top.p_);
    for (int r = 0; r < top.rows_; ++r)
        for (int c = 0; c < top.cols_; ++c) out.at(r, c) = top.at(r, c);
    for (int r = 0; r < bottom.rows_; ++r)
        for (int c = 0; c < top.cols_; ++c) out.at(top.rows_ + r, c) = bottom.at(r, c);
    return out;
}

Mat Mat::hstack(const Mat& left, const Mat& right) {
    if (left.rows_ != right.rows_ || left.p_ != right.p_)
        throw InvalidInput("hstack shape mismatch");
    Mat out(left.rows_, left.cols_ + right.cols_, left.p_);
    for (int r = 0; r < left.rows_; ++r) {
        for (int c = 0; c < left.cols_; ++c) out.at(r, c) = left.at(r, c);
        for (int c = 0; c < right.cols_; ++c) out.at(r, left.cols_ + c) = right.at(r, c);
    }
    return out;
}

RrefResult rref(const Mat& m) {
    Fp f(m.modulus());
    RrefResult res{m, {}, 0};
    Mat& a = res.reduced;
    int lead = 0;
    for (int col = 0; col < a.cols() && lead < a.rows(); ++col) {
        int piv = -1;
        for (int r = lead; r < a.rows(); ++r)
            if (a.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != lead)
            for (int c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(lead, c));
        u32 s = f.inv(a.at(lead, col));
        for (int c = 0; c < a.cols(); ++c) a.at(lead, c) = f.mul(a.at(lead, c), s);
        for (int r = 0; r < a.rows(); ++r) {
            if (r == lead || a.at(r, col) == 0) continue;
            u32 fac = a.at(r, col);
            for (int c = 0; c < a.cols(); ++c)
                a.at(r, c) = f.sub(a.at(r, c), f.mul(fac, a.at(lead, c)));
        }
        res.pivots.push_back(col);
        ++lead;
    }
    res.rank = int(res.pivots.size());
    return res;
}

int rank(const Mat& m) { return rref(m).rank; }

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw InvalidInput("inverse of non-square matrix");
    auto r = rref(Mat::hstack(m, Mat::identity(m.rows(), m.modulus())));
    for (int i = 0; i < m.rows(); ++i)
        if (i >= int(r.pivots.size()) || r.pivots[size_t(i)] != i) return std::nullopt;
    return r.reduced.cols_slice(m.cols(), 2 * m.cols());
}

Subspace::Subspace(int ambient, u32 p)
    : ambient_(ambient), p_(p), basis_(0, ambient, p) {
    if (ambient < 0) throw InvalidInput("negative ambient dimension");
}

Subspace Subspace::span_rows(const Mat& rows) {
    Subspace s(rows.cols(), rows.modulus());
    auto r = rref(rows);
    s.basis_ = r.reduced.rows_slice(0, r.rank);
    s.pivots_ = r.pivots;
    return s;
}

Subspace Subspace::full(int ambient, u32 p) {
    return span_rows(Mat::identity(ambient, p));
}

std::optional<std::vector<u32>> Subspace::try_coords_of(const Mat& v) const {
    if (v.rows() != 1 || v.cols() != ambient_)
        throw InvalidInput("coords_of expects a 1 x ambient row");
    Fp f(p_);
    std::vector<u32> residue = v.row_copy(0);
    std::vector<u32> coords(size_t(dim()), 0);
    for (int i = 0; i < dim(); ++i) {
        u32 c = residue[pivots_[i]];
        if (c == 0) continue;
        coords[i] = c;
        for (int j = 0; j < ambient_; ++j)
            residue[j] = f.sub(residue[j], f.mul(c, basis_.at(i, j)));
    }
    for (u32 x : residue)
        if (x != 0) return std::nullopt;
    return coords;
}

std::vector<u32> Subspace::coords_of(const Mat& v) const {
    auto c = try_coords_of(v);
    if (!c) throw InvalidInput("vector outside subspace");
    return *c;
}

bool Subspace::contains_row(const Mat& v) const { return try_coords_of(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    for (int r = 0; r < other.dim(); ++r)
        if (!contains_row(other.basis_.row(r))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_ || p_ != other.p_)
        throw InvalidInput("subspace sum: ambient mismatch");
    return span_rows(Mat::vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_ || p_ != other.p_)
        throw InvalidInput("subspace intersect: ambient mismatch");
    // Kernel vectors (c,d) of [U;V] give intersection elements c*U = -d*V.
    Mat stacked = Mat::vstack(basis_, other.basis_);
    Subspace ker = left_kernel(stacked);
    Mat gens(ker.dim(), ambient_, p_);
    for (int r = 0; r < ker.dim(); ++r) {
        Mat c = ker.basis().row(r).cols_slice(0, dim());
        Mat w = c * basis_;
        for (int j = 0; j < ambient_; ++j) gens.at(r, j) = w.at(0, j);
    }
    return span_rows(gens);
}

Mat Subspace::coset_representatives() const {
    int q = ambient_ - dim();
    Mat reps(q, ambient_, p_);
    int idx = 0;
    size_t pi = 0;
    for (int c = 0; c < ambient_; ++c) {
        if (pi < pivots_.size() && pivots_[pi] == c) { ++pi; continue; }
        reps.at(idx, c) = 1 % p_;
        ++idx;
    }
    return reps;
}

QuotientStructure quotient_structure(const Subspace& s) {
    Mat reps = s.coset_representatives();
    Mat t = Mat::vstack(s.basis(), reps);
    auto tinv = inverse(t);
    assert(tinv.has_value());
    return QuotientStructure{reps, tinv->cols_slice(s.dim(), s.ambient())};
}

Subspace left_kernel(const Mat& m) {
    // v*m = 0  <=>  m^T v^T = 0; build kernel rows from the RREF free columns.
    auto r = rref(m.transpose());
    int n = m.rows();
    Fp f(m.modulus());
    std::vector<bool> is_pivot(size_t(n), false);
    for (int c : r.pivots) is_pivot[size_t(c)] = true;
    Mat out(n - r.rank, n, m.modulus());
    int row = 0;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[size_t(free)]) continue;
        out.at(row, free) = 1 % m.modulus();
        for (int i = 0; i < r.rank; ++i)
            out.at(row, r.pivots[i]) = f.neg(r.reduced.at(i, free));
        ++row;
    }
    return Subspace::span_rows(out);
}

Subspace row_space(const Mat& m) { return Subspace::span_rows(m); }

std::optional<LinearSolution> solve_all(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.modulus() != b.modulus())
        throw InvalidInput("solve_all: row count or modulus mismatch");
    auto r = rref(Mat::hstack(a, b));
    // Inconsistent iff some pivot falls in the b block.
    for (int c : r.pivots)
        if (c >= a.cols()) return std::nullopt;
    Mat x(a.cols(), b.cols(), a.modulus());
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < b.cols(); ++j)
            x.at(r.pivots[i], j) = r.reduced.at(i, a.cols() + j);
    return LinearSolution{x, left_kernel(a.transpose())};
}

std::optional<Mat> solve_rows(const Mat& m, const Mat& w) {
    auto sol = solve_all(m.transpose(), w.transpose());
    if (!sol) return std::nullopt;
    return sol->particular.transpose();
}

std::optional<u64> checked_pow(u32 p, u64 d) {
    u64 r = 1;
    for (u64 i = 0; i < d; ++i) {
        if (r > (u64(1) << 62) / p) return std::nullopt;
        r *= p;
    }
    return r;
}

std::vector<Subspace> enumerate_subspaces(int dim, u32 p, u64 bound) {
    auto total = checked_pow(p, u64(dim));
    if (!total || *total > bound)
        throw BoundExceeded("enumerate_subspaces: p^" + std::to_string(dim) +
                            " exceeds bound " + std::to_string(bound));
    // The subspace count itself can dwarf p^dim; pre-count with saturation.
    {
        u64 count = 1; // zero subspace
        for (int r = 1; r <= dim && count <= bound; ++r) {
            std::vector<int> piv(size_t(r), 0);
            for (int i = 0; i < r; ++i) piv[size_t(i)] = i;
            while (count <= bound) {
                int free_slots = 0;
                std::vector<bool> is_piv(size_t(dim), false);
                for (int c : piv) is_piv[size_t(c)] = true;
                for (int i = 0; i < r; ++i)
                    for (int c = piv[size_t(i)] + 1; c < dim; ++c)
                        if (!is_piv[size_t(c)]) ++free_slots;
                auto cells = checked_pow(p, u64(free_slots));
                count = (!cells || count > bound - std::min(*cells, bound)) ? bound + 1
                                                                            : count + *cells;
                int i = r - 1;
                while (i >= 0 && piv[size_t(i)] == dim - r + i) --i;
                if (i < 0) break;
                ++piv[size_t(i)];
                for (int j = i + 1; j < r; ++j) piv[size_t(j)] = piv[size_t(j - 1)] + 1;
            }
        }
        if (count > bound)
            throw BoundExceeded("enumerate_subspaces: subspace count exceeds bound " +
                                std::to_string(bound));
    }
    std::vector<Subspace> out;
    out.emplace_back(dim, p); // zero subspace (rank 0)
    for (int r = 1; r <= dim; ++r) {
        // All strictly increasing pivot-column tuples of length r.
        std::vector<int> piv(size_t(r), 0);
        for (int i = 0; i < r; ++i) piv[size_t(i)] = i;
        while (true) {
            // Free slots: (row i, col c) with c > piv[i], c not a pivot column.
            std::vector<bool> is_piv(size_t(dim), false);
            for (int c : piv) is_piv[size_t(c)] = true;
            std::vector<std::pair<int, int>> free_slots;
            for (int i = 0; i < r; ++i)
                for (int c = piv[size_t(i)] + 1; c < dim; ++c)
                    if (!is_piv[size_t(c)]) free_slots.push_back({i, c});
            std::vector<u32> fill(free_slots.size(), 0);
            while (true) {
                Mat basis(r, dim, p);
                for (int i = 0; i < r; ++i) basis.at(i, piv[size_t(i)]) = 1;
                for (size_t s = 0; s < free_slots.size(); ++s)
                    basis.at(free_slots[s].first, free_slots[s].second) = fill[s];
                out.push_back(Subspace::span_rows(basis));
                // Next base-p assignment of the free slots.
                size_t k = 0;
                while (k < fill.size() && ++fill[k] == p) fill[k++] = 0;
                if (k == fill.size()) break;
            }
            // Next pivot combination.
            int i = r - 1;
            while (i >= 0 && piv[size_t(i)] == dim - r + i) --i;
            if (i < 0) break;
            ++piv[size_t(i)];
            for (int j = i + 1; j < r; ++j) piv[size_t(j)] = piv[size_t(j - 1)] + 1;
        }
    }
    return out;
}

} // namespace gradalg

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gradalg/errors.hpp"

namespace gradalg {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Default cap on exhaustive enumerations (number of vectors p^d).
inline constexpr u64 kDefaultEnumBound = u64(1) << 20;

/// The prime field GF(p). Values are residues in [0, p).
class Fp {
public:
    explicit Fp(u32 p);

    u32 modulus() const { return p_; }
    u32 add(u32 a, u32 b) const { u32 s = a + b; return s >= p_ ? s - p_ : s; }
    u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p_ - b; }
    u32 mul(u32 a, u32 b) const { return u32(u64(a) * b % p_); }
    u32 neg(u32 a) const { return a == 0 ? 0 : p_ - a; }
    u32 inv(u32 a) const;
    u32 pow(u32 a, u64 e) const;

    /// Deterministic trial-division primality test.
    static bool is_prime(u32 n);

private:
    u32 p_;
};

/// Dense row-major matrix over GF(p). Vectors are rows; a matrix acts on the
/// right of a row vector (v -> v*M), so composition "f then g" is F*G.
class Mat {
public:
    Mat() : rows_(0), cols_(0), p_(2) {}
    Mat(int rows, int cols, u32 p);

    static Mat identity(int n, u32 p);
    static Mat row_vector(const std::vector<u32>& v, u32 p);
    static Mat from_rows(const std::vector<std::vector<u32>>& rows, int cols, u32 p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    u32 modulus() const { return p_; }

    u32& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    u32 at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool operator==(const Mat&) const = default;

    Mat operator*(const Mat& rhs) const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    Mat scaled(u32 c) const;
    Mat transpose() const;

    bool is_zero() const;
    bool is_identity() const;

    std::vector<u32> row_copy(int r) const;
    void set_row(int r, const std::vector<u32>& v);
    Mat row(int r) const;
    Mat rows_slice(int r0, int r1) const;
    Mat cols_slice(int c0, int c1) const;

    static Mat vstack(const Mat& top, const Mat& bottom);
    static Mat hstack(const Mat& left, const Mat& right);

private:
    int rows_, cols_;
    u32 p_;
    std::vector<u32> a_;
};

struct RrefResult {
    Mat reduced;
    std::vector<int> pivots; // column index per pivot row, strictly increasing
    int rank = 0;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RrefResult rref(const Mat& m);

int rank(const Mat& m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Mat> inverse(const Mat& m);

/// Canonical subspace of GF(p)^ambient: basis rows in RREF, so equality of
/// subspaces is structural equality.
class Subspace {
public:
    Subspace(int ambient, u32 p); // zero subspace
    static Subspace span_rows(const Mat& rows);
    static Subspace full(int ambient, u32 p);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    u32 modulus() const { return p_; }
    const Mat& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains_row(const Mat& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace&) const = default;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    /// Coordinates of v in the RREF basis; throws InvalidInput if v is outside.
    std::vector<u32> coords_of(const Mat& v) const;
    std::optional<std::vector<u32>> try_coords_of(const Mat& v) const;

    /// Standard basis vectors at the non-pivot columns: coset representatives
    /// extending the subspace basis to the whole ambient space.
    Mat coset_representatives() const;

private:
    int ambient_;
    u32 p_;
    Mat basis_;
    std::vector<int> pivots_;
};

/// Data for computing in the quotient GF(p)^n / S:
/// reps: one ambient row per quotient basis vector; proj: n x q matrix with
/// quotient coordinates of v given by v*proj.
struct QuotientStructure {
    Mat reps;
    Mat proj;
};
QuotientStructure quotient_structure(const Subspace& s);

/// Affine solution set of a*x = b (column convention, b may have several columns).
struct LinearSolution {
    Mat particular;  // cols(a) x cols(b)
    Subspace kernel; // column-kernel vectors of a, stored as rows
};

/// All solutions of a*x = b, or nullopt when inconsistent.
std::optional<LinearSolution> solve_all(const Mat& a, const Mat& b);

/// Rows x with x*m = w row-wise: returns X (w.rows x m.rows) with X*m = w.
std::optional<Mat> solve_rows(const Mat& m, const Mat& w);

/// {v : v*m = 0} as a subspace of GF(p)^rows(m).
Subspace left_kernel(const Mat& m);

/// Row space of m.
Subspace row_space(const Mat& m);

/// Every subspace of GF(p)^dim exactly once, in canonical RREF form.
/// Requires p^dim <= bound.
std::vector<Subspace> enumerate_subspaces(int dim, u32 p, u64 bound = kDefaultEnumBound);

/// p^d if it stays below 2^63, otherwise nullopt.
std::optional<u64> checked_pow(u32 p, u64 d);

} // namespace gradalg

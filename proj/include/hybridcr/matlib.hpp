// Dense real symmetric matrix algebra for small information matrices:
// Jacobi eigendecomposition, SPD inversion, Schur complements, Loewner
// order verdicts, and interest/nuisance block composition.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hybridcr/errors.hpp"

namespace hybridcr {

// Plain rectangular matrix, row-major. Only the handful of products the
// bound algebra needs.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols);
    Mat(std::size_t rows, std::size_t cols, std::span<const double> row_major);
    Mat(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    Mat transposed() const;
    Mat operator*(const Mat& rhs) const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    Mat scaled(double c) const;
    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> e_;
};

// Symmetric matrix of dimension 1..8. Constructors reject entries whose
// asymmetry exceeds 1e-12 absolute and store the exactly symmetrized
// values, so operator()(i,j) == operator()(j,i) always holds bit-exactly.
class SymMat {
public:
    static constexpr std::size_t kMaxDim = 8;
    static constexpr double kSymmetryTol = 1e-12;

    explicit SymMat(std::size_t dim);  // zero matrix
    SymMat(std::size_t dim, std::span<const double> row_major);
    SymMat(std::initializer_list<std::initializer_list<double>> rows);

    static SymMat identity(std::size_t dim);
    static SymMat diagonal(std::span<const double> diag);
    static SymMat from_scalar(double v) { return SymMat{{v}}; }

    std::size_t dim() const { return dim_; }
    double operator()(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }
    // Writes both (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, double v);

    SymMat operator+(const SymMat& rhs) const;
    SymMat operator-(const SymMat& rhs) const;
    SymMat scaled(double c) const;
    double trace() const;
    double max_abs() const;
    double max_abs_diff(const SymMat& rhs) const;

    Mat as_mat() const;

private:
    std::size_t dim_ = 0;
    std::vector<double> e_;  // full row-major storage, kept exactly symmetric
};

// Symmetrizes a numerically near-symmetric product; asymmetry beyond
// `slack` (absolute, relative to the largest entry) is a logic error.
SymMat symmetrized(const Mat& m, double slack = 1e-9);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    Mat vectors;                 // column k pairs with values[k]
};

// Cyclic Jacobi rotations; deterministic for a given input.
EigenDecomposition eigen_sym(const SymMat& a);

double min_eigenvalue(const SymMat& a);
double max_abs_eigenvalue(const SymMat& a);

// Singularity policy for eigendecomposition-based inversion: a matrix is
// treated as singular when its smallest eigenvalue is <= max(abs_floor,
// rel_tol * max |eigenvalue|). Information matrices are PSD, so a
// negative eigenvalue is also singular (it can only be roundoff or a
// genuinely degenerate input).
struct InvertTol {
    double rel_tol = 1e-12;
    double abs_floor = 0.0;
};

SymMat invert_spd(const SymMat& a, InvertTol tol = {});
bool is_invertible_spd(const SymMat& a, InvertTol tol = {});

// Moore-Penrose inverse restricted to the eigenspaces above the cutoff.
SymMat pseudo_inverse(const SymMat& a, InvertTol tol = {});

// Interest/nuisance block view of a symmetric matrix:
//   [ ii  in ]
//   [ inT nn ]
struct BlockSym {
    SymMat ii;
    Mat in;
    SymMat nn;

    std::size_t dim_i() const { return ii.dim(); }
    std::size_t dim_n() const { return nn.dim(); }
};

SymMat assemble(const BlockSym& b);
BlockSym extract(const SymMat& full, std::size_t dim_i);

// ii - in * nn^{-1} * in^T. Throws SingularBlock when nn fails the
// invertibility test.
SymMat schur_complement(const BlockSym& b, InvertTol tol = {});

// Same complement with nn^{-1} replaced by the pseudo-inverse; total on
// degenerate nuisance blocks.
SymMat schur_complement_pseudo(const BlockSym& b, InvertTol tol = {});

// Loewner-order verdict for a >= b: holds iff min eig(a - b) >= -tol.
// The witness eigenvalue is reported either way.
struct PsdVerdict {
    bool holds = false;
    double min_eig = 0.0;
};

PsdVerdict psd_gap(const SymMat& a, const SymMat& b, double tol = 1e-9);

// Checks (assemble(g)^{-1})_II == schur_complement(g)^{-1} entrywise.
bool block_inverse_identity_check(const BlockSym& g, double tol);

// One (A, B) draw of the averaged-Schur inequality
//   sum_i w_i B_i^T A_i^{-1} B_i  >=  (sum w_i B_i)^T (sum w_i A_i)^{-1} (sum w_i B_i).
struct WeightedSample {
    SymMat a;  // SPD, m x m
    Mat b;     // m x n
};

PsdVerdict jensen_schur_check(std::span<const WeightedSample> samples,
                              std::span<const double> weights, double tol);

}  // namespace hybridcr

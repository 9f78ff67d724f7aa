#include "hybridcr/matlib.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace hybridcr {

namespace {

void check_dim(std::size_t dim) {
    if (dim == 0 || dim > SymMat::kMaxDim) {
        throw InvalidArgument("matrix dimension must be in [1, " +
                              std::to_string(SymMat::kMaxDim) + "], got " +
                              std::to_string(dim));
    }
}

}  // namespace

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, 0.0) {}

Mat::Mat(std::size_t rows, std::size_t cols, std::span<const double> row_major)
    : rows_(rows), cols_(cols), e_(row_major.begin(), row_major.end()) {
    if (e_.size() != rows * cols) {
        throw InvalidArgument("matrix entry count does not match shape");
    }
}

Mat::Mat(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows.begin() == rows.end() ? 0 : rows.begin()->size();
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InvalidArgument("ragged matrix initializer");
        e_.insert(e_.end(), r.begin(), r.end());
    }
}

Mat Mat::transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw DimMismatch("matrix product shape mismatch");
    Mat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const double aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += aik * rhs(k, j);
            }
        }
    }
    return out;
}

Mat Mat::operator+(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimMismatch("matrix sum shape mismatch");
    Mat out(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + rhs.e_[i];
    return out;
}

Mat Mat::operator-(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimMismatch("matrix difference shape mismatch");
    Mat out(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - rhs.e_[i];
    return out;
}

Mat Mat::scaled(double c) const {
    Mat out = *this;
    for (double& v : out.e_) v *= c;
    return out;
}

double Mat::max_abs() const {
    double m = 0.0;
    for (double v : e_) m = std::max(m, std::abs(v));
    return m;
}

SymMat::SymMat(std::size_t dim) : dim_(dim), e_(dim * dim, 0.0) { check_dim(dim); }

SymMat::SymMat(std::size_t dim, std::span<const double> row_major) : dim_(dim) {
    check_dim(dim);
    if (row_major.size() != dim * dim) {
        throw InvalidArgument("symmetric matrix entry count does not match dim^2");
    }
    e_.assign(row_major.begin(), row_major.end());
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const double upper = e_[i * dim_ + j];
            const double lower = e_[j * dim_ + i];
            if (std::abs(upper - lower) > kSymmetryTol) {
                throw InvalidArgument("matrix entries are not symmetric within 1e-12");
            }
            const double v = 0.5 * (upper + lower);
            e_[i * dim_ + j] = v;
            e_[j * dim_ + i] = v;
        }
    }
}

SymMat::SymMat(std::initializer_list<std::initializer_list<double>> rows) {
    dim_ = rows.size();
    check_dim(dim_);
    std::vector<double> flat;
    flat.reserve(dim_ * dim_);
    for (const auto& r : rows) {
        if (r.size() != dim_) throw InvalidArgument("ragged symmetric matrix initializer");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    *this = SymMat(dim_, flat);
}

SymMat SymMat::identity(std::size_t dim) {
    SymMat m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.e_[i * dim + i] = 1.0;
    return m;
}

SymMat SymMat::diagonal(std::span<const double> diag) {
    SymMat m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.e_[i * m.dim_ + i] = diag[i];
    return m;
}

void SymMat::set(std::size_t i, std::size_t j, double v) {
    e_[i * dim_ + j] = v;
    e_[j * dim_ + i] = v;
}

SymMat SymMat::operator+(const SymMat& rhs) const {
    if (dim_ != rhs.dim_) throw DimMismatch("symmetric sum dim mismatch");
    SymMat out(dim_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + rhs.e_[i];
    return out;
}

SymMat SymMat::operator-(const SymMat& rhs) const {
    if (dim_ != rhs.dim_) throw DimMismatch("symmetric difference dim mismatch");
    SymMat out(dim_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - rhs.e_[i];
    return out;
}

SymMat SymMat::scaled(double c) const {
    SymMat out = *this;
    for (double& v : out.e_) v *= c;
    return out;
}

double SymMat::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += e_[i * dim_ + i];
    return t;
}

double SymMat::max_abs() const {
    double m = 0.0;
    for (double v : e_) m = std::max(m, std::abs(v));
    return m;
}

double SymMat::max_abs_diff(const SymMat& rhs) const {
    if (dim_ != rhs.dim_) throw DimMismatch("symmetric diff dim mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < e_.size(); ++i) m = std::max(m, std::abs(e_[i] - rhs.e_[i]));
    return m;
}

Mat SymMat::as_mat() const { return Mat(dim_, dim_, e_); }

SymMat symmetrized(const Mat& m, double slack) {
    if (m.rows() != m.cols()) throw DimMismatch("cannot symmetrize a non-square matrix");
    const std::size_t n = m.rows();
    double worst = 0.0;
    SymMat out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.set(i, i, m(i, i));
        for (std::size_t j = i + 1; j < n; ++j) {
            worst = std::max(worst, std::abs(m(i, j) - m(j, i)));
            out.set(i, j, 0.5 * (m(i, j) + m(j, i)));
        }
    }
    if (worst > slack * std::max(1.0, m.max_abs())) {
        throw NumericalError("product expected to be symmetric deviates by " + std::to_string(worst));
    }
    return out;
}

EigenDecomposition eigen_sym(const SymMat& a) {
    const std::size_t n = a.dim();
    std::vector<double> w(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i * n + j] = a(i, j);
    Mat v(n, n);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) s += w[p * n + q] * w[p * n + q];
        return std::sqrt(2.0 * s);
    };

    const double scale = std::max(a.max_abs(), 1e-300);
    constexpr int kMaxSweeps = 50;
    for (int sweep = 0; sweep < kMaxSweeps && off_norm() > 1e-15 * scale; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = w[p * n + q];
                if (std::abs(apq) <= 1e-300) continue;
                const double app = w[p * n + p];
                const double aqq = w[q * n + q];
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = w[k * n + p];
                    const double akq = w[k * n + q];
                    w[k * n + p] = c * akp - s * akq;
                    w[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = w[p * n + k];
                    const double aqk = w[q * n + k];
                    w[p * n + k] = c * apk - s * aqk;
                    w[q * n + k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return w[i * n + i] < w[j * n + j];
    });

    EigenDecomposition ed;
    ed.values.resize(n);
    ed.vectors = Mat(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        ed.values[k] = w[order[k] * n + order[k]];
        for (std::size_t i = 0; i < n; ++i) ed.vectors(i, k) = v(i, order[k]);
    }
    return ed;
}

double min_eigenvalue(const SymMat& a) { return eigen_sym(a).values.front(); }

double max_abs_eigenvalue(const SymMat& a) {
    const auto ed = eigen_sym(a);
    return std::max(std::abs(ed.values.front()), std::abs(ed.values.back()));
}

namespace {

double singular_cutoff(const EigenDecomposition& ed, InvertTol tol) {
    double max_abs = 0.0;
    for (double v : ed.values) max_abs = std::max(max_abs, std::abs(v));
    return std::max(tol.abs_floor, tol.rel_tol * max_abs);
}

SymMat reciprocal_spectrum(const EigenDecomposition& ed, double cutoff, bool pseudo) {
    const std::size_t n = ed.values.size();
    Mat scaled(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = ed.values[k];
        const double inv = (pseudo && lam <= cutoff) ? 0.0 : 1.0 / lam;
        for (std::size_t i = 0; i < n; ++i) scaled(i, k) = ed.vectors(i, k) * inv;
    }
    return symmetrized(scaled * ed.vectors.transposed());
}

}  // namespace

bool is_invertible_spd(const SymMat& a, InvertTol tol) {
    const auto ed = eigen_sym(a);
    return ed.values.front() > singular_cutoff(ed, tol);
}

SymMat invert_spd(const SymMat& a, InvertTol tol) {
    const auto ed = eigen_sym(a);
    const double cutoff = singular_cutoff(ed, tol);
    if (ed.values.front() <= cutoff) {
        throw SingularBlock("matrix is singular at tolerance: min eigenvalue " +
                            std::to_string(ed.values.front()));
    }
    return reciprocal_spectrum(ed, cutoff, /*pseudo=*/false);
}

SymMat pseudo_inverse(const SymMat& a, InvertTol tol) {
    const auto ed = eigen_sym(a);
    return reciprocal_spectrum(ed, singular_cutoff(ed, tol), /*pseudo=*/true);
}

SymMat assemble(const BlockSym& b) {
    const std::size_t di = b.dim_i();
    const std::size_t dn = b.dim_n();
    if (b.in.rows() != di || b.in.cols() != dn) {
        throw DimMismatch("cross block shape does not match diagonal blocks");
    }
    const std::size_t n = di + dn;
    check_dim(n);
    std::vector<double> full(n * n);
    for (std::size_t i = 0; i < di; ++i)
        for (std::size_t j = 0; j < di; ++j) full[i * n + j] = b.ii(i, j);
    for (std::size_t i = 0; i < di; ++i)
        for (std::size_t j = 0; j < dn; ++j) {
            full[i * n + (di + j)] = b.in(i, j);
            full[(di + j) * n + i] = b.in(i, j);
        }
    for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t j = 0; j < dn; ++j) full[(di + i) * n + (di + j)] = b.nn(i, j);
    return SymMat(n, full);
}

BlockSym extract(const SymMat& full, std::size_t dim_i) {
    if (dim_i == 0 || dim_i >= full.dim()) {
        throw DimMismatch("interest block size must split the matrix");
    }
    const std::size_t dn = full.dim() - dim_i;
    SymMat ii(dim_i);
    Mat in(dim_i, dn);
    SymMat nn(dn);
    for (std::size_t i = 0; i < dim_i; ++i)
        for (std::size_t j = 0; j < dim_i; ++j) ii.set(i, j, full(i, j));
    for (std::size_t i = 0; i < dim_i; ++i)
        for (std::size_t j = 0; j < dn; ++j) in(i, j) = full(i, dim_i + j);
    for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t j = 0; j < dn; ++j) nn.set(i, j, full(dim_i + i, dim_i + j));
    return BlockSym{std::move(ii), std::move(in), std::move(nn)};
}

namespace {

SymMat complement_with(const BlockSym& b, const SymMat& nn_inv) {
    const Mat cross = b.in * nn_inv.as_mat() * b.in.transposed();
    return b.ii - symmetrized(cross);
}

}  // namespace

SymMat schur_complement(const BlockSym& b, InvertTol tol) {
    return complement_with(b, invert_spd(b.nn, tol));
}

SymMat schur_complement_pseudo(const BlockSym& b, InvertTol tol) {
    return complement_with(b, pseudo_inverse(b.nn, tol));
}

PsdVerdict psd_gap(const SymMat& a, const SymMat& b, double tol) {
    if (a.dim() != b.dim()) throw DimMismatch("psd_gap requires matching dimensions");
    const double min_eig = min_eigenvalue(a - b);
    return PsdVerdict{min_eig >= -tol, min_eig};
}

bool block_inverse_identity_check(const BlockSym& g, double tol) {
    const SymMat full_inv = invert_spd(assemble(g));
    const BlockSym inv_blocks = extract(full_inv, g.dim_i());
    const SymMat via_schur = invert_spd(schur_complement(g));
    return inv_blocks.ii.max_abs_diff(via_schur) <= tol;
}

PsdVerdict jensen_schur_check(std::span<const WeightedSample> samples,
                              std::span<const double> weights, double tol) {
    if (samples.empty() || samples.size() != weights.size()) {
        throw InvalidArgument("jensen check needs one weight per sample");
    }
    double wsum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw InvalidArgument("weights must be nonnegative");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-10) {
        throw InvalidArgument("weights must sum to 1");
    }

    const std::size_t m = samples[0].a.dim();
    const std::size_t n = samples[0].b.cols();
    SymMat lhs(n);
    SymMat mean_a(m);
    Mat mean_b(m, n);
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto& s = samples[k];
        if (s.a.dim() != m || s.b.rows() != m || s.b.cols() != n) {
            throw DimMismatch("jensen samples must share shapes");
        }
        const Mat term = s.b.transposed() * invert_spd(s.a).as_mat() * s.b;
        lhs = lhs + symmetrized(term).scaled(weights[k]);
        mean_a = mean_a + s.a.scaled(weights[k]);
        mean_b = mean_b + s.b.scaled(weights[k]);
    }
    const Mat rhs = mean_b.transposed() * invert_spd(mean_a).as_mat() * mean_b;
    return psd_gap(lhs, symmetrized(rhs), tol);
}

}  // namespace hybridcr

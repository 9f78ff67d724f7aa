// Qubit states in Bloch form: density matrices, SLD quantum Fisher
// information from Bloch-vector derivatives, and the von Neumann entropy.
#pragma once

#include <cstddef>
#include <vector>

#include "hybridcr/errors.hpp"
#include "hybridcr/matlib.hpp"

namespace hybridcr {

struct BlochVec {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double dot(const BlochVec& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm_sq() const { return dot(*this); }
    double norm() const;
};

// Columns are the Bloch-vector derivatives along each model parameter,
// interest parameters first.
struct TangentFrame {
    std::vector<BlochVec> columns;

    std::size_t size() const { return columns.size(); }
};

// Mixedness margin below which the SLD information diverges.
inline constexpr double kPureStateTol = 1e-9;
// Slack on |s| <= 1 for physical-state checks.
inline constexpr double kPhysicalTol = 1e-12;

// SLD QFIM for rho = (I + s.sigma)/2:
//   J_ij = ds_i . ds_j + (s . ds_i)(s . ds_j) / (1 - |s|^2).
// Requires |s| < 1 - 1e-9; throws PureStateBoundary otherwise.
SymMat qfim_bloch(const BlochVec& s, const TangentFrame& frame);

// rho = [[a, b_re + i*b_im], [b_re - i*b_im, d]] with the (0,1) entry
// stored, i.e. b_re + i*b_im = (x - i*y)/2.
struct DensityMatrix {
    double a = 0.0;
    double b_re = 0.0;
    double b_im = 0.0;
    double d = 0.0;
};

DensityMatrix density_matrix(const BlochVec& s);

// -(sum of lambda log lambda) in nats, lambda = (1 +- |s|)/2.
double von_neumann_entropy(const BlochVec& s);

}  // namespace hybridcr

#include "hybridcr/states.hpp"

#include <cmath>
#include <string>

namespace hybridcr {

double BlochVec::norm() const { return std::sqrt(norm_sq()); }

SymMat qfim_bloch(const BlochVec& s, const TangentFrame& frame) {
    if (frame.columns.empty()) throw InvalidArgument("tangent frame must be nonempty");
    const double r2 = s.norm_sq();
    const double margin = 1.0 - std::sqrt(r2);
    if (margin < kPureStateTol) {
        throw PureStateBoundary("state at distance " + std::to_string(margin) +
                                " from the Bloch sphere surface");
    }
    const std::size_t n = frame.size();
    SymMat j(n);
    for (std::size_t i = 0; i < n; ++i) {
        const BlochVec& di = frame.columns[i];
        const double si = s.dot(di);
        for (std::size_t k = i; k < n; ++k) {
            const BlochVec& dk = frame.columns[k];
            j.set(i, k, di.dot(dk) + si * s.dot(dk) / (1.0 - r2));
        }
    }
    return j;
}

DensityMatrix density_matrix(const BlochVec& s) {
    if (s.norm() > 1.0 + kPhysicalTol) {
        throw NonPhysical("Bloch vector norm " + std::to_string(s.norm()) + " exceeds 1");
    }
    return DensityMatrix{0.5 * (1.0 + s.z), 0.5 * s.x, -0.5 * s.y, 0.5 * (1.0 - s.z)};
}

double von_neumann_entropy(const BlochVec& s) {
    const double r = s.norm();
    if (r > 1.0 + kPhysicalTol) {
        throw NonPhysical("Bloch vector norm " + std::to_string(r) + " exceeds 1");
    }
    const double lp = 0.5 * (1.0 + std::min(r, 1.0));
    const double lm = 0.5 * (1.0 - std::min(r, 1.0));
    auto xlogx = [](double v) { return v > 0.0 ? v * std::log(v) : 0.0; };
    return -xlogx(lp) - xlogx(lm);
}

}  // namespace hybridcr

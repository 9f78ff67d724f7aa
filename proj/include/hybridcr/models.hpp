// The four built-in qubit families as Bloch-vector maps with analytic
// Jacobians and declared parameter domains.
//
// Interest parameters always occupy the leading block. The direction
// model therefore orders its coordinates (theta, phi | r) even though the
// radius comes first in the usual spherical convention.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hybridcr/domain.hpp"
#include "hybridcr/matlib.hpp"
#include "hybridcr/states.hpp"

namespace hybridcr {

enum class ModelName {
    ExtraRotation,     // s = (r sin(phi) cos(tI+tN), r sin(phi) sin(tI+tN), r cos(phi))
    AdditionalSine,    // s = (r sin(phi) cos(tI),    r sin(phi) sin(tI+tN), r cos(phi))
    AnisotropicShrink, // s = (r sin(phi) cos(tI),    r tN sin(phi) sin(tI), r cos(phi))
    Direction,         // s = r nhat(theta, phi), nuisance r
};

std::string model_name_string(ModelName name);

struct ModelSpec {
    ModelName name;
    double r = 0.5;    // fixed radius (unused by Direction)
    double phi = 0.0;  // fixed polar angle (unused by Direction)
    std::size_t d_i = 1;
    std::size_t d_n = 1;
    std::vector<Interval> domain_i;
    std::vector<Interval> domain_n;

    static ModelSpec extra_rotation(double r, double phi);
    // Nuisance domain is configurable; defaults to the full circle.
    static ModelSpec additional_sine(double r, double phi,
                                     Interval nuisance = Interval{0.0, 2.0 * kPi, false, false, true});
    static ModelSpec anisotropic_shrink(double r, double phi);
    static ModelSpec direction(double r_lo = 0.01, double r_hi = 0.99);

    static constexpr double kPi = 3.14159265358979323846;
};

struct EvalPoint {
    std::vector<double> theta_i;
    std::vector<double> theta_n;
};

// Validates against the declared domains (periodic components wrap) and
// returns the canonical in-domain point.
EvalPoint canonicalize(const ModelSpec& model, const EvalPoint& p);

BlochVec bloch(const ModelSpec& model, const EvalPoint& p);

// Analytic derivatives, interest columns first.
TangentFrame jacobian(const ModelSpec& model, const EvalPoint& p);

// qfim_bloch(bloch, jacobian) split at d_i.
BlockSym qfim(const ModelSpec& model, const EvalPoint& p);

}  // namespace hybridcr

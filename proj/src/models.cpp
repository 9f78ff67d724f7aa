#include "hybridcr/models.hpp"

#include <cmath>
#include <string>

namespace hybridcr {

namespace {

constexpr double kPi = ModelSpec::kPi;

void check_fixed(double r, double phi) {
    if (!(r > 0.0) || !(r < 1.0)) {
        throw InvalidArgument("fixed radius must lie in (0, 1), got " + std::to_string(r));
    }
    if (phi < 0.0 || phi >= 2.0 * kPi) {
        throw InvalidArgument("fixed phi must lie in [0, 2*pi), got " + std::to_string(phi));
    }
}

Interval full_circle() { return Interval{0.0, 2.0 * kPi, false, false, true}; }

}  // namespace

std::string model_name_string(ModelName name) {
    switch (name) {
        case ModelName::ExtraRotation: return "extra_rotation";
        case ModelName::AdditionalSine: return "additional_sine";
        case ModelName::AnisotropicShrink: return "anisotropic_shrink";
        case ModelName::Direction: return "direction";
    }
    return "unknown";
}

ModelSpec ModelSpec::extra_rotation(double r, double phi) {
    check_fixed(r, phi);
    ModelSpec m;
    m.name = ModelName::ExtraRotation;
    m.r = r;
    m.phi = phi;
    m.domain_i = {full_circle()};
    m.domain_n = {full_circle()};
    return m;
}

ModelSpec ModelSpec::additional_sine(double r, double phi, Interval nuisance) {
    check_fixed(r, phi);
    const double sp = std::sin(phi);
    if (r * r * (sp * sp + 1.0) > 1.0) {
        throw InvalidArgument("additional_sine requires r^2 (sin^2(phi) + 1) <= 1");
    }
    ModelSpec m;
    m.name = ModelName::AdditionalSine;
    m.r = r;
    m.phi = phi;
    m.domain_i = {full_circle()};
    m.domain_n = {nuisance};
    return m;
}

ModelSpec ModelSpec::anisotropic_shrink(double r, double phi) {
    check_fixed(r, phi);
    ModelSpec m;
    m.name = ModelName::AnisotropicShrink;
    m.r = r;
    m.phi = phi;
    m.domain_i = {full_circle()};
    m.domain_n = {Interval{0.0, 1.0, true, false, false}};
    return m;
}

ModelSpec ModelSpec::direction(double r_lo, double r_hi) {
    if (!(0.0 < r_lo) || !(r_lo < r_hi) || !(r_hi < 1.0)) {
        throw InvalidArgument("direction nuisance domain must satisfy 0 < lo < hi < 1");
    }
    ModelSpec m;
    m.name = ModelName::Direction;
    m.d_i = 2;
    m.domain_i = {Interval{0.0, kPi, false, false, false}, full_circle()};
    m.domain_n = {Interval{r_lo, r_hi, true, true, false}};
    return m;
}

EvalPoint canonicalize(const ModelSpec& model, const EvalPoint& p) {
    if (p.theta_i.size() != model.d_i || p.theta_n.size() != model.d_n) {
        throw DomainViolation("evaluation point has wrong parameter count");
    }
    EvalPoint out = p;
    for (std::size_t k = 0; k < model.d_i; ++k) {
        out.theta_i[k] = model.domain_i[k].wrap(out.theta_i[k]);
        if (!model.domain_i[k].contains(out.theta_i[k])) {
            throw DomainViolation("interest component " + std::to_string(k) + " = " +
                                  std::to_string(out.theta_i[k]) + " outside its domain");
        }
    }
    for (std::size_t k = 0; k < model.d_n; ++k) {
        out.theta_n[k] = model.domain_n[k].wrap(out.theta_n[k]);
        if (!model.domain_n[k].contains(out.theta_n[k])) {
            throw DomainViolation("nuisance component " + std::to_string(k) + " = " +
                                  std::to_string(out.theta_n[k]) + " outside its domain");
        }
    }
    return out;
}

BlochVec bloch(const ModelSpec& model, const EvalPoint& raw) {
    const EvalPoint p = canonicalize(model, raw);
    const double sp = std::sin(model.phi);
    const double cp = std::cos(model.phi);
    switch (model.name) {
        case ModelName::ExtraRotation: {
            const double psi = p.theta_i[0] + p.theta_n[0];
            return BlochVec{model.r * sp * std::cos(psi), model.r * sp * std::sin(psi),
                            model.r * cp};
        }
        case ModelName::AdditionalSine: {
            const double ti = p.theta_i[0];
            const double psi = ti + p.theta_n[0];
            return BlochVec{model.r * sp * std::cos(ti), model.r * sp * std::sin(psi),
                            model.r * cp};
        }
        case ModelName::AnisotropicShrink: {
            const double ti = p.theta_i[0];
            return BlochVec{model.r * sp * std::cos(ti),
                            model.r * p.theta_n[0] * sp * std::sin(ti), model.r * cp};
        }
        case ModelName::Direction: {
            const double th = p.theta_i[0];
            const double ph = p.theta_i[1];
            const double rr = p.theta_n[0];
            return BlochVec{rr * std::sin(th) * std::cos(ph),
                            rr * std::sin(th) * std::sin(ph), rr * std::cos(th)};
        }
    }
    throw InvalidArgument("unknown model");
}

TangentFrame jacobian(const ModelSpec& model, const EvalPoint& raw) {
    const EvalPoint p = canonicalize(model, raw);
    const double sp = std::sin(model.phi);
    TangentFrame frame;
    switch (model.name) {
        case ModelName::ExtraRotation: {
            const double psi = p.theta_i[0] + p.theta_n[0];
            const BlochVec d{-model.r * sp * std::sin(psi), model.r * sp * std::cos(psi), 0.0};
            frame.columns = {d, d};
            break;
        }
        case ModelName::AdditionalSine: {
            const double ti = p.theta_i[0];
            const double psi = ti + p.theta_n[0];
            frame.columns = {
                BlochVec{-model.r * sp * std::sin(ti), model.r * sp * std::cos(psi), 0.0},
                BlochVec{0.0, model.r * sp * std::cos(psi), 0.0}};
            break;
        }
        case ModelName::AnisotropicShrink: {
            const double ti = p.theta_i[0];
            frame.columns = {
                BlochVec{-model.r * sp * std::sin(ti),
                         model.r * p.theta_n[0] * sp * std::cos(ti), 0.0},
                BlochVec{0.0, model.r * sp * std::sin(ti), 0.0}};
            break;
        }
        case ModelName::Direction: {
            const double th = p.theta_i[0];
            const double ph = p.theta_i[1];
            const double rr = p.theta_n[0];
            const double st = std::sin(th), ct = std::cos(th);
            const double sph = std::sin(ph), cph = std::cos(ph);
            frame.columns = {BlochVec{rr * ct * cph, rr * ct * sph, -rr * st},
                             BlochVec{-rr * st * sph, rr * st * cph, 0.0},
                             BlochVec{st * cph, st * sph, ct}};
            break;
        }
    }
    return frame;
}

BlockSym qfim(const ModelSpec& model, const EvalPoint& p) {
    const SymMat full = qfim_bloch(bloch(model, p), jacobian(model, p));
    return extract(full, model.d_i);
}

}  // namespace hybridcr

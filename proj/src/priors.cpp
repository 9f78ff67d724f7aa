#include "hybridcr/priors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hybridcr {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Modified Bessel function of the first kind, order 0, by the ascending
// series with iteratively built terms. Adequate and deterministic for the
// concentration range the validator admits (kappa <= 700).
double bessel_i0(double kappa) {
    const double q = 0.25 * kappa * kappa;
    double term = 1.0;
    double sum = 1.0;
    for (int m = 1; m < 1000; ++m) {
        term *= q / (static_cast<double>(m) * static_cast<double>(m));
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return sum;
}

}  // namespace

QuadratureRule QuadratureRule::gauss_legendre(std::size_t n, double lo, double hi) {
    if (n == 0) throw InvalidArgument("quadrature needs at least one node");
    if (!(hi > lo)) throw InvalidArgument("quadrature interval is empty");
    QuadratureRule rule;
    rule.scheme = QuadScheme::GaussLegendre;
    rule.lo = lo;
    rule.hi = hi;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    // Roots of P_n by Newton iteration from the Chebyshev-like seed.
    for (std::size_t k = 0; k < (n + 1) / 2; ++k) {
        double x = std::cos(kPi * (static_cast<double>(k) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t j = 2; j <= n; ++j) {
                const double jj = static_cast<double>(j);
                const double p2 = ((2.0 * jj - 1.0) * x * p1 - (jj - 1.0) * p0) / jj;
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        rule.nodes[k] = mid - half * x;
        rule.nodes[n - 1 - k] = mid + half * x;
        rule.weights[k] = w * half;
        rule.weights[n - 1 - k] = w * half;
    }
    return rule;
}

QuadratureRule QuadratureRule::periodic_trapezoid(std::size_t n, double lo, double hi) {
    if (n == 0) throw InvalidArgument("quadrature needs at least one node");
    if (!(hi > lo)) throw InvalidArgument("quadrature interval is empty");
    QuadratureRule rule;
    rule.scheme = QuadScheme::PeriodicTrapezoid;
    rule.lo = lo;
    rule.hi = hi;
    const double h = (hi - lo) / static_cast<double>(n);
    rule.nodes.resize(n);
    rule.weights.assign(n, h);
    for (std::size_t k = 0; k < n; ++k) rule.nodes[k] = lo + h * static_cast<double>(k);
    return rule;
}

QuadratureRule QuadratureRule::doubled() const {
    return scheme == QuadScheme::GaussLegendre ? gauss_legendre(2 * size(), lo, hi)
                                               : periodic_trapezoid(2 * size(), lo, hi);
}

NuisancePrior::NuisancePrior(PriorKind kind, Interval domain, double p1, double p2)
    : kind_(kind), domain_(domain), p1_(p1), p2_(p2) {
    if (!(domain.hi > domain.lo)) throw InvalidArgument("prior domain is empty");
    integ_lo_ = domain.lo;
    integ_hi_ = domain.hi;
    if (!domain.periodic) {
        if (domain.open_lo) integ_lo_ += kClipEpsilon;
        if (domain.open_hi) integ_hi_ -= kClipEpsilon;
    }
}

NuisancePrior NuisancePrior::uniform(Interval domain) {
    NuisancePrior p(PriorKind::Uniform, domain, 0.0, 0.0);
    p.norm_ = 1.0 / (p.integ_hi_ - p.integ_lo_);
    p.validate_normalization();
    return p;
}

NuisancePrior NuisancePrior::truncated_gaussian(Interval domain, double mu, double sigma) {
    if (!(sigma > 0.0)) throw InvalidArgument("truncated gaussian needs sigma > 0");
    NuisancePrior p(PriorKind::TruncatedGaussian, domain, mu, sigma);
    const double root_half = 1.0 / (sigma * std::sqrt(2.0));
    const double mass = sigma * std::sqrt(0.5 * kPi) *
                        (std::erf((p.integ_hi_ - mu) * root_half) -
                         std::erf((p.integ_lo_ - mu) * root_half));
    if (!(mass > 0.0)) throw InvalidArgument("truncated gaussian has no mass on the domain");
    p.norm_ = 1.0 / mass;
    p.validate_normalization();
    return p;
}

NuisancePrior NuisancePrior::von_mises(Interval domain, double mu, double kappa) {
    if (kappa < 0.0 || kappa > 700.0) {
        throw InvalidArgument("von Mises concentration must lie in [0, 700]");
    }
    NuisancePrior p(PriorKind::VonMises, domain, mu, kappa);
    p.omega_ = 2.0 * kPi / domain.length();
    p.norm_ = 1.0 / (domain.length() * bessel_i0(kappa));
    p.validate_normalization();
    return p;
}

NuisancePrior NuisancePrior::raised_cosine(Interval domain, double center, double width) {
    if (!(width > 0.0)) throw InvalidArgument("raised cosine needs width > 0");
    if (center - width < domain.lo - 1e-12 || center + width > domain.hi + 1e-12) {
        throw InvalidArgument("raised cosine support exceeds the prior domain");
    }
    NuisancePrior p(PriorKind::RaisedCosine, domain, center, width);
    p.norm_ = 1.0 / width;  // density = cos^2(pi (x-c) / (2 w)) / w
    p.validate_normalization();
    return p;
}

double NuisancePrior::density(double x) const {
    switch (kind_) {
        case PriorKind::Uniform:
            return norm_;
        case PriorKind::TruncatedGaussian: {
            const double t = (x - p1_) / p2_;
            return norm_ * std::exp(-0.5 * t * t);
        }
        case PriorKind::VonMises:
            return norm_ * std::exp(p2_ * std::cos(omega_ * (x - p1_)));
        case PriorKind::RaisedCosine: {
            if (std::abs(x - p1_) >= p2_) return 0.0;
            const double c = std::cos(0.5 * kPi * (x - p1_) / p2_);
            return norm_ * c * c;
        }
    }
    return 0.0;
}

double NuisancePrior::log_density_derivative(double x) const {
    switch (kind_) {
        case PriorKind::Uniform:
            return 0.0;
        case PriorKind::TruncatedGaussian:
            return -(x - p1_) / (p2_ * p2_);
        case PriorKind::VonMises:
            return -p2_ * omega_ * std::sin(omega_ * (x - p1_));
        case PriorKind::RaisedCosine:
            if (std::abs(x - p1_) >= p2_) return 0.0;
            return -(kPi / p2_) * std::tan(0.5 * kPi * (x - p1_) / p2_);
    }
    return 0.0;
}

QuadratureRule NuisancePrior::default_rule() const {
    return domain_.periodic
               ? QuadratureRule::periodic_trapezoid(128, integ_lo_, integ_hi_)
               : QuadratureRule::gauss_legendre(64, integ_lo_, integ_hi_);
}

QuadratureRule NuisancePrior::rule_with_nodes(std::size_t n) const {
    return domain_.periodic ? QuadratureRule::periodic_trapezoid(n, integ_lo_, integ_hi_)
                            : QuadratureRule::gauss_legendre(n, integ_lo_, integ_hi_);
}

void NuisancePrior::validate_normalization() const {
    const QuadratureRule rule = default_rule();
    double mass = 0.0;
    double peak = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k) {
        const double d = density(rule.nodes[k]);
        mass += rule.weights[k] * d;
        peak = std::max(peak, d);
    }
    if (std::abs(mass - 1.0) > 1e-8) {
        throw InvalidArgument("prior density integrates to " + std::to_string(mass) +
                              ", not 1, on its domain");
    }
    if (domain_.periodic &&
        std::abs(density(domain_.lo) - density(domain_.hi)) > 1e-8 * std::max(peak, 1.0)) {
        throw InvalidArgument("periodic prior density does not match at the wrap point");
    }
}

namespace {

double fisher_with(const NuisancePrior& prior, const QuadratureRule& rule) {
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k) {
        const double x = rule.nodes[k];
        const double score = prior.log_density_derivative(x);
        acc += rule.weights[k] * score * score * prior.density(x);
    }
    return acc;
}

}  // namespace

SymMat prior_fisher(const NuisancePrior& prior, const QuadratureRule& rule) {
    const double coarse = fisher_with(prior, rule);
    const double fine = fisher_with(prior, rule.doubled());
    const double rel = std::abs(fine - coarse) / std::max(std::abs(fine), 1e-12);
    if (rel >= 1e-4) {
        throw QuadratureDivergence("prior Fisher information moved by relative " +
                                   std::to_string(rel) + " under node doubling");
    }
    return SymMat::from_scalar(fine);
}

SymMat expect(const NuisancePrior& prior, const QuadratureRule& rule,
              const std::function<SymMat(double)>& f) {
    if (rule.size() == 0) throw InvalidArgument("empty quadrature rule");
    SymMat acc = f(rule.nodes[0]).scaled(rule.weights[0] * prior.density(rule.nodes[0]));
    for (std::size_t k = 1; k < rule.size(); ++k) {
        acc = acc + f(rule.nodes[k]).scaled(rule.weights[k] * prior.density(rule.nodes[k]));
    }
    return acc;
}

double expect_scalar(const NuisancePrior& prior, const QuadratureRule& rule,
                     const std::function<double(double)>& f) {
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k) {
        acc += rule.weights[k] * prior.density(rule.nodes[k]) * f(rule.nodes[k]);
    }
    return acc;
}

}  // namespace hybridcr

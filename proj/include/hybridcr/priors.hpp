// Nuisance priors on a scalar parameter, their Fisher information, and
// quadrature over the nuisance domain.
//
// Open non-periodic endpoints are clipped inward by kClipEpsilon before
// integration; densities are normalized over the clipped interval so
// expectations of the constant 1 stay exact. A von Mises prior on a
// non-periodic interval is interpreted circularly: its angle is rescaled
// so that one period spans the interval.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hybridcr/domain.hpp"
#include "hybridcr/errors.hpp"
#include "hybridcr/matlib.hpp"

namespace hybridcr {

inline constexpr double kClipEpsilon = 1e-9;

enum class PriorKind { Uniform, TruncatedGaussian, VonMises, RaisedCosine };

enum class QuadScheme { GaussLegendre, PeriodicTrapezoid };

struct QuadratureRule {
    QuadScheme scheme;
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;  // positive, sum to hi - lo

    std::size_t size() const { return nodes.size(); }
    QuadratureRule doubled() const;

    static QuadratureRule gauss_legendre(std::size_t n, double lo, double hi);
    static QuadratureRule periodic_trapezoid(std::size_t n, double lo, double hi);
};

class NuisancePrior {
public:
    static NuisancePrior uniform(Interval domain);
    static NuisancePrior truncated_gaussian(Interval domain, double mu, double sigma);
    static NuisancePrior von_mises(Interval domain, double mu, double kappa);
    static NuisancePrior raised_cosine(Interval domain, double center, double width);

    PriorKind kind() const { return kind_; }
    const Interval& domain() const { return domain_; }
    double integration_lo() const { return integ_lo_; }
    double integration_hi() const { return integ_hi_; }

    double density(double x) const;
    double log_density_derivative(double x) const;

    // 64-node Gauss-Legendre on bounded domains, 128-node trapezoid on
    // periodic ones.
    QuadratureRule default_rule() const;
    QuadratureRule rule_with_nodes(std::size_t n) const;

private:
    NuisancePrior(PriorKind kind, Interval domain, double p1, double p2);
    void validate_normalization() const;

    PriorKind kind_;
    Interval domain_;
    double integ_lo_;
    double integ_hi_;
    double p1_ = 0.0;  // mu / center
    double p2_ = 0.0;  // sigma / kappa / width
    double norm_ = 1.0;
    double omega_ = 0.0;  // von Mises angular frequency 2*pi / domain length
};

// Fisher information of the prior, computed with `rule` and verified by
// node doubling. Throws QuadratureDivergence when doubling moves the
// result by >= 1e-4 relative.
SymMat prior_fisher(const NuisancePrior& prior, const QuadratureRule& rule);

// Prior expectation of a matrix-valued function of the nuisance.
SymMat expect(const NuisancePrior& prior, const QuadratureRule& rule,
              const std::function<SymMat(double)>& f);

double expect_scalar(const NuisancePrior& prior, const QuadratureRule& rule,
                     const std::function<double(double)>& f);

}  // namespace hybridcr

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divkit/errors.hpp"
#include "divkit/interval.hpp"

namespace divkit {

using ScalarFn = std::function<double(double)>;

/// A strictly convex differentiable scalar function F together with its
/// derivative and (optionally analytic) convex conjugate F*.
///
/// Every divergence in this library is built from one of these. When no
/// analytic conjugate is supplied, F*(y) and (F*)'(y) fall back to numeric
/// inversion of F', which is unconditionally convergent because F' is
/// strictly increasing.
class ConvexGenerator {
public:
    ConvexGenerator(std::string name, Interval domain, ScalarFn f, ScalarFn f_prime,
                    Interval conjugate_domain, std::optional<ScalarFn> conjugate = std::nullopt,
                    std::optional<ScalarFn> conjugate_prime = std::nullopt);

    const std::string& name() const { return name_; }
    const Interval& domain() const { return domain_; }
    const Interval& conjugate_domain() const { return conjugate_domain_; }
    bool has_analytic_conjugate() const { return conjugate_.has_value(); }

    /// F(x). Throws DomainError outside the open domain.
    double value(double x) const;

    /// F'(x), the dual coordinate of x.
    double derivative(double x) const;

    /// F*(y). Analytic form when registered, otherwise x̂·y − F(x̂) with
    /// x̂ = invert_derivative(y).
    double conjugate_value(double y) const;

    /// (F*)'(y): the unique x with F'(x) = y.
    double conjugate_derivative(double y) const;

    /// Solves F'(x) = y by geometric bracket expansion from an interior seed
    /// followed by bisection with a safeguarded Newton refinement. The result
    /// satisfies |F'(x) − y| <= max(1e-12, 1e-12·|y|).
    double invert_derivative(double y) const;

private:
    void require_in_domain(double x) const;
    void require_in_conjugate_domain(double y) const;

    std::string name_;
    Interval domain_;
    ScalarFn f_;
    ScalarFn f_prime_;
    std::optional<ScalarFn> conjugate_;
    std::optional<ScalarFn> conjugate_prime_;
    Interval conjugate_domain_;
};

/// Swaps the roles of F and F*: the returned generator evaluates F* as its
/// primal function and F as its conjugate (biduality F** = F).
ConvexGenerator dual_generator(const ConvexGenerator& g);

struct ValidationCheck {
    std::string name;
    bool passed = true;
    double worst_residual = 0.0;
    double worst_point = 0.0;
};

struct ValidationReport {
    bool passed = true;
    std::vector<ValidationCheck> checks;

    const ValidationCheck* find(const std::string& name) const;
};

/// Samples a deterministic grid inside the domain and checks strict
/// monotonicity of F', F' against a centered finite difference of F,
/// the Young equality F(x) + F*(F'(x)) = x·F'(x), and the round trip
/// (F*)'(F'(x)) = x. Failures are reported, never thrown.
ValidationReport validate_generator(const ConvexGenerator& g, int samples);

/// Immutable-after-construction name -> generator mapping.
class GeneratorRegistry {
public:
    /// Validates the generator on a small grid before accepting it.
    void add(ConvexGenerator g);

    /// Registers without validation. Exists so tests and the CLI failure
    /// path can inject deliberately broken generators.
    void add_unchecked(ConvexGenerator g);

    bool contains(const std::string& name) const;
    const ConvexGenerator& get(const std::string& name) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, ConvexGenerator> generators_;
};

/// Registry with the builtin generators:
///   neg_entropy   F(x) = x log x   on (0, inf), F*(y) = exp(y-1)
///   burg_entropy  F(x) = -log x    on (0, inf), F*(y) = -log(-y) - 1
///   half_square   F(x) = x^2/2     on R,        F*(y) = y^2/2
/// plus "<name>_numeric" clones with the analytic conjugate fields absent,
/// which exercise the numeric fallback path.
GeneratorRegistry builtin_generators();

} // namespace divkit

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divkit/divergence.hpp"

namespace divkit {

enum class Theorem {
    basic,             // weighted sum of symmetric Bregman divergences to the centroid
    symmetric_bregman, // a(1-a)·B_sym(P,Q) split into Jensen + conjugate Jensen + Bregman
    f_divergence,      // (1/S) sum F'(p/q)(p-q) split into D_F + D̂_F + B_F(1, ĉ)
};

std::string theorem_name(Theorem t);
Theorem theorem_from_name(const std::string& name);

struct InequalityCheck {
    std::string name;
    double lhs_value = 0.0;
    double rhs_value = 0.0;
    bool holds = true;
    double margin = 0.0; // lhs - rhs; violation only below -1e-12
};

/// Auditable record of one decomposition identity:
/// lhs = jensen_term + conjugate_jensen_term + bregman_term + residual.
struct DecompositionReport {
    Theorem theorem = Theorem::basic;
    double lhs = 0.0;
    std::optional<double> lhs_alternate; // second form of the basic theorem
    double jensen_term = 0.0;
    double conjugate_jensen_term = 0.0;
    double bregman_term = 0.0;
    double residual = 0.0;
    std::vector<double> centroid;             // c or C
    std::vector<double> dual_centroid_primal; // ĉ or Ĉ, pulled back to primal coordinates
    std::vector<InequalityCheck> inequality_checks;

    double term_sum() const { return jensen_term + conjugate_jensen_term + bregman_term; }

    /// |residual| <= tol·max(1, |lhs|) and every inequality holds.
    bool within_tolerance(double tol) const;
};

/// Weighted sum of 1-d symmetric Bregman divergences to the centroid,
/// decomposed into Jensen + conjugate Jensen + B_F(c, ĉ). Also evaluates the
/// equivalent form sum_v a_v F'(p_v)(p_v - c) into lhs_alternate.
DecompositionReport decompose_basic(const ConvexGenerator& g, const WeightVector& w,
                                    const PointVector& points);

/// a(1-a)·B_sym(P,Q) = J_{F,a}(P,Q) + J_{F*,a}(P*,Q*) + B_F(C, Ĉ), with the
/// three "lhs >= term" bounds recorded as inequality checks.
DecompositionReport decompose_symmetric_bregman(const ConvexGenerator& g, double alpha,
                                                const PointVector& p, const PointVector& q);

/// (1/S) sum_i F'(p_i/q_i)(p_i - q_i) = D_F(P,Q) + D̂_F(P,Q) + B_F(1, ĉ)
/// for strictly positive P, Q of equal mass S = sum q. The mass precondition
/// is enforced (MassMismatchError), never silently normalized.
DecompositionReport decompose_f_divergence(const ConvexGenerator& g, const PointVector& p,
                                           const PointVector& q);

struct BoundCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = true;
};

/// chi^2_N(P||Q) >= exp(KL(Q||P)) - 1 for unit-mass P, Q.
BoundCheck chi_square_kl_bound(const PointVector& p, const PointVector& q);

/// (1/4)·J(P,Q) >= JS(P,Q).
BoundCheck lin_inequality_check(const PointVector& p, const PointVector& q);

} // namespace divkit

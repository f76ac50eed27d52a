#pragma once

#include "divkit/generator.hpp"
#include "divkit/types.hpp"

namespace divkit {

/// B_F(P,Q) = sum_i [F(p_i) - F(q_i) - F'(q_i)(p_i - q_i)].
DivergenceValue bregman(const ConvexGenerator& g, const PointVector& p, const PointVector& q);

/// B_F(P,Q) + B_F(Q,P) = sum_i (F'(p_i) - F'(q_i))(p_i - q_i).
DivergenceValue symmetric_bregman(const ConvexGenerator& g, const PointVector& p,
                                  const PointVector& q);

/// Coordinatewise dual map: (F'(p_1), ..., F'(p_M)).
PointVector dual_map(const ConvexGenerator& g, const PointVector& p);

/// Jensen gap of N weighted scalar points: sum_v a_v F(p_v) - F(sum_v a_v p_v).
DivergenceValue jensen_multi(const ConvexGenerator& g, const WeightVector& w,
                             const PointVector& points);

/// Jensen gap of F* at the dual coordinates of the points:
/// sum_v a_v F*(F'(p_v)) - F*(sum_v a_v F'(p_v)).
/// Takes primal points; the dual map is applied internally so that the
/// point/dual pairing can never be inconsistent.
DivergenceValue conjugate_jensen_multi(const ConvexGenerator& g, const WeightVector& w,
                                       const PointVector& points);

/// Coordinatewise two-point Jensen divergence summed over i, alpha in (0,1).
DivergenceValue jensen_pair(const ConvexGenerator& g, double alpha, const PointVector& p,
                            const PointVector& q);

/// Coordinatewise two-point conjugate Jensen divergence summed over i.
DivergenceValue conjugate_jensen_pair(const ConvexGenerator& g, double alpha,
                                      const PointVector& p, const PointVector& q);

namespace detail {

// Scalar cores shared by the vector operations and the decomposition module.
double bregman_scalar(const ConvexGenerator& g, double p, double q);
double symmetric_bregman_scalar(const ConvexGenerator& g, double p, double q);
double jensen_pair_scalar(const ConvexGenerator& g, double alpha, double p, double q);
double conjugate_jensen_pair_scalar(const ConvexGenerator& g, double alpha, double p, double q);

void require_same_length(const PointVector& p, const PointVector& q);
void require_in_domain(const ConvexGenerator& g, const PointVector& p, const char* label);
void require_alpha_open_unit(double alpha);

} // namespace detail

} // namespace divkit

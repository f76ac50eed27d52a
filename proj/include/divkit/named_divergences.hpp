#pragma once

#include "divkit/types.hpp"

namespace divkit {

/// Extended (unnormalized) Kullback-Leibler divergence:
/// -sum p_i + sum q_i + sum p_i log(p_i/q_i). Reduces to the standard KL on
/// equal-mass inputs; the extended terms matter because the geometric mixture
/// in geometric_mixture_kl is sub-normalized.
DivergenceValue kl(const PointVector& p, const PointVector& q);

/// Jeffreys J-divergence: kl(p,q) + kl(q,p).
DivergenceValue jeffreys(const PointVector& p, const PointVector& q);

/// Skew Jensen-Shannon: a·kl(p,c) + (1-a)·kl(q,c), c = a·p + (1-a)·q.
DivergenceValue js_alpha(double alpha, const PointVector& p, const PointVector& q);

/// Squared Hellinger distance: (1/2) sum (sqrt(p_i) - sqrt(q_i))^2.
DivergenceValue hellinger_sq(const PointVector& p, const PointVector& q);

/// Amari alpha-divergence, alpha in (0,1):
/// (1/(a(a-1))) (sum p^a q^(1-a) - a sum p - (1-a) sum q).
DivergenceValue alpha_divergence(double alpha, const PointVector& p, const PointVector& q);

/// kl of the coordinatewise arithmetic mixture against the coordinatewise
/// geometric mixture: KL(a·P + (1-a)·Q || P^a Q^(1-a)).
DivergenceValue geometric_mixture_kl(double alpha, const PointVector& p, const PointVector& q);

/// Neyman chi-square divergence: sum (p_i - q_i)^2 / p_i.
DivergenceValue neyman_chi_square(const PointVector& p, const PointVector& q);

/// Itakura-Saito divergence of two positive scalars: p/q - log(p/q) - 1.
DivergenceValue itakura_saito(double p, double q);

} // namespace divkit

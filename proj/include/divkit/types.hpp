#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "divkit/errors.hpp"

namespace divkit {

/// Ordered list of real coordinates. Finite and non-empty by construction;
/// membership in a generator's domain is checked by each operation.
class PointVector {
public:
    PointVector(std::vector<double> values);
    PointVector(std::initializer_list<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    /// Sum of coordinates (the "mass" of a histogram-like vector).
    double mass() const;

private:
    std::vector<double> values_;
};

/// Positive weights summing to 1. Input must already sum to 1 within 1e-12;
/// the stored weights are then renormalized by the computed sum so that
/// user-entered decimals carry no drift.
class WeightVector {
public:
    WeightVector(std::vector<double> weights);
    WeightVector(std::initializer_list<double> weights);

    /// Equal weights 1/n.
    static WeightVector uniform(std::size_t n);

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<double>& values() const { return weights_; }

private:
    std::vector<double> weights_;
};

/// Non-negative divergence value tagged with its provenance.
/// generator_name is empty for closed-form (named) divergences.
struct DivergenceValue {
    double value = 0.0;
    std::string divergence_name;
    std::string generator_name;
};

/// Clamps raw results in [-1e-12, 0] to exactly 0; anything below the slack
/// violates non-negativity and raises NumericalError.
double clamp_nonnegative(double raw, const std::string& what);

DivergenceValue make_divergence_value(double raw, std::string divergence_name,
                                      std::string generator_name);

} // namespace divkit

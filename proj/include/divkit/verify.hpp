#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divkit/generator.hpp"

namespace divkit {

/// Deterministic pseudo-random source for the verification sweeps. Wraps a
/// fixed 64-bit generator and derives uniforms by mantissa scaling, so the
/// stream is identical across platforms and standard libraries.
class SweepRng {
public:
    explicit SweepRng(std::uint64_t seed);

    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);   // [lo, hi)
    int uniform_int(int lo, int hi);        // inclusive bounds

private:
    std::uint64_t next_word();
    std::uint64_t state_[4];
};

struct PropertyResult {
    std::string name;
    int trials = 0;
    double worst_residual = 0.0;
    double tolerance = 0.0;
    bool passed = true;
    std::string worst_case; // input echo for reproduction
};

struct VerificationReport {
    std::string generator_name;
    std::uint64_t seed = 0;
    int trials = 0;
    int max_dim = 0;
    bool passed = true;
    std::vector<PropertyResult> properties;
};

/// Runs the full randomized invariant suite for one generator: the Young
/// equality and derivative round trip, the dual-Bregman symmetry, the
/// Jensen/Bregman averaging identities, the three decomposition identities
/// with their corollary bounds, the Jeffreys-vs-Jensen-Shannon bound, and the
/// chi-square/KL exponential bound.
VerificationReport run_verification(const GeneratorRegistry& registry,
                                    const std::string& generator_name, std::uint64_t seed,
                                    int trials, int max_dim);

} // namespace divkit

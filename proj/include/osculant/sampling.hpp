#pragma once

#include "osculant/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <random>

namespace osc {

/// How "general point" is realized: `samples` integer points drawn uniformly
/// from [-height_bound, height_bound]^n, with max-rank aggregation.
struct SamplePlan {
    std::uint64_t seed = 42;
    std::size_t samples = 5;
    std::int64_t height_bound = 1000;
};

/// Independent random streams derived from one seed. Each consumer draws
/// from its own stream so that adding a draw in one place never shifts the
/// points seen elsewhere.
enum class Stream : std::uint64_t {
    points = 1,
    weights = 2,
    lemma_trials = 3,
    fiber_points = 4,
    transforms = 5,
    lemma_weights = 6,
};

/// Deterministic generator for draw number `index` of `stream` under `seed`.
/// Bounded draws use rejection on the raw 64-bit output, so sequences do not
/// depend on the standard library's distribution implementations.
class RandomSource {
public:
    RandomSource(std::uint64_t seed, Stream stream, std::uint64_t index);

    /// Uniform integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi);
    /// numerator in [-height, height], denominator in [1, height].
    Rational rational(std::int64_t height);
    Vector integer_point(std::size_t n, std::int64_t bound);
    Vector rational_vector(std::size_t n, std::int64_t height);

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

} // namespace osc

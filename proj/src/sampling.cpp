#include "osculant/sampling.hpp"

#include <stdexcept>

namespace osc {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomSource::RandomSource(std::uint64_t seed, Stream stream, std::uint64_t index) {
    std::uint64_t state = splitmix64(seed);
    state = splitmix64(state ^ splitmix64(static_cast<std::uint64_t>(stream)));
    state = splitmix64(state ^ index);
    engine_.seed(state);
}

std::int64_t RandomSource::integer(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty integer range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(engine_());
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range + 1) % range;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw > limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % range);
}

Rational RandomSource::rational(std::int64_t height) {
    if (height < 1) throw std::invalid_argument("height must be positive");
    const long num = static_cast<long>(integer(-height, height));
    const long den = static_cast<long>(integer(1, height));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Vector RandomSource::integer_point(std::size_t n, std::int64_t bound) {
    Vector out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) out.emplace_back(static_cast<long>(integer(-bound, bound)));
    return out;
}

Vector RandomSource::rational_vector(std::size_t n, std::int64_t height) {
    Vector out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) out.push_back(rational(height));
    return out;
}

} // namespace osc

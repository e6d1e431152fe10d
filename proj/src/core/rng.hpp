#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace sucktac::rng {

// splitmix64; used both as a sequential stream and as a stateless hash so
// that generated fields are identical regardless of evaluation order.
inline uint64_t mix(uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct Stream {
    uint64_t state;
    explicit Stream(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // uniform in [0,1)
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // bounded integer in [0,n); n > 0
    uint64_t below(uint64_t n) { return next() % n; }
    double normal(double sigma = 1.0) {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }
};

// Fan a base seed out to per-item seeds; documented splitting rule for
// reproducible datasets (item results do not depend on generation order).
inline uint64_t derive(uint64_t base, uint64_t index) {
    return mix(base ^ (0x9E3779B97F4A7C15ull * (index + 1)));
}

// stateless lattice hash -> uniform [0,1)
inline double hash01(int64_t ix, int64_t iy, uint64_t seed) {
    uint64_t h = uint64_t(ix) * 0x9E3779B97F4A7C15ull;
    h ^= uint64_t(iy) * 0xBF58476D1CE4E5B9ull;
    h ^= seed;
    return double(mix(h) >> 11) * 0x1.0p-53;
}

inline double hash_normal(int64_t ix, int64_t iy, uint64_t seed) {
    double u1 = hash01(ix, iy, seed);
    double u2 = hash01(ix, iy, mix(seed ^ 0xD1B54A32D192ED03ull));
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

template <typename T>
void shuffle(std::vector<T>& v, Stream& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = size_t(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace sucktac::rng

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace cycldpc {

// splitmix64 finalizer
inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Pure function of (seed, stream, frame): frames can be simulated in any
// order or concurrently and still draw identical noise.
inline uint64_t stream_key(uint64_t seed, uint64_t stream, uint64_t frame) {
    uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ull);
    h = mix64(h ^ (stream + 0xbf58476d1ce4e5b9ull));
    h = mix64(h ^ (frame + 0x94d049bb133111ebull));
    return h;
}

class SplitMix64 {
public:
    explicit SplitMix64(uint64_t state) : state_(state) {}
    SplitMix64(uint64_t seed, uint64_t stream, uint64_t frame) : state_(stream_key(seed, stream, frame)) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        return mix64(z);
    }

    // uniform in (0, 1]; never 0, so it is safe under log()
    double uniform01() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    // standard normal via Box-Muller; the second draw of each pair is cached
    double normal() {
        if (have_) {
            have_ = false;
            return cached_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        double rad = std::sqrt(-2.0 * std::log(u1));
        double ang = 2.0 * std::numbers::pi * u2;
        cached_ = rad * std::sin(ang);
        have_ = true;
        return rad * std::cos(ang);
    }

private:
    uint64_t state_;
    bool have_ = false;
    double cached_ = 0.0;
};

} // namespace cycldpc

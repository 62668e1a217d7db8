// rng.hpp - portable deterministic random numbers (splitmix64 + Box-Muller).
// Identical streams on every platform for a given seed; std::mt19937 and the
// std distributions are avoided on purpose since libstdc++/libc++ disagree.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace xxzstrip {

inline std::uint64_t splitmix64_step(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent stream label for (seed, index) pairs.
inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a;
    const std::uint64_t h = splitmix64_step(x);
    x = h ^ (b * 0xd1342543de82ef95ULL + 0x9e3779b97f4a7c15ULL);
    return splitmix64_step(x);
}

class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64_step(state_); }

    // uniform in [0, 1), 53-bit resolution
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - next_double();   // (0, 1], keeps log finite
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace xxzstrip

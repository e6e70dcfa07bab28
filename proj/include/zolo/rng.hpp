#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace zolo {

// Deterministic random source for reproducible ensembles.
//
// The generator is mt19937_64 with explicit value mappings: uniforms take the
// top 53 bits, normals come from a Box-Muller pair.  std::uniform_real_distribution
// and std::normal_distribution are implementation-defined, so they are avoided;
// the streams produced here are identical on every platform, which is what makes
// seeded CSV output byte-stable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    static constexpr const char* algorithm_name = "mt19937_64+boxmuller";

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0,1) with 53-bit resolution.
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Standard normal via Box-Muller; consumes two uniforms per pair.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform01(); // (0,1]: keeps log(u1) finite
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Derives an independent-looking stream for ensemble member `index` from a
// base seed (splitmix64 finalizer, so adjacent indices decorrelate).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace zolo

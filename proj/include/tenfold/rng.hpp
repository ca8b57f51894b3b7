#pragma once

#include <cstdint>
#include <string>

#include "tenfold/types.hpp"

namespace tenfold {

// Splittable counter-style stream: the state walk is SplitMix64, normals
// come from Box-Muller on 53-bit uniforms. Identical (seed, stream_id)
// gives bit-identical sequences on every platform; distinct stream_ids
// give independent streams suitable for parallel sampling.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed), stream_id_(stream_id) {
        state_ = mix(seed ^ mix(stream_id + 0x9e3779b97f4a7c15ULL));
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    // Algorithm identifier pinned into run manifests.
    static std::string algorithm() { return "splitmix64+box-muller"; }

    RngStream derive(std::uint64_t stream_id) const {
        return RngStream(seed_, stream_id);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // uniform in (0, 1)
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    Complex complex_normal() {  // unit-variance real and imaginary parts
        double re = normal();
        double im = normal();
        return Complex(re, im);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// i.i.d. N(0, sigma^2) draws
RealVector gaussian_real(RngStream& rng, Eigen::Index n, double sigma);

}  // namespace tenfold

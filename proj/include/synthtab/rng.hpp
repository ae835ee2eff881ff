#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace synthtab {

// Combines seeds/indices into a new seed (splitmix64 finalizer). Used to
// derive per-batch, per-split and per-run sub-seeds from one root seed.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d);

// Standard normal CDF and its inverse (Wichura's AS241, double precision).
double norm_cdf(double x);
double norm_ppf(double p);

// Seeded RNG with explicitly implemented distributions so that streams are
// identical across standard library implementations (std::mt19937_64 output
// is specified by the standard; the std distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0,1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0,1), never exactly 0 or 1; safe input for norm_ppf.
    double uniform_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double normal() { return norm_ppf(uniform_open()); }

    // Unbiased uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace synthtab

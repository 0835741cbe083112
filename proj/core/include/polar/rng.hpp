// Reproducible random number generation for Monte Carlo runs.
//
// Noise must be bit-identical for a given (seed, frame index) no matter how
// frames are scheduled across workers, so every frame gets its own engine
// seeded through a splitmix64 stream, and Gaussian variates come from an
// explicit Box-Muller transform instead of std::normal_distribution (whose
// output is implementation-defined).

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace polar {

inline constexpr std::uint64_t kSplitmixIncrement = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += kSplitmixIncrement;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seed for frame `index` of a run: the index-th output of a splitmix64
// stream whose state is derived from the run seed.
inline std::uint64_t frame_seed(std::uint64_t run_seed, std::uint64_t index) {
  return splitmix64(splitmix64(run_seed) + index * kSplitmixIncrement);
}

class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : eng_(seed) {}

  // Standard normal variate, Box-Muller on two 53-bit uniforms.
  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1p-53;  // (0,1]
    const double u2 = static_cast<double>(eng_() >> 11) * 0x1p-53;          // [0,1)
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace polar

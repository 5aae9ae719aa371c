#pragma once

#include <cstdint>
#include <cmath>

#include "folia/real.hpp"

namespace folia {

// Counter-based deterministic generator.  A stream is identified by
// (seed, stream); the k-th draw of a stream is a pure function of
// (seed, stream, k), so parallel workers can derive independent streams
// by index and certificates stay byte-identical across pool sizes.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))), ctr_(0) {}

  std::uint64_t next_u64() { return mix(key_ + ++ctr_ * 0xbf58476d1ce4e5b9ULL); }

  // uniform in [0,1)
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [lo,hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  long uniform_int(long lo, long hi) {  // inclusive range
    return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // standard normal via Box-Muller (deterministic across platforms at
  // double precision, which is all the sampling-measure choices need)
  double gaussian() {
    if (have_spare_) { have_spare_ = false; return spare_; }
    double u1 = 0.0;
    while (u1 <= 1e-300) u1 = next_double();
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // random rational with numerator and denominator bounded by h
  Rational rational(long h) {
    long den = uniform_int(1, h);
    long num = uniform_int(-h, h);
    return Rational(num, den);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t key_;
  std::uint64_t ctr_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace folia

#include "sabc/rng.hpp"

#include <cmath>
#include <numbers>

namespace sabc {

namespace {

// SplitMix64 finalizer; also used to mix substream keys.
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_key(std::uint64_t key, std::uint64_t stream) {
  std::uint64_t s = key ^ 0xA0761D6478BD642FULL;
  std::uint64_t mixed = splitmix64(s);
  s = mixed + stream;
  return splitmix64(s);
}

}  // namespace

SplitRng::SplitRng(std::uint64_t seed) : key_(seed) {
  std::uint64_t s = seed;
  engine_.seed(splitmix64(s));
}

SplitRng SplitRng::substream(std::uint64_t stream) const {
  return SplitRng(derive_key(key_, stream));
}

std::uint64_t SplitRng::next_u64() { return engine_(); }

double SplitRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SplitRng::uniform_pos() { return 1.0 - uniform(); }

double SplitRng::normal() {
  const double u1 = uniform_pos();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::complex<double> SplitRng::cnormal() {
  const double u1 = uniform_pos();
  const double u2 = uniform();
  const double r = std::sqrt(-std::log(u1));  // -2 ln u, halved variance per part
  const double phase = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(phase), r * std::sin(phase)};
}

}  // namespace sabc

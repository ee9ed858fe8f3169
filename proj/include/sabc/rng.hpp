#ifndef SABC_RNG_HPP
#define SABC_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace sabc {

/// Splittable pseudo-random generator. Substreams are derived from a 64-bit
/// key, so trial t can draw from an independent stream that depends only on
/// (seed, t) and not on how many draws other trials made. Draw results are
/// identical across platforms: the engine is mt19937_64 and all real-valued
/// mappings are done explicitly (no implementation-defined distributions).
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed);

  /// Independent generator keyed by (this generator's key, stream).
  SplitRng substream(std::uint64_t stream) const;

  std::uint64_t next_u64();

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform();

  /// Uniform on (0, 1]; safe as a log() argument.
  double uniform_pos();

  /// Standard normal via Box-Muller.
  double normal();

  /// Circularly symmetric complex normal, unit total variance.
  std::complex<double> cnormal();

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::mt19937_64 engine_;
};

}  // namespace sabc

#endif

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace xqm {

/// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
///
/// Stateless: the value at (index, stream) depends only on the seed, so
/// parallel shards reproduce the serial draw sequence exactly by
/// partitioning indices.
class Philox {
 public:
  explicit Philox(std::uint64_t seed)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)} {}

  /// The 128-bit block at a (index, stream) counter position.
  std::array<std::uint32_t, 4> raw(std::uint64_t index,
                                   std::uint64_t stream = 0) const {
    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(index),
        static_cast<std::uint32_t>(index >> 32),
        static_cast<std::uint32_t>(stream),
        static_cast<std::uint32_t>(stream >> 32)};
    std::array<std::uint32_t, 2> key = key_;
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t(kMulA) * ctr[0];
      const std::uint64_t p1 = std::uint64_t(kMulB) * ctr[2];
      const std::array<std::uint32_t, 4> next = {
          static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
          static_cast<std::uint32_t>(p1),
          static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
          static_cast<std::uint32_t>(p0)};
      ctr = next;
      key[0] += kWeylA;
      key[1] += kWeylB;
    }
    return ctr;
  }

  /// Uniform double in [0, 1) with 53 random bits, one per counter index.
  double uniform(std::uint64_t index, std::uint64_t stream = 0) const {
    const auto b = raw(index, stream);
    const std::uint64_t u =
        (std::uint64_t(b[1]) << 32 | b[0]) >> 11;
    return double(u) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint32_t kWeylA = 0x9E3779B9u;
  static constexpr std::uint32_t kWeylB = 0xBB67AE85u;
  static constexpr std::uint32_t kMulA = 0xD2511F53u;
  static constexpr std::uint32_t kMulB = 0xCD9E8D57u;

  std::array<std::uint32_t, 2> key_;
};

/// Sequential view over one Philox stream; hands out uniforms and
/// Box-Muller normals deterministically.
class PhiloxSequence {
 public:
  PhiloxSequence(std::uint64_t seed, std::uint64_t stream = 0)
      : gen_(seed), stream_(stream) {}

  double next_uniform() { return gen_.uniform(index_++, stream_); }

  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // Box-Muller on two fresh uniforms; shift u1 away from zero.
    const double u1 = 1.0 - next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(next_uniform() * double(n)) % n;
  }

 private:
  Philox gen_;
  std::uint64_t stream_;
  std::uint64_t index_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace xqm

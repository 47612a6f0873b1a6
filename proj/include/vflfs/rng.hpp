#pragma once

#include <cstdint>
#include <gmpxx.h>

namespace vflfs {

// xoshiro256++ with splitmix64 seeding. Every source of randomness in the
// engine is one of these streams, derived from (seed, party, purpose), so the
// secure trainer and the plaintext oracle can consume identical gate noise
// while keeping mask/encryption randomness on independent streams.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Unbiased integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);

    // Uniform double in [0, 1).
    double uniform();

    // N(0, sd^2) via Box-Muller, two u64 draws per sample.
    double normal(double sd);

    // Uniformly random non-negative integer with exactly `bits` random bits.
    mpz_class mpz_bits(unsigned bits);

    // Uniform in [0, bound) by rejection.
    mpz_class mpz_below(const mpz_class& bound);

  private:
    std::uint64_t state_[4];
};

// Stream purposes. Streams the oracle shares with the secure path come first;
// everything from kMaskNoise on exists only in the secure path.
enum class Stream : std::uint32_t {
    kModelInit = 1,
    kGateNoise = 2,
    kBatchOrder = 3,
    kSplit = 4,
    kMaskNoise = 5,
    kEncryption = 6,
    kSquareMask = 7,
    kKeygen = 8,
};

constexpr std::uint32_t kServerParty = 0;  // clients are 1..M

Rng derive_rng(std::uint64_t seed, std::uint32_t party, Stream purpose);

}  // namespace vflfs

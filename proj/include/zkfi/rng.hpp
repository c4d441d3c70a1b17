#ifndef ZKFI_RNG_HPP_
#define ZKFI_RNG_HPP_

#include <cstdint>
#include <span>

#include "zkfi/field.hpp"
#include "zkfi/keccak.hpp"

namespace zkfi {

// Entropy source. Live mode draws from the OS and is safe for concurrent
// callers; seeded mode is a deterministic keccak counter stream owned by a
// single caller.
class Rng {
  public:
    static Rng live();
    static Rng seeded(uint64_t seed);

    // 256-bit entropy sample.
    Bytes32 entropy();
    void fill(std::span<uint8_t> out);

    // Canonical field/scalar samples via rejection on 254-bit candidates.
    Fq field();
    Fr scalar();

    // 248-bit value: 32-byte sample with the top byte masked to zero.
    U256 bits248();

    uint64_t uniform(uint64_t bound);  // [0, bound)

    bool isSeeded() const { return seeded_; }

  private:
    Rng(bool seeded, uint64_t seed);

    bool seeded_ = false;
    Bytes32 state_{};
    uint64_t counter_ = 0;
};

}  // namespace zkfi

#endif

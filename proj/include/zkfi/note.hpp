#ifndef ZKFI_NOTE_HPP_
#define ZKFI_NOTE_HPP_

#include <cstdint>

#include "zkfi/field.hpp"

namespace zkfi {

// Private pool record: (asset id, owner stealth address, value, blinding).
struct Note {
    uint32_t asset = 0;   // e, 24-bit; 0 is reserved for dummy slots
    Fq stealthAddress;    // x
    U256 value;           // v, 248-bit
    Fq blinding;          // delta

    bool operator==(const Note&) const = default;
};

// c = poseidon(e, x, v); the blinding is deliberately not hashed.
Fq noteCommitment(const Note& note);
Fq noteCommitment(uint32_t asset, const Fq& stealthAddress, const U256& value);

// eta = poseidon(l, c, delta), published on spend.
Fq noteNullifier(uint64_t leafIndex, const Fq& commitment, const Fq& blinding);

bool assetFits(uint32_t asset);
bool valueFits(const U256& value);

}  // namespace zkfi

#endif

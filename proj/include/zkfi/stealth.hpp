#ifndef ZKFI_STEALTH_HPP_
#define ZKFI_STEALTH_HPP_

#include <optional>
#include <vector>

#include "zkfi/account.hpp"
#include "zkfi/curve.hpp"
#include "zkfi/rng.hpp"

namespace zkfi {

// Plaintext carried inside a stealth payload: the blinding factor plus the
// note's asset id and value, so the receiver can rebuild the note without
// trial-decrypting chain state.
struct NoteSecrets {
    Fq blinding;           // delta
    uint32_t asset = 0;    // e, 24-bit
    U256 value;            // v, 248-bit
};

// One-time output: stealth address x = poseidon(S.x, S.y, delta), ephemeral
// key Q = r*G, one-byte view tag, and the AEAD box (nonce || ct || tag).
struct StealthOutput {
    uint8_t viewTag = 0;
    Fq stealthAddress;
    AffinePoint ephemeral;
    std::vector<uint8_t> box;
};

// Fixed offsets: tag 1 byte, x 32 bytes, Q 32 bytes compressed, box >= 28.
std::vector<uint8_t> encodeAux(const StealthOutput& out);
StealthOutput parseAux(std::span<const uint8_t> aux);  // throws Errc::Parse

Fq stealthAddressFor(const AffinePoint& signPub, const Fq& blinding);

// Deterministic core: caller supplies the blinding factor and the 248-bit
// ephemeral scalar r. The Rng overload samples both.
StealthOutput createStealthOutput(const ShieldedAddress& recipient, uint32_t asset, const U256& value,
                                  const Fq& blinding, const U256& ephemeralScalar);
StealthOutput createStealthOutput(const ShieldedAddress& recipient, uint32_t asset, const U256& value, Rng& rng);

// Receiver-side scan. Tag mismatch, AEAD failure, or a stealth-address
// mismatch after decryption all mean "not mine".
std::optional<NoteSecrets> scanAux(const StealthOutput& out, const Fr& viewKey, const AffinePoint& ownSignPub);

// Witness fragment binding (S, delta) to a stealth address; throws
// Errc::WitnessMismatch when x != poseidon(S, delta).
struct OwnershipWitness {
    AffinePoint owner;
    Fq blinding;
};
OwnershipWitness ownershipWitness(const Fq& stealthAddress, const AffinePoint& signPub, const Fq& blinding);

}  // namespace zkfi

#endif

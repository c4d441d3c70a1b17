#include "zkfi/note.hpp"

#include "zkfi/errors.hpp"
#include "zkfi/poseidon.hpp"

namespace zkfi {

bool assetFits(uint32_t asset) { return asset <= 0xffffff; }
bool valueFits(const U256& value) { return value.bitLength() <= 248; }

Fq noteCommitment(uint32_t asset, const Fq& stealthAddress, const U256& value) {
    if (!assetFits(asset)) fail(Errc::InvalidArgument, "asset id exceeds 24 bits");
    if (!valueFits(value)) fail(Errc::InvalidArgument, "note value exceeds 248 bits");
    return poseidon({Fq(asset), stealthAddress, Fq::fromU256(value)});
}

Fq noteCommitment(const Note& note) { return noteCommitment(note.asset, note.stealthAddress, note.value); }

Fq noteNullifier(uint64_t leafIndex, const Fq& commitment, const Fq& blinding) {
    return poseidon({Fq(leafIndex), commitment, blinding});
}

}  // namespace zkfi

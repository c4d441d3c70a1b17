#include "zkfi/setup.hpp"

#include <cstring>

#include "zkfi/curve.hpp"
#include "zkfi/errors.hpp"

namespace zkfi {

Bytes32 bindingFromSecret(const Fr& accumulated) {
    std::vector<uint8_t> buf;
    const char* label = "zkfi/binding";
    buf.insert(buf.end(), label, label + std::strlen(label));
    auto s = toBytesBE(accumulated.toU256());
    buf.insert(buf.end(), s.begin(), s.end());
    return keccak256(buf);
}

CeremonyResult runSetupCeremony(std::span<const Fr> contributions) {
    if (contributions.empty()) fail(Errc::Ceremony, "ceremony needs at least one contribution");

    CeremonyResult result;
    AffinePoint accumulator = basePoint();
    Fr product = Fr::one();
    for (const Fr& secret : contributions) {
        if (secret.isZero()) fail(Errc::Ceremony, "zero contribution");
        accumulator = scalarMul(secret, accumulator);
        product *= secret;
        result.keys.provingKey.transcript.push_back(keccak256(compressPoint(accumulator)));
    }
    result.keys.verifyingKey.transcript = result.keys.provingKey.transcript;
    result.toxicWaste = product;
    Bytes32 binding = bindingFromSecret(product);
    result.keys.provingKey.binding = binding;
    result.keys.verifyingKey.binding = binding;
    return result;
}

namespace {

Proof macProof(const Bytes32& binding, const PublicInputs& pub) {
    std::vector<uint8_t> buf(binding.begin(), binding.end());
    auto canon = canonicalPublicInputs(pub);
    buf.insert(buf.end(), canon.begin(), canon.end());
    Bytes32 mac = keccak256(buf);

    Proof proof;
    std::memcpy(proof.bytes.data(), mac.data(), 32);
    for (unsigned block = 1; block < 8; ++block) {
        uint8_t ext[33];
        std::memcpy(ext, mac.data(), 32);
        ext[32] = uint8_t(block);
        Bytes32 chunk = keccak256(std::span<const uint8_t>(ext, sizeof(ext)));
        std::memcpy(proof.bytes.data() + block * 32, chunk.data(), 32);
    }
    return proof;
}

}  // namespace

Proof SimulatedSnark::prove(const ProvingKey& pk, const PublicInputs& pub, const PrivateInputs& wit) const {
    if (!checkStatement(pub, wit)) fail(Errc::ProveRefused, "statement is false; refusing to prove");
    return macProof(pk.binding, pub);
}

bool SimulatedSnark::verify(const VerifyingKey& vk, const Proof& proof, const PublicInputs& pub) const {
    if (proof.backend != "sim-snark") return false;
    Proof expected = macProof(vk.binding, pub);
    // not constant time; the backend is a simulation
    return expected.bytes == proof.bytes;
}

Proof SimulatedSnark::forgeWithToxicWaste(const Fr& toxicWaste, const PublicInputs& pub) {
    return macProof(bindingFromSecret(toxicWaste), pub);
}

}  // namespace zkfi

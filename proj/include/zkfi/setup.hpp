#ifndef ZKFI_SETUP_HPP_
#define ZKFI_SETUP_HPP_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "zkfi/keccak.hpp"
#include "zkfi/statement.hpp"

namespace zkfi {

// Key material from the setup ceremony. The simulated backend keeps the
// binding secret in BOTH halves: the verifier must recompute the proof MAC,
// which is exactly why this backend is not publicly verifiable and why
// holding the ceremony output allows forgery. Documented, deliberate.
struct ProvingKey {
    Bytes32 binding{};
    std::vector<Bytes32> transcript;

    bool operator==(const ProvingKey&) const = default;
};

struct VerifyingKey {
    Bytes32 binding{};
    std::vector<Bytes32> transcript;

    bool operator==(const VerifyingKey&) const = default;
};

struct SetupKeys {
    ProvingKey provingKey;
    VerifyingKey verifyingKey;
};

struct CeremonyResult {
    SetupKeys keys;
    // The accumulated contribution product. Anyone holding this can forge
    // proofs against the resulting keys; it exists so tests can demonstrate
    // the hazard. A real ceremony destroys it.
    Fr toxicWaste;
};

// Chained accumulation: starting from the base point, every participant
// multiplies the running point by their secret and the transcript records
// the digest of each intermediate point. Recovering a contribution from two
// consecutive transcript points is a discrete-log problem.
CeremonyResult runSetupCeremony(std::span<const Fr> contributions);

Bytes32 bindingFromSecret(const Fr& accumulated);

// 2048-bit opaque proof payload.
struct Proof {
    std::array<uint8_t, 256> bytes{};
    std::string backend = "sim-snark";

    bool operator==(const Proof&) const = default;
};

class ProofBackend {
  public:
    virtual ~ProofBackend() = default;
    virtual std::string name() const = 0;
    // Refuses (throws Errc::ProveRefused) when the statement is false.
    virtual Proof prove(const ProvingKey& pk, const PublicInputs& pub, const PrivateInputs& wit) const = 0;
    // Stateless; sees only (key, proof, public inputs), never the witness.
    virtual bool verify(const VerifyingKey& vk, const Proof& proof, const PublicInputs& pub) const = 0;
};

// Default backend: enforces the statement locally, then emits a keccak MAC
// over the canonical public inputs under the ceremony's binding secret,
// expanded to the fixed proof size. Preserves pipeline shape, completeness
// and binding to the public inputs; provides neither public verifiability
// nor soundness against whoever holds the key material.
class SimulatedSnark final : public ProofBackend {
  public:
    std::string name() const override { return "sim-snark"; }
    Proof prove(const ProvingKey& pk, const PublicInputs& pub, const PrivateInputs& wit) const override;
    bool verify(const VerifyingKey& vk, const Proof& proof, const PublicInputs& pub) const override;

    // Hazard demonstration: a proof for arbitrary public inputs constructed
    // from the ceremony secret alone, no witness involved.
    static Proof forgeWithToxicWaste(const Fr& toxicWaste, const PublicInputs& pub);
};

}  // namespace zkfi

#endif

#ifndef ZKFI_STATEMENT_HPP_
#define ZKFI_STATEMENT_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "zkfi/curve.hpp"
#include "zkfi/merkle.hpp"
#include "zkfi/schnorr.hpp"

namespace zkfi {

// Fixed statement arity, mirroring a fixed circuit layout. Unused slots are
// dummies: asset id 0, zero value, zero hashes.
inline constexpr unsigned kMaxInputs = 4;
inline constexpr unsigned kMaxOutputs = 4;

// Magnitude bound for signed public values.
inline constexpr int64_t kPublicValueBound = int64_t(1) << 52;

// What the verifier sees. Slot semantics are independent per array: a zero
// nullifier means "no input in this slot", a zero commitment "no output",
// a zero public asset "no public flow".
struct PublicInputs {
    Fq root;                                          // R
    std::array<int64_t, kMaxOutputs> publicValue{};   // V, negative = leaving the pool
    std::array<uint32_t, kMaxOutputs> publicAsset{};  // E
    std::array<Fq, kMaxInputs> nullifier{};           // eta_in
    std::array<Fq, kMaxOutputs> outCommitment{};      // c_out

    bool operator==(const PublicInputs&) const = default;
};

// The witness. Input slot i is live iff inAsset[i] != 0; output slot j is
// live iff outAsset[j] != 0.
struct PrivateInputs {
    std::array<uint32_t, kMaxInputs> inAsset{};
    std::array<U256, kMaxInputs> inValue{};
    std::array<Fq, kMaxInputs> inBlinding{};
    std::array<AffinePoint, kMaxInputs> inOwner{};
    std::array<Signature, kMaxInputs> inSig{};
    std::array<uint64_t, kMaxInputs> inLeaf{};
    std::array<MerklePath, kMaxInputs> inPath{};

    std::array<uint32_t, kMaxOutputs> outAsset{};
    std::array<U256, kMaxOutputs> outValue{};
    std::array<Fq, kMaxOutputs> outStealth{};
};

struct StatementTrace {
    std::vector<std::string> failures;
};

// Evaluates every conjunct of the transfer statement: stealth-address,
// commitment and nullifier reconstruction, ownership signatures, Merkle
// openings against the root, output commitments, per-asset conservation
// with signed public values, and dummy-slot canonicality. Returns 0 on the
// first false conjunct unless a trace is supplied, in which case all
// failures are collected.
bool checkStatement(const PublicInputs& pub, const PrivateInputs& wit, StatementTrace* trace = nullptr);

// Length-prefixed big-endian serialization of the public inputs, the exact
// bytes a proof binds to. Negative values are encoded two's-complement.
std::vector<uint8_t> canonicalPublicInputs(const PublicInputs& pub);

// keccak digest of the canonical encoding, used as the transaction id.
std::string transactionId(const PublicInputs& pub);

unsigned countInputs(const PublicInputs& pub);    // nonzero nullifier slots
unsigned countOutputs(const PublicInputs& pub);   // nonzero commitment slots

}  // namespace zkfi

#endif

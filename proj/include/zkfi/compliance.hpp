#ifndef ZKFI_COMPLIANCE_HPP_
#define ZKFI_COMPLIANCE_HPP_

#include <span>
#include <string>
#include <vector>

#include "zkfi/curve.hpp"
#include "zkfi/rng.hpp"
#include "zkfi/schnorr.hpp"
#include "zkfi/shamir.hpp"

namespace zkfi {

// t-of-n guardian key: the collective private key is Shamir-shared over the
// scalar field; partial decryptions interpolate in the exponent.
struct GuardianSet {
    unsigned count = 0;
    unsigned threshold = 0;
    AffinePoint collectivePub;
    std::vector<Share<Fr>> shares;
};

GuardianSet guardianKeygen(unsigned threshold, unsigned count, Rng& rng);

// Inner layer: ECDH box only the revoker key opens.
struct InnerCiphertext {
    AffinePoint ephemeral;
    std::vector<uint8_t> box;  // nonce || ct || tag

    bool operator==(const InnerCiphertext&) const = default;
};

// Outer layer: a fresh content key, ElGamal-encapsulated to the guardian
// collective key, sealing the serialized inner ciphertext. A guardian quorum
// recovers the inner ciphertext only; the plaintext still needs the revoker.
struct ComplianceEnvelope {
    AffinePoint outerEphemeral;            // b*G
    std::array<uint8_t, 32> wrappedKey{};  // contentKey ^ KDF(b * collective)
    std::vector<uint8_t> outerBox;         // nonce || ct || tag over the inner layer
    std::string txBinding;                 // transaction id the envelope is tied to
};

ComplianceEnvelope encryptForCompliance(std::span<const uint8_t> txData, const AffinePoint& revokerPub,
                                        const AffinePoint& collectivePub, const std::string& txBinding, Rng& rng);

// Publicly logged, revoker-signed de-anonymization request.
struct RevocationRequest {
    std::string txId;
    std::string justification;
    Signature signature;
};

Fq revocationDigest(const std::string& txId, const std::string& justification);
RevocationRequest makeRevocationRequest(const std::string& txId, const std::string& justification, const Fr& revokerKey);
bool verifyRequestSignature(const RevocationRequest& request, const AffinePoint& revokerPub);

// Append-only request log. Guardians act only on requests that verify
// against the registered revoker key AND appear in the log.
class RequestLog {
  public:
    RequestLog() = default;
    explicit RequestLog(const AffinePoint& revokerPub) : revokerPub_(revokerPub), hasKey_(true) {}

    void setRevoker(const AffinePoint& revokerPub);
    // False (nothing appended) when the signature does not verify.
    bool append(const RevocationRequest& request);
    // Signature valid and present in the log.
    bool verified(const RevocationRequest& request) const;
    bool loggedFor(const std::string& txId) const;
    const std::vector<RevocationRequest>& entries() const { return entries_; }

  private:
    AffinePoint revokerPub_;
    bool hasKey_ = false;
    std::vector<RevocationRequest> entries_;
};

struct PartialDecryption {
    uint32_t shareIndex = 0;
    AffinePoint value;      // share * outerEphemeral
    std::string txBinding;
};

// Refuses (Errc::RequestNotLogged) unless the request is log-verified and
// matches the envelope's transaction.
PartialDecryption guardianApprove(const RevocationRequest& request, const RequestLog& log,
                                  const ComplianceEnvelope& envelope, const Share<Fr>& share);

// Lagrange interpolation in the exponent over `threshold` partials, then
// unwraps the content key and opens the outer box. Throws
// Errc::CombineFailure on short, mixed or inconsistent partials.
InnerCiphertext combinePartials(const ComplianceEnvelope& envelope, std::span<const PartialDecryption> partials,
                                unsigned threshold);

// Final decryption by the revoker. Throws Errc::DecryptFailure.
std::vector<uint8_t> revokerDecrypt(const InnerCiphertext& inner, const Fr& revokerKey);

}  // namespace zkfi

#endif

#include "zkfi/compliance.hpp"

#include <algorithm>
#include <cstring>
#include <set>

#include "zkfi/aead.hpp"
#include "zkfi/errors.hpp"
#include "zkfi/hex.hpp"
#include "zkfi/keccak.hpp"

namespace zkfi {

namespace {

Bytes32 pointKdf(const AffinePoint& p) { return keccak256(compressPoint(p)); }

std::array<uint8_t, kAeadNonceSize> nonceFor(const AffinePoint& ephemeral, const char* label) {
    auto q = compressPoint(ephemeral);
    std::vector<uint8_t> buf(q.begin(), q.end());
    buf.insert(buf.end(), label, label + std::strlen(label));
    Bytes32 digest = keccak256(buf);
    std::array<uint8_t, kAeadNonceSize> nonce;
    std::copy(digest.begin(), digest.begin() + kAeadNonceSize, nonce.begin());
    return nonce;
}

std::vector<uint8_t> sealBox(const Bytes32& key, const std::array<uint8_t, kAeadNonceSize>& nonce,
                             std::span<const uint8_t> plaintext, std::span<const uint8_t> aad) {
    auto sealed = aeadEncrypt(std::span<const uint8_t, kAeadKeySize>(key.data(), kAeadKeySize),
                              std::span<const uint8_t, kAeadNonceSize>(nonce.data(), kAeadNonceSize), plaintext, aad);
    std::vector<uint8_t> box(nonce.begin(), nonce.end());
    box.insert(box.end(), sealed.begin(), sealed.end());
    return box;
}

std::optional<std::vector<uint8_t>> openBox(const Bytes32& key, std::span<const uint8_t> box,
                                            std::span<const uint8_t> aad) {
    if (box.size() < kAeadNonceSize + kAeadTagSize) return std::nullopt;
    return aeadDecrypt(std::span<const uint8_t, kAeadKeySize>(key.data(), kAeadKeySize),
                       std::span<const uint8_t, kAeadNonceSize>(box.data(), kAeadNonceSize),
                       box.subspan(kAeadNonceSize), aad);
}

std::span<const uint8_t> asBytes(const std::string& s) {
    return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

}  // namespace

GuardianSet guardianKeygen(unsigned threshold, unsigned count, Rng& rng) {
    if (threshold < 1 || threshold > count) fail(Errc::InvalidArgument, "need 1 <= t <= n");
    GuardianSet set;
    set.count = count;
    set.threshold = threshold;
    Fr secret = rng.scalar();
    set.collectivePub = mulBase(secret);
    set.shares = shamirSplit(secret, threshold, count, rng);
    return set;
}

ComplianceEnvelope encryptForCompliance(std::span<const uint8_t> txData, const AffinePoint& revokerPub,
                                        const AffinePoint& collectivePub, const std::string& txBinding, Rng& rng) {
    if (!inSubgroup(revokerPub) || !inSubgroup(collectivePub)) fail(Errc::BadPoint, "compliance keys invalid");

    // Inner: ECDH to the revoker.
    Fr innerEph = rng.scalar();
    InnerCiphertext inner;
    inner.ephemeral = mulBase(innerEph);
    Bytes32 innerKey = pointKdf(scalarMul(innerEph, revokerPub));
    inner.box = sealBox(innerKey, nonceFor(inner.ephemeral, "inner"), txData, {});

    std::vector<uint8_t> innerSerialized;
    auto eph = compressPoint(inner.ephemeral);
    innerSerialized.insert(innerSerialized.end(), eph.begin(), eph.end());
    innerSerialized.insert(innerSerialized.end(), inner.box.begin(), inner.box.end());

    // Outer: fresh content key encapsulated to the guardian collective key.
    ComplianceEnvelope env;
    env.txBinding = txBinding;
    Fr outerEph = rng.scalar();
    env.outerEphemeral = mulBase(outerEph);
    Bytes32 contentKey = rng.entropy();
    Bytes32 mask = pointKdf(scalarMul(outerEph, collectivePub));
    for (size_t i = 0; i < 32; ++i) env.wrappedKey[i] = contentKey[i] ^ mask[i];
    env.outerBox = sealBox(contentKey, nonceFor(env.outerEphemeral, "outer"), innerSerialized, asBytes(txBinding));
    return env;
}

Fq revocationDigest(const std::string& txId, const std::string& justification) {
    std::vector<uint8_t> buf;
    buf.insert(buf.end(), txId.begin(), txId.end());
    buf.push_back(0);
    buf.insert(buf.end(), justification.begin(), justification.end());
    return Fq::fromBytesBE(keccak256(buf));
}

RevocationRequest makeRevocationRequest(const std::string& txId, const std::string& justification,
                                        const Fr& revokerKey) {
    RevocationRequest req;
    req.txId = txId;
    req.justification = justification;
    req.signature = schnorrSign(revocationDigest(txId, justification), revokerKey);
    return req;
}

bool verifyRequestSignature(const RevocationRequest& request, const AffinePoint& revokerPub) {
    return schnorrVerify(revocationDigest(request.txId, request.justification), revokerPub, request.signature);
}

void RequestLog::setRevoker(const AffinePoint& revokerPub) {
    revokerPub_ = revokerPub;
    hasKey_ = true;
}

bool RequestLog::append(const RevocationRequest& request) {
    if (!hasKey_ || !verifyRequestSignature(request, revokerPub_)) return false;
    entries_.push_back(request);
    return true;
}

bool RequestLog::verified(const RevocationRequest& request) const {
    if (!hasKey_ || !verifyRequestSignature(request, revokerPub_)) return false;
    return std::any_of(entries_.begin(), entries_.end(), [&](const RevocationRequest& e) {
        return e.txId == request.txId && e.justification == request.justification && e.signature == request.signature;
    });
}

bool RequestLog::loggedFor(const std::string& txId) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const RevocationRequest& e) { return e.txId == txId; });
}

PartialDecryption guardianApprove(const RevocationRequest& request, const RequestLog& log,
                                  const ComplianceEnvelope& envelope, const Share<Fr>& share) {
    if (!log.verified(request)) fail(Errc::RequestNotLogged, "request is not log-verified");
    if (request.txId != envelope.txBinding) fail(Errc::RequestNotLogged, "request targets a different transaction");
    if (share.index == 0) fail(Errc::InvalidArgument, "share index must be positive");
    return {share.index, scalarMul(share.value, envelope.outerEphemeral), envelope.txBinding};
}

InnerCiphertext combinePartials(const ComplianceEnvelope& envelope, std::span<const PartialDecryption> partials,
                                unsigned threshold) {
    if (threshold == 0) fail(Errc::InvalidArgument, "threshold must be positive");
    if (partials.size() < threshold) fail(Errc::CombineFailure, "fewer partial decryptions than the quorum");
    std::set<uint32_t> seen;
    std::vector<uint32_t> indices;
    for (unsigned i = 0; i < threshold; ++i) {
        if (partials[i].txBinding != envelope.txBinding)
            fail(Errc::CombineFailure, "partial decryption for a different transaction");
        if (!seen.insert(partials[i].shareIndex).second) fail(Errc::CombineFailure, "duplicate share index");
        indices.push_back(partials[i].shareIndex);
    }

    AffinePoint shared = identityPoint();
    for (unsigned i = 0; i < threshold; ++i) {
        Fr lambda = lagrangeAtZero<Fr>(partials[i].shareIndex, indices);
        shared = pointAdd(shared, scalarMul(lambda, partials[i].value));
    }

    Bytes32 mask = pointKdf(shared);
    Bytes32 contentKey;
    for (size_t i = 0; i < 32; ++i) contentKey[i] = envelope.wrappedKey[i] ^ mask[i];

    auto innerSerialized = openBox(contentKey, envelope.outerBox, asBytes(envelope.txBinding));
    if (!innerSerialized) fail(Errc::CombineFailure, "outer layer did not open; quorum invalid");
    if (innerSerialized->size() < 32 + kAeadNonceSize + kAeadTagSize)
        fail(Errc::CombineFailure, "inner layer malformed");

    InnerCiphertext inner;
    auto eph = decompressPoint(std::span<const uint8_t>(innerSerialized->data(), 32));
    if (!eph) fail(Errc::CombineFailure, "inner ephemeral key malformed");
    inner.ephemeral = *eph;
    inner.box.assign(innerSerialized->begin() + 32, innerSerialized->end());
    return inner;
}

std::vector<uint8_t> revokerDecrypt(const InnerCiphertext& inner, const Fr& revokerKey) {
    Bytes32 key = pointKdf(scalarMul(revokerKey, inner.ephemeral));
    auto plain = openBox(key, inner.box, {});
    if (!plain) fail(Errc::DecryptFailure, "inner layer did not open with this key");
    return *plain;
}

}  // namespace zkfi

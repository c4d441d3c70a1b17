#include "zkfi/stealth.hpp"

#include <cstring>

#include "zkfi/aead.hpp"
#include "zkfi/errors.hpp"
#include "zkfi/keccak.hpp"
#include "zkfi/poseidon.hpp"

namespace zkfi {

namespace {

constexpr size_t kPlainSize = 32 + 3 + 31;  // delta || asset || value
constexpr size_t kBoxMin = kAeadNonceSize + kAeadTagSize;

bool valueFits248(const U256& v) { return v.bitLength() <= 248; }

Bytes32 sharedKey(const AffinePoint& shared) { return keccak256(compressPoint(shared)); }

std::array<uint8_t, kAeadNonceSize> boxNonce(const AffinePoint& ephemeral) {
    auto q = compressPoint(ephemeral);
    std::vector<uint8_t> buf(q.begin(), q.end());
    const char* label = "nonce";
    buf.insert(buf.end(), label, label + 5);
    Bytes32 digest = keccak256(buf);
    std::array<uint8_t, kAeadNonceSize> nonce;
    std::copy(digest.begin(), digest.begin() + kAeadNonceSize, nonce.begin());
    return nonce;
}

std::array<uint8_t, kPlainSize> packSecrets(const NoteSecrets& secrets) {
    std::array<uint8_t, kPlainSize> plain{};
    auto d = toBytesBE(secrets.blinding.toU256());
    std::copy(d.begin(), d.end(), plain.begin());
    plain[32] = uint8_t(secrets.asset >> 16);
    plain[33] = uint8_t(secrets.asset >> 8);
    plain[34] = uint8_t(secrets.asset);
    auto v = toBytesBE(secrets.value);
    std::copy(v.begin() + 1, v.end(), plain.begin() + 35);  // low 31 bytes
    return plain;
}

NoteSecrets unpackSecrets(std::span<const uint8_t> plain) {
    NoteSecrets s;
    s.blinding = Fq::fromBytesBE(plain.first(32));
    s.asset = (uint32_t(plain[32]) << 16) | (uint32_t(plain[33]) << 8) | plain[34];
    s.value = fromBytesBE(plain.subspan(35, 31));
    return s;
}

}  // namespace

Fq stealthAddressFor(const AffinePoint& signPub, const Fq& blinding) {
    return poseidon({signPub.x, signPub.y, blinding});
}

std::vector<uint8_t> encodeAux(const StealthOutput& out) {
    std::vector<uint8_t> aux;
    aux.reserve(1 + 32 + 32 + out.box.size());
    aux.push_back(out.viewTag);
    auto x = out.stealthAddress.toBytesBE();
    aux.insert(aux.end(), x.begin(), x.end());
    auto q = compressPoint(out.ephemeral);
    aux.insert(aux.end(), q.begin(), q.end());
    aux.insert(aux.end(), out.box.begin(), out.box.end());
    return aux;
}

StealthOutput parseAux(std::span<const uint8_t> aux) {
    if (aux.size() < 1 + 32 + 32 + kBoxMin) fail(Errc::Parse, "aux data too short");
    StealthOutput out;
    out.viewTag = aux[0];
    U256 x = fromBytesBE(aux.subspan(1, 32));
    if (x >= fqModulus()) fail(Errc::Parse, "aux stealth address out of field");
    out.stealthAddress = Fq::fromU256(x);
    auto q = decompressPoint(aux.subspan(33, 32));
    if (!q) fail(Errc::Parse, "aux ephemeral key invalid");
    out.ephemeral = *q;
    out.box.assign(aux.begin() + 65, aux.end());
    return out;
}

StealthOutput createStealthOutput(const ShieldedAddress& recipient, uint32_t asset, const U256& value,
                                  const Fq& blinding, const U256& ephemeralScalar) {
    if (!valueFits248(value)) fail(Errc::InvalidArgument, "note value exceeds 248 bits");
    if (asset > 0xffffff) fail(Errc::InvalidArgument, "asset id exceeds 24 bits");
    if (!isOnCurve(recipient.signPub) || !isOnCurve(recipient.viewPub)) fail(Errc::OffCurve, "recipient keys invalid");

    StealthOutput out;
    out.stealthAddress = stealthAddressFor(recipient.signPub, blinding);
    out.ephemeral = scalarMul(ephemeralScalar, basePoint());
    AffinePoint shared = scalarMul(ephemeralScalar, recipient.viewPub);
    Bytes32 key = sharedKey(shared);
    out.viewTag = key[0];

    auto plain = packSecrets({blinding, asset, value});
    auto nonce = boxNonce(out.ephemeral);
    auto sealed = aeadEncrypt(std::span<const uint8_t, kAeadKeySize>(key.data(), kAeadKeySize),
                              std::span<const uint8_t, kAeadNonceSize>(nonce.data(), kAeadNonceSize),
                              plain, {});
    out.box.assign(nonce.begin(), nonce.end());
    out.box.insert(out.box.end(), sealed.begin(), sealed.end());
    return out;
}

StealthOutput createStealthOutput(const ShieldedAddress& recipient, uint32_t asset, const U256& value, Rng& rng) {
    Fq blinding = rng.field();
    U256 ephemeralScalar = rng.bits248();
    return createStealthOutput(recipient, asset, value, blinding, ephemeralScalar);
}

std::optional<NoteSecrets> scanAux(const StealthOutput& out, const Fr& viewKey, const AffinePoint& ownSignPub) {
    AffinePoint shared = scalarMul(viewKey, out.ephemeral);
    Bytes32 key = sharedKey(shared);
    if (key[0] != out.viewTag) return std::nullopt;

    if (out.box.size() < kBoxMin) return std::nullopt;
    std::array<uint8_t, kAeadNonceSize> nonce;
    std::copy(out.box.begin(), out.box.begin() + kAeadNonceSize, nonce.begin());
    auto plain = aeadDecrypt(std::span<const uint8_t, kAeadKeySize>(key.data(), kAeadKeySize),
                             std::span<const uint8_t, kAeadNonceSize>(nonce.data(), kAeadNonceSize),
                             std::span<const uint8_t>(out.box.data() + kAeadNonceSize, out.box.size() - kAeadNonceSize),
                             {});
    if (!plain || plain->size() != kPlainSize) return std::nullopt;

    NoteSecrets secrets = unpackSecrets(*plain);
    // Guard against view-tag false positives: the decrypted blinding factor
    // must reproduce the advertised stealth address.
    if (stealthAddressFor(ownSignPub, secrets.blinding) != out.stealthAddress) return std::nullopt;
    return secrets;
}

OwnershipWitness ownershipWitness(const Fq& stealthAddress, const AffinePoint& signPub, const Fq& blinding) {
    if (stealthAddressFor(signPub, blinding) != stealthAddress)
        fail(Errc::WitnessMismatch, "blinding does not open the stealth address");
    return {signPub, blinding};
}

}  // namespace zkfi

#include "zkfi/schnorr.hpp"

#include "zkfi/domains.hpp"
#include "zkfi/errors.hpp"
#include "zkfi/poseidon.hpp"

namespace zkfi {

namespace {

Fr reduceToScalar(const Fq& v) { return Fr::fromU256(v.toU256()); }

Fr challenge(const AffinePoint& commitment, const AffinePoint& publicKey, const Fq& message) {
    Fq c = poseidon({commitment.x, commitment.y, publicKey.x, publicKey.y, message});
    return reduceToScalar(c);
}

}  // namespace

Signature schnorrSign(const Fq& message, const Fr& signKey) {
    if (signKey.isZero()) fail(Errc::InvalidArgument, "zero sign key");
    Fq keyField = Fq::fromU256(signKey.toU256());
    Fr nonce = reduceToScalar(poseidon({keyField, message, schnorrNonceTag()}));
    if (nonce.isZero()) nonce = Fr(1);  // unreachable in practice
    AffinePoint commitment = mulBase(nonce);
    Fr c = challenge(commitment, mulBase(signKey), message);
    Fr response = nonce + c * signKey;
    return {commitment, response};
}

bool schnorrVerify(const Fq& message, const AffinePoint& publicKey, const Signature& sig) {
    if (!isOnCurve(sig.commitment) || !isOnCurve(publicKey)) return false;
    Fr c = challenge(sig.commitment, publicKey, message);
    AffinePoint lhs = mulBase(sig.response);
    AffinePoint rhs = pointAdd(sig.commitment, scalarMul(c, publicKey));
    return lhs == rhs;
}

}  // namespace zkfi

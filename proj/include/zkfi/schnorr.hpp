#ifndef ZKFI_SCHNORR_HPP_
#define ZKFI_SCHNORR_HPP_

#include "zkfi/curve.hpp"
#include "zkfi/field.hpp"

namespace zkfi {

// Schnorr over Baby JubJub with a Poseidon challenge. The nonce is derived
// deterministically from (key, message), so signing never reuses a nonce.
struct Signature {
    AffinePoint commitment;  // R = k*G
    Fr response;             // z = k + c*s

    bool operator==(const Signature&) const = default;
};

Signature schnorrSign(const Fq& message, const Fr& signKey);
bool schnorrVerify(const Fq& message, const AffinePoint& publicKey, const Signature& sig);

}  // namespace zkfi

#endif

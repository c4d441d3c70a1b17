#ifndef ZKFI_DOMAINS_HPP_
#define ZKFI_DOMAINS_HPP_

#include "zkfi/field.hpp"

namespace zkfi {

// Fixed salts and domain-separation tags, each a keccak digest of a literal
// protocol label reduced into the field.
const Fq& saltSign();          // "zkfi/sign"
const Fq& saltView();          // "zkfi/view"
const Fq& schnorrNonceTag();   // "zkfi/schnorr/nonce"

Fq fieldFromLabel(const char* label);

}  // namespace zkfi

#endif

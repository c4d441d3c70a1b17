#include "zkfi/domains.hpp"

#include <string_view>

#include "zkfi/keccak.hpp"

namespace zkfi {

Fq fieldFromLabel(const char* label) {
    Bytes32 digest = keccak256(std::string_view(label));
    return Fq::fromBytesBE(digest);
}

const Fq& saltSign() {
    static const Fq v = fieldFromLabel("zkfi/sign");
    return v;
}

const Fq& saltView() {
    static const Fq v = fieldFromLabel("zkfi/view");
    return v;
}

const Fq& schnorrNonceTag() {
    static const Fq v = fieldFromLabel("zkfi/schnorr/nonce");
    return v;
}

}  // namespace zkfi

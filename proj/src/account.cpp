#include "zkfi/account.hpp"

#include "zkfi/domains.hpp"
#include "zkfi/errors.hpp"
#include "zkfi/poseidon.hpp"

namespace zkfi {

std::array<uint8_t, 64> ShieldedAddress::encode() const {
    std::array<uint8_t, 64> out;
    auto s = compressPoint(signPub);
    auto p = compressPoint(viewPub);
    std::copy(s.begin(), s.end(), out.begin());
    std::copy(p.begin(), p.end(), out.begin() + 32);
    return out;
}

std::optional<ShieldedAddress> ShieldedAddress::decode(std::span<const uint8_t> bytes) {
    if (bytes.size() != 64) return std::nullopt;
    auto s = decompressPoint(bytes.first(32));
    auto p = decompressPoint(bytes.subspan(32));
    if (!s || !p) return std::nullopt;
    if (!inSubgroup(*s) || !inSubgroup(*p)) return std::nullopt;
    return ShieldedAddress{*s, *p};
}

namespace {

Fr deriveKey(const Fq& entropyField, const Fq& salt) {
    Fr key = Fr::fromU256(poseidon({entropyField, salt}).toU256());
    uint64_t counter = 1;
    while (key.isZero()) {  // negligible, but keep derivation total
        key = Fr::fromU256(poseidon({entropyField, salt, Fq(counter++)}).toU256());
    }
    return key;
}

}  // namespace

ShieldedAccount deriveAccount(const Bytes32& entropy) {
    ShieldedAccount acct;
    acct.entropy = entropy;
    Fq entropyField = Fq::fromBytesBE(entropy);
    acct.signKey = deriveKey(entropyField, saltSign());
    acct.viewKey = deriveKey(entropyField, saltView());
    if (acct.signKey == acct.viewKey) fail(Errc::InvalidArgument, "degenerate entropy: sign and view keys collide");
    acct.signPub = mulBase(acct.signKey);
    acct.viewPub = mulBase(acct.viewKey);
    return acct;
}

bool AddressRegistry::add(const std::string& handle, const ShieldedAddress& address) {
    if (handle.empty()) fail(Errc::InvalidArgument, "empty registry handle");
    return entries_.emplace(handle, address).second;
}

std::optional<ShieldedAddress> AddressRegistry::lookup(const std::string& handle) const {
    auto it = entries_.find(handle);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

}  // namespace zkfi

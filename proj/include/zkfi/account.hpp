#ifndef ZKFI_ACCOUNT_HPP_
#define ZKFI_ACCOUNT_HPP_

#include <map>
#include <optional>
#include <string>

#include "zkfi/curve.hpp"
#include "zkfi/keccak.hpp"

namespace zkfi {

// Pair of public keys a counterparty needs in order to pay someone.
struct ShieldedAddress {
    AffinePoint signPub;  // S
    AffinePoint viewPub;  // P

    bool operator==(const ShieldedAddress&) const = default;

    // 64-byte wire form: compressed S || compressed P.
    std::array<uint8_t, 64> encode() const;
    static std::optional<ShieldedAddress> decode(std::span<const uint8_t> bytes);
};

// Sign keypair authorizes spending; view keypair grants read-only access.
struct ShieldedAccount {
    Bytes32 entropy;      // xi
    Fr signKey;           // s
    AffinePoint signPub;  // S = s*G
    Fr viewKey;           // p
    AffinePoint viewPub;  // P = p*G

    ShieldedAddress address() const { return {signPub, viewPub}; }
};

// Deterministic derivation: each private key is the Poseidon hash of the
// entropy with a fixed salt, reduced into the scalar field.
ShieldedAccount deriveAccount(const Bytes32& entropy);

// Public handle -> shielded address directory. Purely advisory: protocol
// validity never depends on registry contents.
class AddressRegistry {
  public:
    // False when the handle is already taken.
    bool add(const std::string& handle, const ShieldedAddress& address);
    std::optional<ShieldedAddress> lookup(const std::string& handle) const;
    const std::map<std::string, ShieldedAddress>& entries() const { return entries_; }

  private:
    std::map<std::string, ShieldedAddress> entries_;
};

}  // namespace zkfi

#endif

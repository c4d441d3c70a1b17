#ifndef ZKFI_KECCAK_HPP_
#define ZKFI_KECCAK_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace zkfi {

using Bytes32 = std::array<uint8_t, 32>;

// Keccak-256 with the original 0x01 padding (Ethereum flavor, not SHA3).
Bytes32 keccak256(std::span<const uint8_t> message);
Bytes32 keccak256(std::string_view message);

}  // namespace zkfi

#endif

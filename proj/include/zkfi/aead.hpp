#ifndef ZKFI_AEAD_HPP_
#define ZKFI_AEAD_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace zkfi {

inline constexpr size_t kAeadKeySize = 32;
inline constexpr size_t kAeadNonceSize = 12;
inline constexpr size_t kAeadTagSize = 16;

// ChaCha20-Poly1305 (RFC 8439). Returns ciphertext || 16-byte tag.
std::vector<uint8_t> aeadEncrypt(std::span<const uint8_t, kAeadKeySize> key,
                                 std::span<const uint8_t, kAeadNonceSize> nonce,
                                 std::span<const uint8_t> plaintext,
                                 std::span<const uint8_t> aad);

// Empty result on authentication failure; never partial plaintext.
std::optional<std::vector<uint8_t>> aeadDecrypt(std::span<const uint8_t, kAeadKeySize> key,
                                                std::span<const uint8_t, kAeadNonceSize> nonce,
                                                std::span<const uint8_t> ciphertextAndTag,
                                                std::span<const uint8_t> aad);

}  // namespace zkfi

#endif

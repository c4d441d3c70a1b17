#ifndef ZKFI_HEX_HPP_
#define ZKFI_HEX_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zkfi {

std::string toHex(std::span<const uint8_t> bytes);
std::vector<uint8_t> fromHex(const std::string& hex);

}  // namespace zkfi

#endif

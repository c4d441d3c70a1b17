#ifndef ZKFI_U256_HPP_
#define ZKFI_U256_HPP_

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>

namespace zkfi {

// Unsigned 256-bit integer, four 64-bit limbs, least significant first.
struct U256 {
    std::array<uint64_t, 4> w{0, 0, 0, 0};

    constexpr U256() = default;
    constexpr explicit U256(uint64_t v) : w{v, 0, 0, 0} {}
    constexpr U256(uint64_t w0, uint64_t w1, uint64_t w2, uint64_t w3) : w{w0, w1, w2, w3} {}

    bool isZero() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
    bool bit(unsigned i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void setBit(unsigned i) { w[i >> 6] |= uint64_t(1) << (i & 63); }

    // Index of the highest set bit plus one; 0 for zero.
    unsigned bitLength() const;

    bool operator==(const U256&) const = default;

    static int cmp(const U256& a, const U256& b) {
        for (int i = 3; i >= 0; --i) {
            if (a.w[i] < b.w[i]) return -1;
            if (a.w[i] > b.w[i]) return 1;
        }
        return 0;
    }
    bool operator<(const U256& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const U256& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const U256& o) const { return cmp(*this, o) > 0; }
    bool operator>=(const U256& o) const { return cmp(*this, o) >= 0; }
};

// a + b, returns carry out.
uint64_t addCarry(U256& a, const U256& b);
// a - b, returns borrow out.
uint64_t subBorrow(U256& a, const U256& b);
// Full 256x256 -> 512 bit product, little-endian 64-bit limbs.
std::array<uint64_t, 8> mulWide(const U256& a, const U256& b);
// Shift left by one bit, returns the bit shifted out.
uint64_t shl1(U256& a);

// a mod m computed by binary reduction; m must be nonzero.
U256 mod(const U256& a, const U256& m);
// (a + b) mod m, assuming a,b < m.
U256 addMod(const U256& a, const U256& b, const U256& m);
// (a - b) mod m, assuming a,b < m.
U256 subMod(const U256& a, const U256& b, const U256& m);

// Big-endian 32-byte codec.
std::array<uint8_t, 32> toBytesBE(const U256& a);
U256 fromBytesBE(std::span<const uint8_t> bytes);

// Decimal and hex string codecs (lowercase hex, no 0x prefix).
std::string toDec(const U256& a);
U256 fromDec(const std::string& s);
std::string toHex(const U256& a);
U256 fromHexStr(const std::string& s);

}  // namespace zkfi

#endif

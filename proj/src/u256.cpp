#include "zkfi/u256.hpp"

#include <stdexcept>

namespace zkfi {

using u128 = unsigned __int128;

unsigned U256::bitLength() const {
    for (int i = 3; i >= 0; --i) {
        if (w[i]) return unsigned(i) * 64 + (64 - unsigned(__builtin_clzll(w[i])));
    }
    return 0;
}

uint64_t addCarry(U256& a, const U256& b) {
    u128 acc = 0;
    for (int i = 0; i < 4; ++i) {
        acc += u128(a.w[i]) + b.w[i];
        a.w[i] = uint64_t(acc);
        acc >>= 64;
    }
    return uint64_t(acc);
}

uint64_t subBorrow(U256& a, const U256& b) {
    u128 borrow = 0;
    for (int i = 0; i < 4; ++i) {
        u128 d = u128(a.w[i]) - b.w[i] - borrow;
        a.w[i] = uint64_t(d);
        borrow = (d >> 64) & 1;
    }
    return uint64_t(borrow);
}

std::array<uint64_t, 8> mulWide(const U256& a, const U256& b) {
    std::array<uint64_t, 8> r{};
    for (int i = 0; i < 4; ++i) {
        uint64_t carry = 0;
        for (int j = 0; j < 4; ++j) {
            u128 cur = u128(a.w[i]) * b.w[j] + r[i + j] + carry;
            r[i + j] = uint64_t(cur);
            carry = uint64_t(cur >> 64);
        }
        r[i + 4] = carry;
    }
    return r;
}

uint64_t shl1(U256& a) {
    uint64_t out = a.w[3] >> 63;
    for (int i = 3; i > 0; --i) a.w[i] = (a.w[i] << 1) | (a.w[i - 1] >> 63);
    a.w[0] <<= 1;
    return out;
}

U256 mod(const U256& a, const U256& m) {
    if (m.isZero()) throw std::invalid_argument("mod by zero");
    if (a < m) return a;
    unsigned shift = 256 - m.bitLength();
    // Align m's top bit with bit 255, then walk down subtracting.
    U256 r = a;
    for (int s = int(shift); s >= 0; --s) {
        U256 t = m;
        for (int k = 0; k < s; ++k) shl1(t);
        if (r >= t) subBorrow(r, t);
    }
    return r;
}

U256 addMod(const U256& a, const U256& b, const U256& m) {
    U256 r = a;
    uint64_t carry = addCarry(r, b);
    if (carry || r >= m) subBorrow(r, m);
    return r;
}

U256 subMod(const U256& a, const U256& b, const U256& m) {
    U256 r = a;
    if (subBorrow(r, b)) addCarry(r, m);
    return r;
}

std::array<uint8_t, 32> toBytesBE(const U256& a) {
    std::array<uint8_t, 32> out{};
    for (int i = 0; i < 4; ++i) {
        uint64_t v = a.w[3 - i];
        for (int j = 0; j < 8; ++j) out[i * 8 + j] = uint8_t(v >> (56 - 8 * j));
    }
    return out;
}

U256 fromBytesBE(std::span<const uint8_t> bytes) {
    if (bytes.size() > 32) throw std::invalid_argument("u256: more than 32 bytes");
    U256 r;
    for (size_t i = 0; i < bytes.size(); ++i) {
        size_t bitpos = (bytes.size() - 1 - i) * 8;
        r.w[bitpos >> 6] |= uint64_t(bytes[i]) << (bitpos & 63);
    }
    return r;
}

std::string toDec(const U256& a) {
    if (a.isZero()) return "0";
    U256 v = a;
    std::string out;
    while (!v.isZero()) {
        // divide by 10, collect remainder
        uint64_t rem = 0;
        for (int i = 3; i >= 0; --i) {
            u128 cur = (u128(rem) << 64) | v.w[i];
            v.w[i] = uint64_t(cur / 10);
            rem = uint64_t(cur % 10);
        }
        out.push_back(char('0' + rem));
    }
    return {out.rbegin(), out.rend()};
}

U256 fromDec(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty decimal string");
    U256 r;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit");
        // r = r*10 + d
        u128 carry = uint64_t(c - '0');
        for (int i = 0; i < 4; ++i) {
            u128 cur = u128(r.w[i]) * 10 + carry;
            r.w[i] = uint64_t(cur);
            carry = cur >> 64;
        }
        if (carry) throw std::out_of_range("decimal overflows 256 bits");
    }
    return r;
}

std::string toHex(const U256& a) {
    static const char* digits = "0123456789abcdef";
    auto bytes = toBytesBE(a);
    std::string out(64, '0');
    for (size_t i = 0; i < 32; ++i) {
        out[2 * i] = digits[bytes[i] >> 4];
        out[2 * i + 1] = digits[bytes[i] & 0xf];
    }
    return out;
}

U256 fromHexStr(const std::string& s) {
    if (s.size() > 64) throw std::invalid_argument("hex too long for u256");
    U256 r;
    for (char c : s) {
        uint64_t d;
        if (c >= '0' && c <= '9') d = uint64_t(c - '0');
        else if (c >= 'a' && c <= 'f') d = uint64_t(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') d = uint64_t(c - 'A' + 10);
        else throw std::invalid_argument("bad hex digit");
        for (int i = 3; i > 0; --i) r.w[i] = (r.w[i] << 4) | (r.w[i - 1] >> 60);
        r.w[0] = (r.w[0] << 4) | d;
    }
    return r;
}

}  // namespace zkfi

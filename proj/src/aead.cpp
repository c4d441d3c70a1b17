#include "zkfi/aead.hpp"

#include <cstring>

namespace zkfi {

namespace {

inline uint32_t rotl32(uint32_t v, int n) { return (v << n) | (v >> (32 - n)); }

inline void quarterRound(uint32_t& a, uint32_t& b, uint32_t& c, uint32_t& d) {
    a += b; d ^= a; d = rotl32(d, 16);
    c += d; b ^= c; b = rotl32(b, 12);
    a += b; d ^= a; d = rotl32(d, 8);
    c += d; b ^= c; b = rotl32(b, 7);
}

inline uint32_t load32le(const uint8_t* p) {
    return uint32_t(p[0]) | uint32_t(p[1]) << 8 | uint32_t(p[2]) << 16 | uint32_t(p[3]) << 24;
}

void chachaBlock(const uint8_t key[32], const uint8_t nonce[12], uint32_t counter, uint8_t out[64]) {
    uint32_t st[16];
    st[0] = 0x61707865; st[1] = 0x3320646e; st[2] = 0x79622d32; st[3] = 0x6b206574;
    for (int i = 0; i < 8; ++i) st[4 + i] = load32le(key + 4 * i);
    st[12] = counter;
    for (int i = 0; i < 3; ++i) st[13 + i] = load32le(nonce + 4 * i);

    uint32_t x[16];
    std::memcpy(x, st, sizeof(x));
    for (int i = 0; i < 10; ++i) {
        quarterRound(x[0], x[4], x[8], x[12]);
        quarterRound(x[1], x[5], x[9], x[13]);
        quarterRound(x[2], x[6], x[10], x[14]);
        quarterRound(x[3], x[7], x[11], x[15]);
        quarterRound(x[0], x[5], x[10], x[15]);
        quarterRound(x[1], x[6], x[11], x[12]);
        quarterRound(x[2], x[7], x[8], x[13]);
        quarterRound(x[3], x[4], x[9], x[14]);
    }
    for (int i = 0; i < 16; ++i) {
        uint32_t v = x[i] + st[i];
        out[4 * i] = uint8_t(v);
        out[4 * i + 1] = uint8_t(v >> 8);
        out[4 * i + 2] = uint8_t(v >> 16);
        out[4 * i + 3] = uint8_t(v >> 24);
    }
}

void chachaXor(const uint8_t key[32], const uint8_t nonce[12], uint32_t counter,
               std::span<const uint8_t> in, uint8_t* out) {
    uint8_t block[64];
    size_t off = 0;
    while (off < in.size()) {
        chachaBlock(key, nonce, counter++, block);
        size_t n = std::min(size_t(64), in.size() - off);
        for (size_t i = 0; i < n; ++i) out[off + i] = in[off + i] ^ block[i];
        off += n;
    }
}

// Poly1305 over 5 x 26-bit limbs.
struct Poly1305 {
    uint32_t r[5];
    uint32_t h[5] = {0, 0, 0, 0, 0};
    uint32_t pad[4];

    explicit Poly1305(const uint8_t key[32]) {
        r[0] = load32le(key) & 0x3ffffff;
        r[1] = (load32le(key + 3) >> 2) & 0x3ffff03;
        r[2] = (load32le(key + 6) >> 4) & 0x3ffc0ff;
        r[3] = (load32le(key + 9) >> 6) & 0x3f03fff;
        r[4] = (load32le(key + 12) >> 8) & 0x00fffff;
        for (int i = 0; i < 4; ++i) pad[i] = load32le(key + 16 + 4 * i);
    }

    void blocks(std::span<const uint8_t> m, bool final) {
        const uint32_t hibit = final ? 0 : (1u << 24);
        uint32_t r0 = r[0], r1 = r[1], r2 = r[2], r3 = r[3], r4 = r[4];
        uint32_t s1 = r1 * 5, s2 = r2 * 5, s3 = r3 * 5, s4 = r4 * 5;
        uint32_t h0 = h[0], h1 = h[1], h2 = h[2], h3 = h[3], h4 = h[4];
        size_t off = 0;
        while (off + 16 <= m.size()) {
            const uint8_t* p = m.data() + off;
            h0 += load32le(p) & 0x3ffffff;
            h1 += (load32le(p + 3) >> 2) & 0x3ffffff;
            h2 += (load32le(p + 6) >> 4) & 0x3ffffff;
            h3 += (load32le(p + 9) >> 6) & 0x3ffffff;
            h4 += (load32le(p + 12) >> 8) | hibit;

            uint64_t d0 = uint64_t(h0) * r0 + uint64_t(h1) * s4 + uint64_t(h2) * s3 + uint64_t(h3) * s2 + uint64_t(h4) * s1;
            uint64_t d1 = uint64_t(h0) * r1 + uint64_t(h1) * r0 + uint64_t(h2) * s4 + uint64_t(h3) * s3 + uint64_t(h4) * s2;
            uint64_t d2 = uint64_t(h0) * r2 + uint64_t(h1) * r1 + uint64_t(h2) * r0 + uint64_t(h3) * s4 + uint64_t(h4) * s3;
            uint64_t d3 = uint64_t(h0) * r3 + uint64_t(h1) * r2 + uint64_t(h2) * r1 + uint64_t(h3) * r0 + uint64_t(h4) * s4;
            uint64_t d4 = uint64_t(h0) * r4 + uint64_t(h1) * r3 + uint64_t(h2) * r2 + uint64_t(h3) * r1 + uint64_t(h4) * r0;

            uint64_t c;
            c = d0 >> 26; h0 = uint32_t(d0) & 0x3ffffff;
            d1 += c; c = d1 >> 26; h1 = uint32_t(d1) & 0x3ffffff;
            d2 += c; c = d2 >> 26; h2 = uint32_t(d2) & 0x3ffffff;
            d3 += c; c = d3 >> 26; h3 = uint32_t(d3) & 0x3ffffff;
            d4 += c; c = d4 >> 26; h4 = uint32_t(d4) & 0x3ffffff;
            h0 += uint32_t(c) * 5; c = h0 >> 26; h0 &= 0x3ffffff;
            h1 += uint32_t(c);

            off += 16;
        }
        h[0] = h0; h[1] = h1; h[2] = h2; h[3] = h3; h[4] = h4;
    }

    // One-shot MAC input; a trailing partial block is 0x01-padded.
    void absorb(std::span<const uint8_t> m) {
        size_t full = (m.size() / 16) * 16;
        blocks(m.first(full), false);
        if (full < m.size()) {
            uint8_t blk[16] = {0};
            std::memcpy(blk, m.data() + full, m.size() - full);
            blk[m.size() - full] = 1;
            blocks(std::span<const uint8_t>(blk, 16), true);
        }
    }

    std::array<uint8_t, 16> finish() {
        uint32_t h0 = h[0], h1 = h[1], h2 = h[2], h3 = h[3], h4 = h[4];
        uint32_t c;
        c = h1 >> 26; h1 &= 0x3ffffff;
        h2 += c; c = h2 >> 26; h2 &= 0x3ffffff;
        h3 += c; c = h3 >> 26; h3 &= 0x3ffffff;
        h4 += c; c = h4 >> 26; h4 &= 0x3ffffff;
        h0 += c * 5; c = h0 >> 26; h0 &= 0x3ffffff;
        h1 += c;

        // compare to p = 2^130 - 5
        uint32_t g0 = h0 + 5; c = g0 >> 26; g0 &= 0x3ffffff;
        uint32_t g1 = h1 + c; c = g1 >> 26; g1 &= 0x3ffffff;
        uint32_t g2 = h2 + c; c = g2 >> 26; g2 &= 0x3ffffff;
        uint32_t g3 = h3 + c; c = g3 >> 26; g3 &= 0x3ffffff;
        uint32_t g4 = h4 + c - (1u << 26);

        uint32_t mask = (g4 >> 31) - 1;  // all-ones if h >= p
        h0 = (h0 & ~mask) | (g0 & mask);
        h1 = (h1 & ~mask) | (g1 & mask);
        h2 = (h2 & ~mask) | (g2 & mask);
        h3 = (h3 & ~mask) | (g3 & mask);
        h4 = (h4 & ~mask) | (g4 & mask);

        uint32_t w0 = h0 | (h1 << 26);
        uint32_t w1 = (h1 >> 6) | (h2 << 20);
        uint32_t w2 = (h2 >> 12) | (h3 << 14);
        uint32_t w3 = (h3 >> 18) | (h4 << 8);

        uint64_t f;
        std::array<uint8_t, 16> out;
        f = uint64_t(w0) + pad[0];
        out[0] = uint8_t(f); out[1] = uint8_t(f >> 8); out[2] = uint8_t(f >> 16); out[3] = uint8_t(f >> 24);
        f = uint64_t(w1) + pad[1] + (f >> 32);
        out[4] = uint8_t(f); out[5] = uint8_t(f >> 8); out[6] = uint8_t(f >> 16); out[7] = uint8_t(f >> 24);
        f = uint64_t(w2) + pad[2] + (f >> 32);
        out[8] = uint8_t(f); out[9] = uint8_t(f >> 8); out[10] = uint8_t(f >> 16); out[11] = uint8_t(f >> 24);
        f = uint64_t(w3) + pad[3] + (f >> 32);
        out[12] = uint8_t(f); out[13] = uint8_t(f >> 8); out[14] = uint8_t(f >> 16); out[15] = uint8_t(f >> 24);
        return out;
    }
};

std::array<uint8_t, 16> computeTag(const uint8_t key[32], const uint8_t nonce[12],
                                   std::span<const uint8_t> aad, std::span<const uint8_t> ciphertext) {
    uint8_t block0[64];
    chachaBlock(key, nonce, 0, block0);
    Poly1305 mac(block0);

    // aad || pad16 || ciphertext || pad16 || len(aad) || len(ciphertext)
    std::vector<uint8_t> data;
    data.reserve(((aad.size() + 15) & ~size_t(15)) + ((ciphertext.size() + 15) & ~size_t(15)) + 16);
    data.insert(data.end(), aad.begin(), aad.end());
    data.resize((data.size() + 15) & ~size_t(15), 0);
    data.insert(data.end(), ciphertext.begin(), ciphertext.end());
    data.resize((data.size() + 15) & ~size_t(15), 0);
    uint64_t alen = aad.size(), clen = ciphertext.size();
    for (int i = 0; i < 8; ++i) data.push_back(uint8_t(alen >> (8 * i)));
    for (int i = 0; i < 8; ++i) data.push_back(uint8_t(clen >> (8 * i)));
    mac.absorb(data);
    return mac.finish();
}

}  // namespace

std::vector<uint8_t> aeadEncrypt(std::span<const uint8_t, kAeadKeySize> key,
                                 std::span<const uint8_t, kAeadNonceSize> nonce,
                                 std::span<const uint8_t> plaintext,
                                 std::span<const uint8_t> aad) {
    std::vector<uint8_t> out(plaintext.size() + kAeadTagSize);
    chachaXor(key.data(), nonce.data(), 1, plaintext, out.data());
    auto tag = computeTag(key.data(), nonce.data(), aad, std::span<const uint8_t>(out.data(), plaintext.size()));
    std::memcpy(out.data() + plaintext.size(), tag.data(), kAeadTagSize);
    return out;
}

std::optional<std::vector<uint8_t>> aeadDecrypt(std::span<const uint8_t, kAeadKeySize> key,
                                                std::span<const uint8_t, kAeadNonceSize> nonce,
                                                std::span<const uint8_t> ciphertextAndTag,
                                                std::span<const uint8_t> aad) {
    if (ciphertextAndTag.size() < kAeadTagSize) return std::nullopt;
    auto ciphertext = ciphertextAndTag.first(ciphertextAndTag.size() - kAeadTagSize);
    auto tag = computeTag(key.data(), nonce.data(), aad, ciphertext);
    uint8_t diff = 0;
    for (size_t i = 0; i < kAeadTagSize; ++i) diff |= tag[i] ^ ciphertextAndTag[ciphertext.size() + i];
    if (diff) return std::nullopt;
    std::vector<uint8_t> out(ciphertext.size());
    chachaXor(key.data(), nonce.data(), 1, ciphertext, out.data());
    return out;
}

}  // namespace zkfi

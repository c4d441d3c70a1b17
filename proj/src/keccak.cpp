#include "zkfi/keccak.hpp"

#include <cstring>

namespace zkfi {

namespace {

constexpr uint64_t kRoundConst[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL, 0x8000000080008000ULL,
    0x000000000000808bULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
    0x000000000000008aULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
    0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800aULL, 0x800000008000000aULL,
    0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// rho rotation offsets, indexed [x][y]
constexpr unsigned kRot[5][5] = {
    {0, 36, 3, 41, 18},
    {1, 44, 10, 45, 2},
    {62, 6, 43, 15, 61},
    {28, 55, 25, 21, 56},
    {27, 20, 39, 8, 14},
};

inline uint64_t rotl(uint64_t v, unsigned n) { return n == 0 ? v : (v << n) | (v >> (64 - n)); }

void keccakF1600(uint64_t a[5][5]) {
    for (int round = 0; round < 24; ++round) {
        // theta
        uint64_t c[5], d[5];
        for (int x = 0; x < 5; ++x) c[x] = a[x][0] ^ a[x][1] ^ a[x][2] ^ a[x][3] ^ a[x][4];
        for (int x = 0; x < 5; ++x) d[x] = c[(x + 4) % 5] ^ rotl(c[(x + 1) % 5], 1);
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y) a[x][y] ^= d[x];
        // rho + pi
        uint64_t b[5][5];
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y) b[y][(2 * x + 3 * y) % 5] = rotl(a[x][y], kRot[x][y]);
        // chi
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y) a[x][y] = b[x][y] ^ ((~b[(x + 1) % 5][y]) & b[(x + 2) % 5][y]);
        // iota
        a[0][0] ^= kRoundConst[round];
    }
}

}  // namespace

Bytes32 keccak256(std::span<const uint8_t> message) {
    constexpr size_t kRate = 136;  // 1088-bit rate
    uint64_t state[5][5];
    std::memset(state, 0, sizeof(state));

    uint8_t block[kRate];
    size_t offset = 0;
    auto absorb = [&](const uint8_t* data) {
        for (size_t i = 0; i < kRate / 8; ++i) {
            uint64_t lane = 0;
            for (int j = 0; j < 8; ++j) lane |= uint64_t(data[i * 8 + j]) << (8 * j);
            state[i % 5][i / 5] ^= lane;
        }
        keccakF1600(state);
    };

    while (message.size() - offset >= kRate) {
        absorb(message.data() + offset);
        offset += kRate;
    }
    size_t tail = message.size() - offset;
    std::memset(block, 0, sizeof(block));
    if (tail) std::memcpy(block, message.data() + offset, tail);
    block[tail] ^= 0x01;
    block[kRate - 1] ^= 0x80;
    absorb(block);

    Bytes32 out;
    for (size_t i = 0; i < 4; ++i) {
        uint64_t lane = state[i % 5][i / 5];
        for (int j = 0; j < 8; ++j) out[i * 8 + j] = uint8_t(lane >> (8 * j));
    }
    return out;
}

Bytes32 keccak256(std::string_view message) {
    return keccak256(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(message.data()), message.size()));
}

}  // namespace zkfi

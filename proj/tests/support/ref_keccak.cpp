#include "support/ref_keccak.hpp"

namespace zkfi_ref {

namespace {

// rc(t): bit stream from x^t mod x^8 + x^6 + x^5 + x^4 + 1 over GF(2).
int rcBit(int t) {
    if (t % 255 == 0) return 1;
    uint16_t r = 0x01;
    for (int i = 1; i <= t % 255; ++i) {
        r <<= 1;
        if (r & 0x100) r ^= 0x171;  // x^8 + x^6 + x^5 + x^4 + 1
    }
    return r & 1;
}

uint64_t roundConstant(int round) {
    uint64_t rc = 0;
    for (int j = 0; j <= 6; ++j) {
        if (rcBit(j + 7 * round)) rc |= uint64_t(1) << ((1 << j) - 1);
    }
    return rc;
}

uint64_t rol(uint64_t v, unsigned n) {
    n %= 64;
    return n ? (v << n) | (v >> (64 - n)) : v;
}

}  // namespace

std::vector<uint8_t> keccak256Ref(const std::vector<uint8_t>& message) {
    // rho offsets via the (x,y) walk: start at (1,0), offset_t = (t+1)(t+2)/2.
    unsigned rho[25] = {0};
    {
        int x = 1, y = 0;
        for (int t = 0; t < 24; ++t) {
            rho[x + 5 * y] = unsigned(((t + 1) * (t + 2) / 2) % 64);
            int nx = y, ny = (2 * x + 3 * y) % 5;
            x = nx;
            y = ny;
        }
    }

    uint64_t lanes[25] = {0};
    const size_t rate = 136;

    std::vector<uint8_t> padded = message;
    padded.push_back(0x01);
    while (padded.size() % rate != 0) padded.push_back(0x00);
    padded.back() ^= 0x80;

    for (size_t block = 0; block < padded.size(); block += rate) {
        for (size_t i = 0; i < rate; ++i) lanes[i / 8] ^= uint64_t(padded[block + i]) << (8 * (i % 8));

        for (int round = 0; round < 24; ++round) {
            uint64_t c[5], d[5];
            for (int x = 0; x < 5; ++x)
                c[x] = lanes[x] ^ lanes[x + 5] ^ lanes[x + 10] ^ lanes[x + 15] ^ lanes[x + 20];
            for (int x = 0; x < 5; ++x) d[x] = c[(x + 4) % 5] ^ rol(c[(x + 1) % 5], 1);
            for (int i = 0; i < 25; ++i) lanes[i] ^= d[i % 5];

            uint64_t b[25];
            for (int x = 0; x < 5; ++x)
                for (int y = 0; y < 5; ++y)
                    b[y + 5 * ((2 * x + 3 * y) % 5)] = rol(lanes[x + 5 * y], rho[x + 5 * y]);

            for (int x = 0; x < 5; ++x)
                for (int y = 0; y < 5; ++y)
                    lanes[x + 5 * y] = b[x + 5 * y] ^ (~b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]);

            lanes[0] ^= roundConstant(round);
        }
    }

    std::vector<uint8_t> digest(32);
    for (size_t i = 0; i < 32; ++i) digest[i] = uint8_t(lanes[i / 8] >> (8 * (i % 8)));
    return digest;
}

std::string keccak256RefHex(const std::vector<uint8_t>& message) {
    static const char* digits = "0123456789abcdef";
    auto d = keccak256Ref(message);
    std::string out;
    for (uint8_t b : d) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

}  // namespace zkfi_ref

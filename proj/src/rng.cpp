#include "zkfi/rng.hpp"

#include <cstring>
#include <mutex>
#include <random>

namespace zkfi {

namespace {

void osRandom(std::span<uint8_t> out) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    static std::random_device dev;
    size_t i = 0;
    while (i < out.size()) {
        unsigned int r = dev();
        size_t n = std::min(sizeof(r), out.size() - i);
        std::memcpy(out.data() + i, &r, n);
        i += n;
    }
}

}  // namespace

Rng::Rng(bool seeded, uint64_t seed) : seeded_(seeded) {
    if (seeded_) {
        uint8_t buf[16] = {'z', 'k', 'f', 'i', '/', 'r', 'n', 'g'};
        for (int i = 0; i < 8; ++i) buf[8 + i] = uint8_t(seed >> (56 - 8 * i));
        state_ = keccak256(std::span<const uint8_t>(buf, sizeof(buf)));
    }
}

Rng Rng::live() { return Rng(false, 0); }
Rng Rng::seeded(uint64_t seed) { return Rng(true, seed); }

Bytes32 Rng::entropy() {
    Bytes32 out;
    fill(out);
    return out;
}

void Rng::fill(std::span<uint8_t> out) {
    if (!seeded_) {
        osRandom(out);
        return;
    }
    size_t off = 0;
    while (off < out.size()) {
        uint8_t buf[40];
        std::memcpy(buf, state_.data(), 32);
        for (int i = 0; i < 8; ++i) buf[32 + i] = uint8_t(counter_ >> (56 - 8 * i));
        ++counter_;
        Bytes32 block = keccak256(std::span<const uint8_t>(buf, sizeof(buf)));
        size_t n = std::min(size_t(32), out.size() - off);
        std::memcpy(out.data() + off, block.data(), n);
        off += n;
    }
}

Fq Rng::field() {
    for (;;) {
        Bytes32 buf = entropy();
        buf[0] &= 0x3f;  // 254-bit candidate
        U256 v = fromBytesBE(buf);
        if (v < fqModulus()) return Fq::fromU256(v);
    }
}

Fr Rng::scalar() {
    for (;;) {
        Bytes32 buf = entropy();
        buf[0] = 0;  // 248-bit candidate, always below the subgroup order
        U256 v = fromBytesBE(buf);
        if (!v.isZero()) return Fr::fromU256(v);
    }
}

U256 Rng::bits248() {
    Bytes32 buf = entropy();
    buf[0] = 0;
    return fromBytesBE(buf);
}

uint64_t Rng::uniform(uint64_t bound) {
    if (bound == 0) return 0;
    for (;;) {
        uint8_t buf[8];
        fill(buf);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | buf[i];
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        if (v < limit) return v % bound;
    }
}

}  // namespace zkfi

#include "zkfi/field.hpp"

namespace zkfi {

using u128 = unsigned __int128;

namespace {

uint64_t negInvMod64(uint64_t m) {
    // Newton iteration for m^-1 mod 2^64, m odd.
    uint64_t x = 1;
    for (int i = 0; i < 6; ++i) x *= 2 - m * x;
    return ~x + 1;  // -m^-1
}

U256 pow2ModN(unsigned bits, const U256& m) {
    // 2^bits mod m by shift-and-reduce.
    U256 r(1);
    r = mod(r, m);
    for (unsigned i = 0; i < bits; ++i) {
        uint64_t out = shl1(r);
        if (out || r >= m) subBorrow(r, m);
    }
    return r;
}

}  // namespace

MontCtx MontCtx::make(const U256& modulus) {
    MontCtx c;
    c.modulus = modulus;
    c.n0inv = negInvMod64(modulus.w[0]);
    c.r2 = pow2ModN(512, modulus);
    c.oneMont = pow2ModN(256, modulus);
    return c;
}

U256 MontCtx::mul(const U256& a, const U256& b) const {
    // CIOS Montgomery multiplication, 4 limbs.
    uint64_t t[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        u128 carry = 0;
        for (int j = 0; j < 4; ++j) {
            u128 cur = u128(a.w[j]) * b.w[i] + t[j] + carry;
            t[j] = uint64_t(cur);
            carry = cur >> 64;
        }
        u128 cur = u128(t[4]) + carry;
        t[4] = uint64_t(cur);
        t[5] = uint64_t(cur >> 64);

        uint64_t mFactor = t[0] * n0inv;
        carry = 0;
        {
            u128 c0 = u128(mFactor) * modulus.w[0] + t[0];
            carry = c0 >> 64;
        }
        for (int j = 1; j < 4; ++j) {
            u128 cur2 = u128(mFactor) * modulus.w[j] + t[j] + carry;
            t[j - 1] = uint64_t(cur2);
            carry = cur2 >> 64;
        }
        u128 cur3 = u128(t[4]) + carry;
        t[3] = uint64_t(cur3);
        t[4] = t[5] + uint64_t(cur3 >> 64);
    }
    U256 r{t[0], t[1], t[2], t[3]};
    if (t[4] || r >= modulus) subBorrow(r, modulus);
    return r;
}

namespace {

const U256 kFqModulus = fromDec("21888242871839275222246405745257275088548364400416034343698204186575808495617");
const U256 kFrModulus = fromDec("2736030358979909402780800718157159386076813972158567259200215660948447373041");

}  // namespace

const U256& fqModulus() { return kFqModulus; }
const U256& frModulus() { return kFrModulus; }

const MontCtx& FqTag::ctx() {
    static const MontCtx c = MontCtx::make(kFqModulus);
    return c;
}

const MontCtx& FrTag::ctx() {
    static const MontCtx c = MontCtx::make(kFrModulus);
    return c;
}

}  // namespace zkfi

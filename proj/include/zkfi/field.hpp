#ifndef ZKFI_FIELD_HPP_
#define ZKFI_FIELD_HPP_

#include <span>
#include <stdexcept>
#include <string>

#include "zkfi/u256.hpp"

namespace zkfi {

// Montgomery multiplication context for an odd 256-bit modulus.
struct MontCtx {
    U256 modulus;
    uint64_t n0inv = 0;  // -modulus^-1 mod 2^64
    U256 r2;             // 2^512 mod modulus
    U256 oneMont;        // 2^256 mod modulus (Montgomery form of 1)

    static MontCtx make(const U256& modulus);

    U256 mul(const U256& a, const U256& b) const;  // Montgomery product abR^-1 mod m
    U256 toMont(const U256& a) const { return mul(a, r2); }
    U256 fromMont(const U256& a) const { return mul(a, U256(1)); }
};

// Prime-field element in Montgomery form. Tag supplies the modulus context,
// so Fq (curve base field) and Fr (subgroup scalar field) are distinct types.
template <class Tag>
class Modular {
  public:
    Modular() = default;
    explicit Modular(uint64_t v) : m_(ctx().toMont(U256(v))) {}

    static Modular fromU256(const U256& v) {
        Modular r;
        r.m_ = ctx().toMont(v);  // reduces any 256-bit value
        return r;
    }
    static Modular fromBytesBE(std::span<const uint8_t> b) { return fromU256(zkfi::fromBytesBE(b)); }
    static Modular fromDec(const std::string& s) { return fromU256(zkfi::fromDec(s)); }
    static Modular fromHex(const std::string& s) { return fromU256(zkfi::fromHexStr(s)); }
    static Modular zero() { return Modular(); }
    static Modular one() { Modular r; r.m_ = ctx().oneMont; return r; }

    U256 toU256() const { return ctx().fromMont(m_); }
    std::array<uint8_t, 32> toBytesBE() const { return zkfi::toBytesBE(toU256()); }
    std::string toHex() const { return zkfi::toHex(toU256()); }
    std::string toDec() const { return zkfi::toDec(toU256()); }

    bool isZero() const { return m_.isZero(); }
    bool operator==(const Modular&) const = default;

    Modular operator+(const Modular& o) const {
        Modular r;
        r.m_ = addMod(m_, o.m_, ctx().modulus);
        return r;
    }
    Modular operator-(const Modular& o) const {
        Modular r;
        r.m_ = subMod(m_, o.m_, ctx().modulus);
        return r;
    }
    Modular operator-() const { return zero() - *this; }
    Modular operator*(const Modular& o) const {
        Modular r;
        r.m_ = ctx().mul(m_, o.m_);
        return r;
    }
    Modular& operator+=(const Modular& o) { return *this = *this + o; }
    Modular& operator-=(const Modular& o) { return *this = *this - o; }
    Modular& operator*=(const Modular& o) { return *this = *this * o; }

    Modular square() const { return *this * *this; }

    Modular pow(const U256& e) const {
        Modular base = *this, acc = one();
        unsigned n = e.bitLength();
        for (unsigned i = 0; i < n; ++i) {
            if (e.bit(i)) acc *= base;
            base = base.square();
        }
        return acc;
    }

    // Multiplicative inverse via Fermat; throws on zero.
    Modular inverse() const {
        if (isZero()) throw std::domain_error("inverse of zero");
        U256 e = ctx().modulus;
        subBorrow(e, U256(2));
        return pow(e);
    }

    static const MontCtx& ctx() { return Tag::ctx(); }
    static const U256& modulus() { return ctx().modulus; }

    // Raw Montgomery limbs (for hashing/ordering only).
    const U256& raw() const { return m_; }

  private:
    U256 m_;
};

struct FqTag {
    static const MontCtx& ctx();
};
struct FrTag {
    static const MontCtx& ctx();
};

// Fq: the field Baby JubJub is defined over (the BN254 group order prime).
using Fq = Modular<FqTag>;
// Fr: integers modulo the prime order of the Baby JubJub subgroup.
using Fr = Modular<FrTag>;

// Curve base field prime and subgroup order as integers.
const U256& fqModulus();
const U256& frModulus();

}  // namespace zkfi

#endif

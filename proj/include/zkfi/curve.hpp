#ifndef ZKFI_CURVE_HPP_
#define ZKFI_CURVE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "zkfi/field.hpp"

namespace zkfi {

// Baby JubJub: twisted Edwards curve a*x^2 + y^2 = 1 + d*x^2*y^2 over Fq,
// a = 168700, d = 168696. Points of interest live in the prime-order
// subgroup (order frModulus(), cofactor 8).
struct AffinePoint {
    Fq x;
    Fq y;

    bool operator==(const AffinePoint&) const = default;
    bool isIdentity() const { return x.isZero() && y == Fq::one(); }
};

AffinePoint identityPoint();

// Subgroup generator (the standard base point of the prime-order subgroup).
const AffinePoint& basePoint();

const Fq& curveA();
const Fq& curveD();

bool isOnCurve(const AffinePoint& p);
bool inSubgroup(const AffinePoint& p);

// Group law; operands must satisfy the curve equation.
AffinePoint pointAdd(const AffinePoint& a, const AffinePoint& b);
AffinePoint pointNeg(const AffinePoint& p);

// k * p with k an arbitrary 256-bit integer (reduced by the group structure).
AffinePoint scalarMul(const U256& k, const AffinePoint& p);
AffinePoint scalarMul(const Fr& k, const AffinePoint& p);
// k * basePoint() using a cached window table.
AffinePoint mulBase(const Fr& k);

// 32-byte compression: big-endian y with the top bit carrying sign(x),
// where sign(x) means x > (q-1)/2.
std::array<uint8_t, 32> compressPoint(const AffinePoint& p);
std::optional<AffinePoint> decompressPoint(std::span<const uint8_t> bytes);

// Square root in Fq (Tonelli-Shanks); empty when no root exists.
std::optional<Fq> sqrtFq(const Fq& a);

}  // namespace zkfi

#endif

#include "zkfi/curve.hpp"

#include <vector>

#include "zkfi/errors.hpp"

namespace zkfi {

namespace {

// Extended twisted Edwards coordinates (X : Y : T : Z), T = XY/Z.
struct ExtPoint {
    Fq x, y, t, z;
};

ExtPoint toExt(const AffinePoint& p) { return {p.x, p.y, p.x * p.y, Fq::one()}; }

AffinePoint toAffine(const ExtPoint& p) {
    Fq zinv = p.z.inverse();
    return {p.x * zinv, p.y * zinv};
}

ExtPoint extIdentity() { return {Fq::zero(), Fq::one(), Fq::zero(), Fq::one()}; }

// Unified addition (add-2008-hwcd), valid for doubling as well.
ExtPoint extAdd(const ExtPoint& p, const ExtPoint& q) {
    Fq a = p.x * q.x;
    Fq b = p.y * q.y;
    Fq c = curveD() * p.t * q.t;
    Fq d = p.z * q.z;
    Fq e = (p.x + p.y) * (q.x + q.y) - a - b;
    Fq f = d - c;
    Fq g = d + c;
    Fq h = b - curveA() * a;
    return {e * f, g * h, e * h, f * g};
}

// Dedicated doubling (dbl-2008-hwcd).
ExtPoint extDouble(const ExtPoint& p) {
    Fq a = p.x.square();
    Fq b = p.y.square();
    Fq c = p.z.square();
    c += c;
    Fq d = curveA() * a;
    Fq e = (p.x + p.y).square() - a - b;
    Fq g = d + b;
    Fq f = g - c;
    Fq h = d - b;
    return {e * f, g * h, e * h, f * g};
}

ExtPoint extScalarMul(const U256& k, const ExtPoint& base) {
    // 4-bit fixed window.
    ExtPoint table[16];
    table[0] = extIdentity();
    table[1] = base;
    for (int i = 2; i < 16; ++i) table[i] = extAdd(table[i - 1], base);

    ExtPoint acc = extIdentity();
    unsigned bits = k.bitLength();
    if (bits == 0) return acc;
    unsigned windows = (bits + 3) / 4;
    for (int w = int(windows) - 1; w >= 0; --w) {
        for (int i = 0; i < 4; ++i) acc = extDouble(acc);
        unsigned idx = unsigned((k.w[(w * 4) >> 6] >> ((w * 4) & 63)) & 0xf);
        if (idx) acc = extAdd(acc, table[idx]);
    }
    return acc;
}

}  // namespace

AffinePoint identityPoint() { return {Fq::zero(), Fq::one()}; }

const Fq& curveA() {
    static const Fq a(168700);
    return a;
}

const Fq& curveD() {
    static const Fq d(168696);
    return d;
}

const AffinePoint& basePoint() {
    static const AffinePoint g{
        Fq::fromDec("5299619240641551281634865583518297030282874472190772894086521144482721001553"),
        Fq::fromDec("16950150798460657717958625567821834550301663161624707787222815936182638968203")};
    return g;
}

bool isOnCurve(const AffinePoint& p) {
    Fq x2 = p.x.square();
    Fq y2 = p.y.square();
    return curveA() * x2 + y2 == Fq::one() + curveD() * x2 * y2;
}

bool inSubgroup(const AffinePoint& p) {
    if (!isOnCurve(p)) return false;
    return scalarMul(frModulus(), p).isIdentity();
}

AffinePoint pointAdd(const AffinePoint& a, const AffinePoint& b) {
    if (!isOnCurve(a) || !isOnCurve(b)) fail(Errc::OffCurve, "point_add operand not on curve");
    return toAffine(extAdd(toExt(a), toExt(b)));
}

AffinePoint pointNeg(const AffinePoint& p) { return {-p.x, p.y}; }

AffinePoint scalarMul(const U256& k, const AffinePoint& p) {
    if (!isOnCurve(p)) fail(Errc::OffCurve, "scalar_mul operand not on curve");
    if (k.isZero()) return identityPoint();
    return toAffine(extScalarMul(k, toExt(p)));
}

AffinePoint scalarMul(const Fr& k, const AffinePoint& p) { return scalarMul(k.toU256(), p); }

AffinePoint mulBase(const Fr& k) {
    // 64 windows of 4 bits over a cached table of small multiples of the base.
    static const std::vector<ExtPoint> table = [] {
        std::vector<ExtPoint> t(64 * 15);
        ExtPoint windowBase = toExt(basePoint());
        for (int w = 0; w < 64; ++w) {
            ExtPoint cur = windowBase;
            for (int i = 0; i < 15; ++i) {
                t[size_t(w) * 15 + size_t(i)] = cur;
                cur = extAdd(cur, windowBase);
            }
            windowBase = cur;  // windowBase * 16
        }
        return t;
    }();

    U256 v = k.toU256();
    ExtPoint acc = extIdentity();
    for (int w = 0; w < 64; ++w) {
        unsigned idx = unsigned((v.w[(w * 4) >> 6] >> ((w * 4) & 63)) & 0xf);
        if (idx) acc = extAdd(acc, table[size_t(w) * 15 + idx - 1]);
    }
    return toAffine(acc);
}

std::optional<Fq> sqrtFq(const Fq& a) {
    if (a.isZero()) return Fq::zero();
    // Tonelli-Shanks; q - 1 = odd * 2^s.
    static const struct TsCtx {
        U256 odd;       // (q-1) / 2^s
        unsigned s;
        Fq z;           // generator of the 2-Sylow subgroup
        U256 halfOdd1;  // (odd+1)/2
        U256 legendreExp;
    } ts = [] {
        TsCtx c;
        U256 m = fqModulus();
        subBorrow(m, U256(1));
        c.legendreExp = m;
        // halve legendreExp
        for (int i = 0; i < 3; ++i) c.legendreExp.w[i] = (c.legendreExp.w[i] >> 1) | (c.legendreExp.w[i + 1] << 63);
        c.legendreExp.w[3] >>= 1;
        c.s = 0;
        while (!m.bit(0)) {
            for (int i = 0; i < 3; ++i) m.w[i] = (m.w[i] >> 1) | (m.w[i + 1] << 63);
            m.w[3] >>= 1;
            ++c.s;
        }
        c.odd = m;
        c.halfOdd1 = m;
        addCarry(c.halfOdd1, U256(1));
        for (int i = 0; i < 3; ++i) c.halfOdd1.w[i] = (c.halfOdd1.w[i] >> 1) | (c.halfOdd1.w[i + 1] << 63);
        c.halfOdd1.w[3] >>= 1;
        // find a quadratic non-residue
        for (uint64_t cand = 2;; ++cand) {
            Fq z(cand);
            if (z.pow(c.legendreExp) != Fq::one()) {
                c.z = z.pow(c.odd);
                break;
            }
        }
        return c;
    }();

    if (a.pow(ts.legendreExp) != Fq::one()) return std::nullopt;

    Fq c = ts.z;
    Fq x = a.pow(ts.halfOdd1);
    Fq t = a.pow(ts.odd);
    unsigned m = ts.s;
    while (t != Fq::one()) {
        Fq t2 = t;
        unsigned i = 0;
        while (t2 != Fq::one()) {
            t2 = t2.square();
            ++i;
            if (i == m) return std::nullopt;
        }
        Fq b = c;
        for (unsigned j = 0; j < m - i - 1; ++j) b = b.square();
        x *= b;
        c = b.square();
        t *= c;
        m = i;
    }
    return x;
}

namespace {

bool xIsNegative(const Fq& x) {
    // negative = strictly greater than (q-1)/2
    static const U256 half = [] {
        U256 m = fqModulus();
        subBorrow(m, U256(1));
        for (int i = 0; i < 3; ++i) m.w[i] = (m.w[i] >> 1) | (m.w[i + 1] << 63);
        m.w[3] >>= 1;
        return m;
    }();
    return x.toU256() > half;
}

}  // namespace

std::array<uint8_t, 32> compressPoint(const AffinePoint& p) {
    auto out = p.y.toBytesBE();
    if (xIsNegative(p.x)) out[0] |= 0x80;
    return out;
}

std::optional<AffinePoint> decompressPoint(std::span<const uint8_t> bytes) {
    if (bytes.size() != 32) return std::nullopt;
    std::array<uint8_t, 32> buf;
    std::copy(bytes.begin(), bytes.end(), buf.begin());
    bool sign = buf[0] & 0x80;
    buf[0] &= 0x7f;
    U256 yInt = fromBytesBE(buf);
    if (yInt >= fqModulus()) return std::nullopt;
    Fq y = Fq::fromU256(yInt);
    // x^2 = (1 - y^2) / (a - d*y^2)
    Fq y2 = y.square();
    Fq denom = curveA() - curveD() * y2;
    if (denom.isZero()) return std::nullopt;
    Fq x2 = (Fq::one() - y2) * denom.inverse();
    auto x = sqrtFq(x2);
    if (!x) return std::nullopt;
    Fq xv = *x;
    if (xIsNegative(xv) != sign) xv = -xv;
    // sqrt may be zero with sign bit set: reject the non-canonical encoding
    if (xv.isZero() && sign) return std::nullopt;
    AffinePoint p{xv, y};
    if (!isOnCurve(p)) return std::nullopt;
    return p;
}

}  // namespace zkfi

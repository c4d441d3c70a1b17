#ifndef ZKFI_SHAMIR_HPP_
#define ZKFI_SHAMIR_HPP_

#include <set>
#include <span>
#include <vector>

#include "zkfi/errors.hpp"
#include "zkfi/field.hpp"
#include "zkfi/rng.hpp"

namespace zkfi {

template <class Fe>
struct Share {
    uint32_t index = 0;  // 1-based evaluation point
    Fe value;
};

// Shamir sharing over the field of Fe. Spec surface is over Fq; the
// threshold-decryption layer instantiates the same scheme over Fr, the
// scalar field of the curve group, where exponent interpolation lives.
using SecretShare = Share<Fq>;

template <class Fe>
std::vector<Share<Fe>> shamirSplit(const Fe& secret, unsigned threshold, unsigned count, Rng& rng) {
    if (threshold < 1 || threshold > count) fail(Errc::InvalidArgument, "need 1 <= t <= n");
    std::vector<Fe> coeffs(threshold);
    coeffs[0] = secret;
    for (unsigned i = 1; i < threshold; ++i) {
        Bytes32 raw = rng.entropy();
        raw[0] &= 0x3f;
        coeffs[i] = Fe::fromU256(fromBytesBE(raw));
    }
    std::vector<Share<Fe>> shares;
    shares.reserve(count);
    for (unsigned idx = 1; idx <= count; ++idx) {
        Fe x(idx);
        Fe acc = coeffs[threshold - 1];
        for (int i = int(threshold) - 2; i >= 0; --i) acc = acc * x + coeffs[size_t(i)];
        shares.push_back({idx, acc});
    }
    return shares;
}

template <class Fe>
Fe shamirCombine(std::span<const Share<Fe>> shares, unsigned threshold) {
    if (shares.size() < threshold) fail(Errc::ShareCount, "fewer shares than threshold");
    std::set<uint32_t> seen;
    for (const auto& s : shares) {
        if (s.index == 0) fail(Errc::InvalidArgument, "share index must be positive");
        if (!seen.insert(s.index).second) fail(Errc::DuplicateShare, "duplicate share index");
    }
    // Lagrange interpolation at zero over the first `threshold` shares.
    Fe secret;
    for (unsigned i = 0; i < threshold; ++i) {
        Fe num = Fe(1), den = Fe(1);
        Fe xi(shares[i].index);
        for (unsigned j = 0; j < threshold; ++j) {
            if (i == j) continue;
            Fe xj(shares[j].index);
            num = num * xj;
            den = den * (xj - xi);
        }
        secret = secret + shares[i].value * num * den.inverse();
    }
    return secret;
}

// Lagrange coefficient at zero for point `index` within `indices`.
template <class Fe>
Fe lagrangeAtZero(uint32_t index, std::span<const uint32_t> indices) {
    Fe num = Fe(1), den = Fe(1);
    Fe xi(index);
    for (uint32_t other : indices) {
        if (other == index) continue;
        Fe xj(other);
        num = num * xj;
        den = den * (xj - xi);
    }
    return num * den.inverse();
}

}  // namespace zkfi

#endif

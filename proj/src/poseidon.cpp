#include "zkfi/poseidon.hpp"

#include <mutex>

#include "zkfi/errors.hpp"

namespace zkfi {

namespace {

// Partial round counts for widths t = 2..7 (alpha = 5, 128-bit security).
constexpr unsigned kPartialRounds[6] = {56, 57, 56, 60, 60, 63};
constexpr unsigned kFullRounds = 8;

// Grain LFSR in self-shrinking mode, seeded from the instance parameters.
class GrainLfsr {
  public:
    GrainLfsr(unsigned fieldKind, unsigned sboxKind, unsigned fieldBits, unsigned t, unsigned rf, unsigned rp) {
        unsigned pos = 0;
        auto push = [&](uint64_t value, unsigned bits) {
            for (unsigned i = 0; i < bits; ++i) state_[pos++] = uint8_t((value >> (bits - 1 - i)) & 1);
        };
        push(fieldKind, 2);
        push(sboxKind, 4);
        push(fieldBits, 12);
        push(t, 12);
        push(rf, 10);
        push(rp, 10);
        for (unsigned i = 0; i < 30; ++i) state_[pos++] = 1;
        for (int i = 0; i < 160; ++i) step();
    }

    // Next self-shrunk output bit: from each raw bit pair, the second bit is
    // emitted only when the first bit is 1.
    uint8_t nextBit() {
        for (;;) {
            uint8_t gate = step();
            uint8_t out = step();
            if (gate) return out;
        }
    }

    U256 nextBits(unsigned count) {
        U256 v;
        for (unsigned i = 0; i < count; ++i) {
            if (shl1(v)) fail(Errc::InvalidArgument, "grain sample too wide");
            v.w[0] |= nextBit();
        }
        return v;
    }

    // Field element by rejection sampling of fieldBits-wide integers.
    Fq nextFieldRejection(unsigned fieldBits, const U256& modulus) {
        for (;;) {
            U256 v = nextBits(fieldBits);
            if (v < modulus) return Fq::fromU256(v);
        }
    }

    // Field element by direct reduction (used for the MDS inputs).
    Fq nextFieldReduced(unsigned fieldBits) { return Fq::fromU256(nextBits(fieldBits)); }

  private:
    uint8_t step() {
        uint8_t bit = state_[62] ^ state_[51] ^ state_[38] ^ state_[23] ^ state_[13] ^ state_[0];
        for (int i = 0; i < 79; ++i) state_[i] = state_[i + 1];
        state_[79] = bit;
        return bit;
    }

    uint8_t state_[80] = {};
};

PoseidonParams generateParams(unsigned t) {
    constexpr unsigned kFieldBits = 254;
    PoseidonParams params;
    params.t = t;
    params.fullRounds = kFullRounds;
    params.partialRounds = kPartialRounds[t - 2];

    GrainLfsr grain(/*fieldKind=*/1, /*sboxKind=*/0, kFieldBits, t, params.fullRounds, params.partialRounds);

    unsigned numConstants = (params.fullRounds + params.partialRounds) * t;
    params.roundConstants.reserve(numConstants);
    for (unsigned i = 0; i < numConstants; ++i)
        params.roundConstants.push_back(grain.nextFieldRejection(kFieldBits, fqModulus()));

    // Cauchy MDS matrix m[i][j] = 1 / (x_i + y_j) from the continuing stream.
    std::vector<Fq> xs(t), ys(t);
    for (;;) {
        for (unsigned i = 0; i < t; ++i) xs[i] = grain.nextFieldReduced(kFieldBits);
        for (unsigned i = 0; i < t; ++i) ys[i] = grain.nextFieldReduced(kFieldBits);
        bool distinct = true;
        for (unsigned i = 0; i < 2 * t && distinct; ++i)
            for (unsigned j = i + 1; j < 2 * t; ++j) {
                const Fq& a = i < t ? xs[i] : ys[i - t];
                const Fq& b = j < t ? xs[j] : ys[j - t];
                if (a == b) {
                    distinct = false;
                    break;
                }
            }
        if (distinct) break;
    }
    params.mds.resize(size_t(t) * t);
    for (unsigned i = 0; i < t; ++i)
        for (unsigned j = 0; j < t; ++j) params.mds[size_t(i) * t + j] = (xs[i] + ys[j]).inverse();

    return params;
}

Fq pow5(const Fq& x) {
    Fq x2 = x.square();
    return x2.square() * x;
}

}  // namespace

const PoseidonParams& poseidonParams(unsigned t) {
    if (t < 2 || t > 7) fail(Errc::UnsupportedWidth, "poseidon width out of range");
    static std::mutex mu;
    static PoseidonParams cache[6];
    std::lock_guard<std::mutex> lock(mu);
    PoseidonParams& entry = cache[t - 2];
    if (entry.t == 0) entry = generateParams(t);
    return entry;
}

Fq poseidon(std::span<const Fq> inputs) {
    if (inputs.empty() || inputs.size() > 6) fail(Errc::UnsupportedWidth, "poseidon arity must be 1..6");
    const unsigned t = unsigned(inputs.size()) + 1;
    const PoseidonParams& p = poseidonParams(t);

    std::vector<Fq> state(t);
    state[0] = Fq::zero();
    for (unsigned i = 1; i < t; ++i) state[i] = inputs[i - 1];

    std::vector<Fq> next(t);
    const unsigned totalRounds = p.fullRounds + p.partialRounds;
    const unsigned half = p.fullRounds / 2;
    for (unsigned r = 0; r < totalRounds; ++r) {
        for (unsigned i = 0; i < t; ++i) state[i] += p.roundConstants[size_t(r) * t + i];

        if (r < half || r >= half + p.partialRounds) {
            for (unsigned i = 0; i < t; ++i) state[i] = pow5(state[i]);
        } else {
            state[0] = pow5(state[0]);
        }

        // mix: next[i] = sum_j mds[i][j] * state[j]
        for (unsigned i = 0; i < t; ++i) {
            Fq acc = Fq::zero();
            for (unsigned j = 0; j < t; ++j) acc += p.mds[size_t(i) * t + j] * state[j];
            next[i] = acc;
        }
        state.swap(next);
    }
    return state[0];
}

Fq poseidon(std::initializer_list<Fq> inputs) { return poseidon(std::span<const Fq>(inputs.begin(), inputs.size())); }

}  // namespace zkfi

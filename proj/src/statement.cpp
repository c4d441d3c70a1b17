#include "zkfi/statement.hpp"

#include <set>

#include "zkfi/hex.hpp"
#include "zkfi/keccak.hpp"
#include "zkfi/note.hpp"
#include "zkfi/poseidon.hpp"
#include "zkfi/stealth.hpp"

namespace zkfi {

namespace {

struct Checker {
    StatementTrace* trace;
    bool ok = true;

    bool require(bool cond, const char* label) {
        if (!cond) {
            ok = false;
            if (trace) trace->failures.push_back(label);
        }
        return cond;
    }
    bool done() const { return !ok && trace == nullptr; }
};

}  // namespace

bool checkStatement(const PublicInputs& pub, const PrivateInputs& wit, StatementTrace* trace) {
    Checker chk{trace};

    // Per-input conjuncts.
    size_t realPathLen = 0;
    for (unsigned i = 0; i < kMaxInputs; ++i) {
        if (wit.inAsset[i] == 0) {
            chk.require(pub.nullifier[i].isZero(), "dummy input slot must carry a zero nullifier");
            if (chk.done()) return false;
            continue;
        }
        bool fits = chk.require(assetFits(wit.inAsset[i]), "input asset id exceeds 24 bits");
        fits &= chk.require(valueFits(wit.inValue[i]), "input value exceeds 248 bits");
        fits &= chk.require(isOnCurve(wit.inOwner[i]), "input owner key not on curve");
        if (!fits) {
            if (chk.done()) return false;
            continue;
        }

        Fq stealth = stealthAddressFor(wit.inOwner[i], wit.inBlinding[i]);
        Fq commitment = noteCommitment(wit.inAsset[i], stealth, wit.inValue[i]);

        chk.require(pub.nullifier[i] == noteNullifier(wit.inLeaf[i], commitment, wit.inBlinding[i]),
                    "nullifier does not open to (leaf, commitment, blinding)");
        if (chk.done()) return false;
        chk.require(schnorrVerify(commitment, wit.inOwner[i], wit.inSig[i]),
                    "ownership signature over the input commitment fails");
        if (chk.done()) return false;

        if (realPathLen == 0) realPathLen = wit.inPath[i].siblings.size();
        chk.require(!wit.inPath[i].siblings.empty() && wit.inPath[i].siblings.size() == realPathLen,
                    "input opening depth inconsistent");
        if (chk.done()) return false;
        chk.require(verifyOpening(pub.root, wit.inLeaf[i], commitment, wit.inPath[i]),
                    "input opening does not reach the root");
        if (chk.done()) return false;
    }

    // Per-output conjuncts.
    for (unsigned j = 0; j < kMaxOutputs; ++j) {
        if (wit.outAsset[j] == 0) {
            chk.require(pub.outCommitment[j].isZero(), "dummy output slot must carry a zero commitment");
            if (chk.done()) return false;
            continue;
        }
        bool fits = chk.require(assetFits(wit.outAsset[j]), "output asset id exceeds 24 bits");
        fits &= chk.require(valueFits(wit.outValue[j]), "output value exceeds 248 bits");
        if (!fits) {
            if (chk.done()) return false;
            continue;
        }
        chk.require(pub.outCommitment[j] == noteCommitment(wit.outAsset[j], wit.outStealth[j], wit.outValue[j]),
                    "output commitment does not open to (asset, stealth, value)");
        if (chk.done()) return false;
    }

    // Public flow slots.
    for (unsigned j = 0; j < kMaxOutputs; ++j) {
        if (pub.publicAsset[j] == 0) {
            chk.require(pub.publicValue[j] == 0, "public value present without an asset id");
        } else {
            chk.require(assetFits(pub.publicAsset[j]), "public asset id exceeds 24 bits");
            chk.require(pub.publicValue[j] > -kPublicValueBound && pub.publicValue[j] < kPublicValueBound,
                        "public value outside the signed bound");
        }
        if (chk.done()) return false;
    }

    // Per-asset conservation, each distinct asset checked exactly once. The
    // set covers every live input, output and public-flow asset, so a slot
    // pairing a public flow with an output note of a different asset cannot
    // smuggle the note's asset past the balance check.
    std::set<uint32_t> assets;
    for (unsigned i = 0; i < kMaxInputs; ++i)
        if (wit.inAsset[i] != 0) assets.insert(wit.inAsset[i]);
    for (unsigned j = 0; j < kMaxOutputs; ++j) {
        if (pub.publicAsset[j] != 0) assets.insert(pub.publicAsset[j]);
        if (wit.outAsset[j] != 0) assets.insert(wit.outAsset[j]);
    }
    for (uint32_t asset : assets) {
        U256 lhs, rhs;  // lhs = inputs + positive public, rhs = outputs + |negative public|
        for (unsigned i = 0; i < kMaxInputs; ++i)
            if (wit.inAsset[i] == asset) addCarry(lhs, wit.inValue[i]);
        for (unsigned j = 0; j < kMaxOutputs; ++j) {
            if (pub.publicAsset[j] == asset) {
                int64_t v = pub.publicValue[j];
                if (v >= 0) addCarry(lhs, U256(uint64_t(v)));
                else addCarry(rhs, U256(uint64_t(-v)));
            }
            if (wit.outAsset[j] == asset) addCarry(rhs, wit.outValue[j]);
        }
        chk.require(lhs == rhs, "per-asset value conservation fails");
        if (chk.done()) return false;
    }

    return chk.ok;
}

namespace {

void putU256(std::vector<uint8_t>& out, const U256& v) {
    auto b = toBytesBE(v);
    out.insert(out.end(), b.begin(), b.end());
}

void putSigned(std::vector<uint8_t>& out, int64_t v) {
    // two's-complement in 256 bits
    U256 enc{uint64_t(v)};
    if (v < 0) enc.w[1] = enc.w[2] = enc.w[3] = ~uint64_t(0);
    putU256(out, enc);
}

}  // namespace

std::vector<uint8_t> canonicalPublicInputs(const PublicInputs& pub) {
    std::vector<uint8_t> out;
    out.reserve(32 + 4 + 4 * kMaxOutputs * 32 * 2 + kMaxInputs * 32 + 4);
    putU256(out, pub.root.toU256());
    out.push_back(uint8_t(kMaxOutputs));
    for (unsigned j = 0; j < kMaxOutputs; ++j) putSigned(out, pub.publicValue[j]);
    out.push_back(uint8_t(kMaxOutputs));
    for (unsigned j = 0; j < kMaxOutputs; ++j) putU256(out, U256(pub.publicAsset[j]));
    out.push_back(uint8_t(kMaxInputs));
    for (unsigned i = 0; i < kMaxInputs; ++i) putU256(out, pub.nullifier[i].toU256());
    out.push_back(uint8_t(kMaxOutputs));
    for (unsigned j = 0; j < kMaxOutputs; ++j) putU256(out, pub.outCommitment[j].toU256());
    return out;
}

std::string transactionId(const PublicInputs& pub) {
    Bytes32 digest = keccak256(canonicalPublicInputs(pub));
    return toHex(digest);
}

unsigned countInputs(const PublicInputs& pub) {
    unsigned n = 0;
    for (const auto& eta : pub.nullifier)
        if (!eta.isZero()) ++n;
    return n;
}

unsigned countOutputs(const PublicInputs& pub) {
    unsigned n = 0;
    for (const auto& c : pub.outCommitment)
        if (!c.isZero()) ++n;
    return n;
}

}  // namespace zkfi

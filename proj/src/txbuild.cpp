#include "zkfi/txbuild.hpp"

#include <algorithm>
#include <map>

#include "zkfi/errors.hpp"
#include "zkfi/merkle.hpp"
#include "zkfi/poseidon.hpp"

namespace zkfi {

namespace {

void addTo(std::map<uint32_t, U256>& acc, uint32_t asset, const U256& value) {
    auto [it, inserted] = acc.emplace(asset, value);
    if (!inserted) addCarry(it->second, value);
}

}  // namespace

BuiltTransaction buildTransaction(const TxIntent& intent, const ShieldedAccount& account, const LedgerView& view,
                                  Rng& rng) {
    // Per-asset totals wanted on each side.
    std::map<uint32_t, U256> need;   // payments + publicOut + fee
    std::map<uint32_t, U256> credit; // publicIn
    for (const auto& p : intent.payments) {
        if (p.asset == 0 || !assetFits(p.asset)) fail(Errc::InvalidArgument, "payment asset id invalid");
        if (!valueFits(p.value)) fail(Errc::InvalidArgument, "payment value too wide");
        addTo(need, p.asset, p.value);
    }
    for (const auto& f : intent.publicOut) {
        if (f.asset == 0) fail(Errc::InvalidArgument, "public flow asset id invalid");
        addTo(need, f.asset, f.value);
    }
    if (intent.fee) {
        if (intent.fee->asset == 0) fail(Errc::InvalidArgument, "fee asset id invalid");
        addTo(need, intent.fee->asset, intent.fee->value);
    }
    for (const auto& f : intent.publicIn) {
        if (f.asset == 0) fail(Errc::InvalidArgument, "public flow asset id invalid");
        addTo(credit, f.asset, f.value);
    }

    // Greedy largest-first selection per asset, ties broken by lower leaf.
    std::vector<const SpendableNote*> selected;
    std::map<uint32_t, U256> selectedTotal;
    for (const auto& [asset, wanted] : need) {
        U256 incoming = credit.count(asset) ? credit.at(asset) : U256();
        if (incoming >= wanted) continue;
        U256 required = wanted;
        subBorrow(required, incoming);

        std::vector<const SpendableNote*> candidates;
        for (const auto& n : view.unspent)
            if (n.note.asset == asset) candidates.push_back(&n);
        std::stable_sort(candidates.begin(), candidates.end(), [](const SpendableNote* a, const SpendableNote* b) {
            if (a->note.value != b->note.value) return b->note.value < a->note.value;
            return a->leafIndex < b->leafIndex;
        });

        U256 covered;
        for (const auto* n : candidates) {
            if (covered >= required) break;
            selected.push_back(n);
            addCarry(covered, n->note.value);
        }
        if (covered < required) fail(Errc::Funding, "insufficient balance for asset " + std::to_string(asset));
        selectedTotal[asset] = covered;
    }
    if (selected.size() > kMaxInputs)
        fail(Errc::Arity, "transaction needs more input notes than the statement allows");

    // Output notes: payments, then per-asset change back to the sender.
    struct PlannedOutput {
        ShieldedAddress to;
        uint32_t asset;
        U256 value;
    };
    std::vector<PlannedOutput> outputs;
    for (const auto& p : intent.payments) outputs.push_back({p.to, p.asset, p.value});

    std::map<uint32_t, U256> available = credit;
    for (const auto& [asset, total] : selectedTotal) addTo(available, asset, total);
    for (const auto& [asset, have] : available) {
        U256 spent;
        if (auto it = need.find(asset); it != need.end()) spent = it->second;
        if (have < spent) fail(Errc::Funding, "internal: coverage below need");
        U256 change = have;
        subBorrow(change, spent);
        if (!change.isZero()) outputs.push_back({account.address(), asset, change});
    }
    if (outputs.size() > kMaxOutputs)
        fail(Errc::Arity, "transaction needs more output notes than the statement allows");

    // Public flow slots: inflows positive, outflows and fee negative.
    std::vector<std::pair<uint32_t, int64_t>> flows;
    auto flowValue = [](const U256& v) -> int64_t {
        if (v.bitLength() > 52) fail(Errc::InvalidArgument, "public value exceeds the signed bound");
        return int64_t(v.w[0]);
    };
    for (const auto& f : intent.publicIn) flows.emplace_back(f.asset, flowValue(f.value));
    for (const auto& f : intent.publicOut) flows.emplace_back(f.asset, -flowValue(f.value));
    if (intent.fee && !intent.fee->value.isZero()) flows.emplace_back(intent.fee->asset, -flowValue(intent.fee->value));
    if (flows.size() > kMaxOutputs) fail(Errc::Arity, "transaction needs more public flow slots than the statement allows");

    if (view.roots == nullptr || view.tree == nullptr) fail(Errc::StaleView, "ledger view missing tree state");

    BuiltTransaction built;
    built.publicInputs.root = view.roots->current();

    for (size_t i = 0; i < selected.size(); ++i) {
        const SpendableNote& n = *selected[i];
        built.privateInputs.inAsset[i] = n.note.asset;
        built.privateInputs.inValue[i] = n.note.value;
        built.privateInputs.inBlinding[i] = n.note.blinding;
        built.privateInputs.inOwner[i] = account.signPub;
        built.privateInputs.inLeaf[i] = n.leafIndex;
        built.privateInputs.inPath[i] = view.tree->open(n.leafIndex);
        built.publicInputs.nullifier[i] = noteNullifier(n.leafIndex, n.commitment, n.note.blinding);
    }
    for (size_t j = 0; j < outputs.size(); ++j) {
        const PlannedOutput& out = outputs[j];
        StealthOutput payload = createStealthOutput(out.to, out.asset, out.value, rng);
        built.privateInputs.outAsset[j] = out.asset;
        built.privateInputs.outValue[j] = out.value;
        built.privateInputs.outStealth[j] = payload.stealthAddress;
        built.publicInputs.outCommitment[j] = noteCommitment(out.asset, payload.stealthAddress, out.value);
        built.stealthPayloads.push_back(std::move(payload));
    }
    for (size_t j = 0; j < flows.size(); ++j) {
        built.publicInputs.publicAsset[j] = flows[j].first;
        built.publicInputs.publicValue[j] = flows[j].second;
    }
    return built;
}

void signInputs(PrivateInputs& wit, const Fr& signKey) {
    for (unsigned i = 0; i < kMaxInputs; ++i) {
        if (wit.inAsset[i] == 0) continue;
        Fq stealth = stealthAddressFor(wit.inOwner[i], wit.inBlinding[i]);
        Fq commitment = noteCommitment(wit.inAsset[i], stealth, wit.inValue[i]);
        wit.inSig[i] = schnorrSign(commitment, signKey);
    }
}

}  // namespace zkfi

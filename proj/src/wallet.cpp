#include "zkfi/wallet.hpp"

#include "zkfi/errors.hpp"
#include "zkfi/hex.hpp"
#include "zkfi/note.hpp"

namespace zkfi {

namespace {

void scanEntry(const Json& entry, uint64_t seq, const ShieldedAccount& account, std::vector<OwnedNote>& out) {
    StealthOutput payload = parseAux(fromHex(entry.at("aux").get<std::string>()));
    auto secrets = scanAux(payload, account.viewKey, account.signPub);
    if (!secrets) return;

    Note note;
    note.stealthAddress = payload.stealthAddress;
    note.blinding = secrets->blinding;
    if (entry.contains("public_asset")) {
        note.asset = entry.at("public_asset").get<uint32_t>();
        note.value = fromDec(entry.at("public_value").get<std::string>());
    } else {
        note.asset = secrets->asset;
        note.value = secrets->value;
    }
    if (note.asset == 0) return;

    Fq commitment = noteCommitment(note);
    // The chain entry is authoritative; skip anything inconsistent.
    if (commitment.toHex() != entry.at("commitment").get<std::string>()) return;

    uint64_t leaf = entry.at("leaf").get<uint64_t>();
    out.push_back({note, leaf, commitment, noteNullifier(leaf, commitment, note.blinding), seq});
}

}  // namespace

std::vector<OwnedNote> scanOwnedNotes(const std::vector<LedgerEvent>& events, const ShieldedAccount& account) {
    std::vector<OwnedNote> owned;
    for (const auto& event : events) {
        const Json* receipt = nullptr;
        if (event.kind == "deposit" || event.kind == "operation" || event.kind == "convert")
            receipt = &event.payload.at("receipt");
        if (!receipt) continue;
        for (const auto& entry : receipt->at("minted")) scanEntry(entry, event.seq, account, owned);
    }
    return owned;
}

WalletView walletView(const Simulator& sim, const ShieldedAccount& account) {
    WalletView view;
    for (auto& note : scanOwnedNotes(sim.events(), account)) {
        if (sim.pool().nullifierSeen(note.nullifier)) continue;
        auto [it, inserted] = view.balances.emplace(note.note.asset, note.note.value);
        if (!inserted) addCarry(it->second, note.note.value);
        view.unspent.push_back(std::move(note));
    }
    return view;
}

LedgerView ledgerViewFor(const Simulator& sim, const WalletView& wallet) {
    LedgerView view;
    view.tree = &sim.pool().tree();
    view.roots = &sim.pool().roots();
    view.unspent.reserve(wallet.unspent.size());
    for (const auto& n : wallet.unspent) view.unspent.push_back({n.note, n.leafIndex, n.commitment});
    return view;
}

TxEnvelope buildSignedEnvelope(const Simulator& sim, const ShieldedAccount& account, const TxIntent& intent,
                               TxKind kind, const ProvingKey& provingKey, Rng& rng,
                               std::optional<ConvertRequest> convert) {
    WalletView wallet = walletView(sim, account);
    LedgerView view = ledgerViewFor(sim, wallet);
    BuiltTransaction built = buildTransaction(intent, account, view, rng);
    signInputs(built.privateInputs, account.signKey);

    SimulatedSnark backend;
    TxEnvelope envelope;
    envelope.kind = kind;
    envelope.publicInputs = built.publicInputs;
    envelope.proof = backend.prove(provingKey, built.publicInputs, built.privateInputs);
    for (const auto& payload : built.stealthPayloads) envelope.auxData.push_back(encodeAux(payload));
    if (kind == TxKind::Convert) {
        if (!convert) fail(Errc::InvalidArgument, "convert kind needs a convert request");
        envelope.fee = Flow{convert->feeAsset, convert->feeValue};
    } else {
        if (!intent.fee) fail(Errc::InvalidArgument, "operation intent needs a fee");
        envelope.fee = *intent.fee;
    }
    envelope.convert = std::move(convert);

    const ComplianceKeys& keys = sim.pool().params().compliance;
    if (keys.configured()) {
        // What a successful de-anonymization reveals: the sender's sign key
        // image plus input positions and output plaintexts.
        Json disclosure;
        disclosure["sender_sign_pub"] = toHex(compressPoint(account.signPub));
        Json inputs = Json::array();
        for (unsigned i = 0; i < kMaxInputs; ++i) {
            if (built.privateInputs.inAsset[i] == 0) continue;
            inputs.push_back(Json{{"leaf", built.privateInputs.inLeaf[i]},
                                  {"asset", built.privateInputs.inAsset[i]},
                                  {"value", toDec(built.privateInputs.inValue[i])}});
        }
        Json outputs = Json::array();
        for (unsigned j = 0; j < kMaxOutputs; ++j) {
            if (built.privateInputs.outAsset[j] == 0) continue;
            outputs.push_back(Json{{"stealth", built.privateInputs.outStealth[j].toHex()},
                                   {"asset", built.privateInputs.outAsset[j]},
                                   {"value", toDec(built.privateInputs.outValue[j])}});
        }
        disclosure["inputs"] = inputs;
        disclosure["outputs"] = outputs;
        std::string serialized = disclosure.dump();
        envelope.compliance = encryptForCompliance(
            std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(serialized.data()), serialized.size()),
            keys.revokerPub, keys.collectivePub, transactionId(built.publicInputs), rng);
    }
    return envelope;
}

}  // namespace zkfi

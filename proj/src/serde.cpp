#include "zkfi/serde.hpp"

#include "zkfi/errors.hpp"
#include "zkfi/hex.hpp"

namespace zkfi {

namespace {

std::string fqHex(const Fq& v) { return v.toHex(); }
Fq fqFromHexChecked(const std::string& s) {
    U256 v = fromHexStr(s);
    if (v >= fqModulus()) fail(Errc::Parse, "field element out of range");
    return Fq::fromU256(v);
}

std::string frHex(const Fr& v) { return toHex(v.toU256()); }
Fr frFromHexChecked(const std::string& s) {
    U256 v = fromHexStr(s);
    if (v >= frModulus()) fail(Errc::Parse, "scalar out of range");
    return Fr::fromU256(v);
}

std::string valueDec(const U256& v) { return toDec(v); }

std::vector<uint8_t> hexField(const Json& j, const char* key) { return fromHex(j.at(key).get<std::string>()); }

}  // namespace

Json pointJson(const AffinePoint& p) { return toHex(compressPoint(p)); }

AffinePoint pointFromJson(const Json& j) {
    auto bytes = fromHex(j.get<std::string>());
    auto p = decompressPoint(bytes);
    if (!p) fail(Errc::Parse, "invalid compressed point");
    return *p;
}

Json publicInputsJson(const PublicInputs& pub) {
    Json values = Json::array(), assets = Json::array(), etas = Json::array(), outs = Json::array();
    for (unsigned j = 0; j < kMaxOutputs; ++j) {
        values.push_back(std::to_string(pub.publicValue[j]));
        assets.push_back(pub.publicAsset[j]);
        outs.push_back(fqHex(pub.outCommitment[j]));
    }
    for (unsigned i = 0; i < kMaxInputs; ++i) etas.push_back(fqHex(pub.nullifier[i]));
    return Json{{"root", fqHex(pub.root)},
                {"public_values", values},
                {"public_assets", assets},
                {"nullifiers", etas},
                {"out_commitments", outs}};
}

PublicInputs publicInputsFromJson(const Json& j) {
    PublicInputs pub;
    pub.root = fqFromHexChecked(j.at("root").get<std::string>());
    const auto& values = j.at("public_values");
    const auto& assets = j.at("public_assets");
    const auto& etas = j.at("nullifiers");
    const auto& outs = j.at("out_commitments");
    if (values.size() != kMaxOutputs || assets.size() != kMaxOutputs || etas.size() != kMaxInputs ||
        outs.size() != kMaxOutputs)
        fail(Errc::Parse, "public input arity mismatch");
    for (unsigned i = 0; i < kMaxOutputs; ++i) {
        pub.publicValue[i] = std::stoll(values[i].get<std::string>());
        pub.publicAsset[i] = assets[i].get<uint32_t>();
        pub.outCommitment[i] = fqFromHexChecked(outs[i].get<std::string>());
    }
    for (unsigned i = 0; i < kMaxInputs; ++i) pub.nullifier[i] = fqFromHexChecked(etas[i].get<std::string>());
    return pub;
}

Json proofJson(const Proof& proof) {
    return Json{{"backend", proof.backend}, {"bytes", toHex(proof.bytes)}};
}

Proof proofFromJson(const Json& j) {
    Proof proof;
    proof.backend = j.at("backend").get<std::string>();
    auto bytes = hexField(j, "bytes");
    if (bytes.size() != proof.bytes.size()) fail(Errc::Parse, "proof payload must be 256 bytes");
    std::copy(bytes.begin(), bytes.end(), proof.bytes.begin());
    return proof;
}

Json signatureJson(const Signature& sig) {
    return Json{{"commitment", pointJson(sig.commitment)}, {"response", frHex(sig.response)}};
}

Signature signatureFromJson(const Json& j) {
    return {pointFromJson(j.at("commitment")), frFromHexChecked(j.at("response").get<std::string>())};
}

Json complianceEnvelopeJson(const ComplianceEnvelope& env) {
    return Json{{"outer_ephemeral", pointJson(env.outerEphemeral)},
                {"wrapped_key", toHex(env.wrappedKey)},
                {"outer_box", toHex(env.outerBox)},
                {"tx_binding", env.txBinding}};
}

ComplianceEnvelope complianceEnvelopeFromJson(const Json& j) {
    ComplianceEnvelope env;
    env.outerEphemeral = pointFromJson(j.at("outer_ephemeral"));
    auto wrapped = hexField(j, "wrapped_key");
    if (wrapped.size() != 32) fail(Errc::Parse, "wrapped key must be 32 bytes");
    std::copy(wrapped.begin(), wrapped.end(), env.wrappedKey.begin());
    env.outerBox = hexField(j, "outer_box");
    env.txBinding = j.at("tx_binding").get<std::string>();
    return env;
}

Json envelopeJson(const TxEnvelope& envelope) {
    Json aux = Json::array();
    for (const auto& a : envelope.auxData) aux.push_back(toHex(a));
    Json out{{"kind", envelope.kind == TxKind::Deposit    ? "deposit"
                      : envelope.kind == TxKind::Convert ? "convert"
                                                         : "operation"},
             {"public_inputs", publicInputsJson(envelope.publicInputs)},
             {"proof", proofJson(envelope.proof)},
             {"aux_data", aux},
             {"fee", Json{{"asset", envelope.fee.asset}, {"value", valueDec(envelope.fee.value)}}}};
    if (envelope.compliance) out["compliance"] = complianceEnvelopeJson(*envelope.compliance);
    if (envelope.convert) {
        Json inputs = Json::array();
        for (const auto& f : envelope.convert->inputs)
            inputs.push_back(Json{{"asset", f.asset}, {"value", valueDec(f.value)}});
        Json stealth = Json::array();
        for (const auto& s : envelope.convert->outputStealth) stealth.push_back(toHex(encodeAux(s)));
        out["convert"] = Json{{"proxy", envelope.convert->proxyId},
                              {"inputs", inputs},
                              {"fee_asset", envelope.convert->feeAsset},
                              {"fee_value", valueDec(envelope.convert->feeValue)},
                              {"payload", toHex(envelope.convert->payload)},
                              {"output_stealth", stealth}};
    }
    return out;
}

TxEnvelope envelopeFromJson(const Json& j) {
    TxEnvelope envelope;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "deposit") envelope.kind = TxKind::Deposit;
    else if (kind == "convert") envelope.kind = TxKind::Convert;
    else if (kind == "operation") envelope.kind = TxKind::Operation;
    else fail(Errc::Parse, "unknown envelope kind");
    envelope.publicInputs = publicInputsFromJson(j.at("public_inputs"));
    envelope.proof = proofFromJson(j.at("proof"));
    for (const auto& a : j.at("aux_data")) envelope.auxData.push_back(fromHex(a.get<std::string>()));
    envelope.fee.asset = j.at("fee").at("asset").get<uint32_t>();
    envelope.fee.value = fromDec(j.at("fee").at("value").get<std::string>());
    if (j.contains("compliance")) envelope.compliance = complianceEnvelopeFromJson(j.at("compliance"));
    if (j.contains("convert")) {
        ConvertRequest req;
        const Json& c = j.at("convert");
        req.proxyId = c.at("proxy").get<std::string>();
        for (const auto& f : c.at("inputs"))
            req.inputs.push_back({f.at("asset").get<uint32_t>(), fromDec(f.at("value").get<std::string>())});
        req.feeAsset = c.at("fee_asset").get<uint32_t>();
        req.feeValue = fromDec(c.at("fee_value").get<std::string>());
        req.payload = fromHex(c.at("payload").get<std::string>());
        for (const auto& s : c.at("output_stealth")) req.outputStealth.push_back(parseAux(fromHex(s.get<std::string>())));
        envelope.convert = std::move(req);
    }
    return envelope;
}

Json requestJson(const RevocationRequest& request) {
    return Json{{"tx_id", request.txId},
                {"justification", request.justification},
                {"signature", signatureJson(request.signature)}};
}

RevocationRequest requestFromJson(const Json& j) {
    RevocationRequest request;
    request.txId = j.at("tx_id").get<std::string>();
    request.justification = j.at("justification").get<std::string>();
    request.signature = signatureFromJson(j.at("signature"));
    return request;
}

Json partialJson(const PartialDecryption& partial) {
    return Json{{"index", partial.shareIndex}, {"value", pointJson(partial.value)}, {"tx_binding", partial.txBinding}};
}

PartialDecryption partialFromJson(const Json& j) {
    return {j.at("index").get<uint32_t>(), pointFromJson(j.at("value")), j.at("tx_binding").get<std::string>()};
}

namespace {

Json transcriptJson(const std::vector<Bytes32>& transcript) {
    Json arr = Json::array();
    for (const auto& t : transcript) arr.push_back(toHex(t));
    return arr;
}

std::vector<Bytes32> transcriptFromJson(const Json& j) {
    std::vector<Bytes32> out;
    for (const auto& t : j) {
        auto bytes = fromHex(t.get<std::string>());
        if (bytes.size() != 32) fail(Errc::Parse, "transcript digest must be 32 bytes");
        Bytes32 b;
        std::copy(bytes.begin(), bytes.end(), b.begin());
        out.push_back(b);
    }
    return out;
}

}  // namespace

Json verifyingKeyJson(const VerifyingKey& key) {
    return Json{{"binding", toHex(key.binding)}, {"transcript", transcriptJson(key.transcript)}};
}

VerifyingKey verifyingKeyFromJson(const Json& j) {
    VerifyingKey key;
    auto b = hexField(j, "binding");
    if (b.size() != 32) fail(Errc::Parse, "binding must be 32 bytes");
    std::copy(b.begin(), b.end(), key.binding.begin());
    key.transcript = transcriptFromJson(j.at("transcript"));
    return key;
}

Json provingKeyJson(const ProvingKey& key) {
    return Json{{"binding", toHex(key.binding)}, {"transcript", transcriptJson(key.transcript)}};
}

ProvingKey provingKeyFromJson(const Json& j) {
    ProvingKey key;
    auto b = hexField(j, "binding");
    if (b.size() != 32) fail(Errc::Parse, "binding must be 32 bytes");
    std::copy(b.begin(), b.end(), key.binding.begin());
    key.transcript = transcriptFromJson(j.at("transcript"));
    return key;
}

Json accountJson(const ShieldedAccount& account) {
    return Json{{"xi", toHex(account.entropy)},
                {"s", frHex(account.signKey)},
                {"S", pointJson(account.signPub)},
                {"p", frHex(account.viewKey)},
                {"P", pointJson(account.viewPub)}};
}

ShieldedAccount accountFromJson(const Json& j) {
    auto xi = hexField(j, "xi");
    if (xi.size() != 32) fail(Errc::Parse, "entropy must be 32 bytes");
    Bytes32 entropy;
    std::copy(xi.begin(), xi.end(), entropy.begin());
    ShieldedAccount account = deriveAccount(entropy);
    // The stored public material must match the derivation.
    if (frHex(account.signKey) != j.at("s").get<std::string>() ||
        account.signPub != pointFromJson(j.at("S")) || account.viewPub != pointFromJson(j.at("P")))
        fail(Errc::Parse, "key file inconsistent with its entropy");
    return account;
}

Json guardianShareJson(const Share<Fr>& share) {
    return Json{{"index", share.index}, {"value_hex", frHex(share.value)}};
}

Share<Fr> guardianShareFromJson(const Json& j) {
    return {j.at("index").get<uint32_t>(), frFromHexChecked(j.at("value_hex").get<std::string>())};
}

Json proxyConfigJson(const ProxyConfig& cfg) {
    Json out{{"kind", cfg.kind}, {"asset_in", cfg.assetIn}, {"asset_out", cfg.assetOut}};
    if (cfg.kind == "swap") {
        out["reserve_in"] = valueDec(cfg.reserveIn);
        out["reserve_out"] = valueDec(cfg.reserveOut);
    }
    return out;
}

ProxyConfig proxyConfigFromJson(const Json& j) {
    ProxyConfig cfg;
    cfg.kind = j.at("kind").get<std::string>();
    cfg.assetIn = j.at("asset_in").get<uint32_t>();
    cfg.assetOut = j.at("asset_out").get<uint32_t>();
    if (cfg.kind == "swap") {
        cfg.reserveIn = fromDec(j.at("reserve_in").get<std::string>());
        cfg.reserveOut = fromDec(j.at("reserve_out").get<std::string>());
    }
    return cfg;
}

Json poolParamsJson(const PoolParams& params) {
    Json assets = Json::object();
    for (const auto& [id, info] : params.assets) {
        assets[std::to_string(id)] = Json{{"symbol", info.symbol},
                                          {"decimals", info.decimals},
                                          {"per_deposit_cap", valueDec(info.perDepositCap)},
                                          {"epoch_volume_cap", valueDec(info.epochVolumeCap)}};
    }
    Json prices = Json::object();
    for (const auto& [id, p] : params.gasPrice) prices[std::to_string(id)] = p;
    Json deny = Json::array();
    for (const auto& h : params.denyList) deny.push_back(h);
    Json out{{"tree_depth", params.treeDepth},
             {"root_history", params.rootHistorySize},
             {"epoch_blocks", params.epochBlocks},
             {"paymaster_margin_bps", params.paymasterMarginBps},
             {"gas", Json{{"base", params.gas.base}, {"per_input", params.gas.perInput}, {"per_output", params.gas.perOutput}}},
             {"assets", assets},
             {"gas_price", prices},
             {"deny_list", deny},
             {"verifying_key", verifyingKeyJson(params.verifyingKey)}};
    if (params.compliance.configured()) {
        out["compliance"] = Json{{"revoker_pub", pointJson(params.compliance.revokerPub)},
                                 {"collective_pub", pointJson(params.compliance.collectivePub)},
                                 {"threshold", params.compliance.threshold},
                                 {"guardians", params.compliance.guardianCount}};
    }
    return out;
}

PoolParams poolParamsFromJson(const Json& j) {
    PoolParams params;
    params.treeDepth = j.at("tree_depth").get<unsigned>();
    params.rootHistorySize = j.at("root_history").get<size_t>();
    params.epochBlocks = j.at("epoch_blocks").get<uint64_t>();
    params.paymasterMarginBps = j.at("paymaster_margin_bps").get<unsigned>();
    params.gas.base = j.at("gas").at("base").get<uint64_t>();
    params.gas.perInput = j.at("gas").at("per_input").get<uint64_t>();
    params.gas.perOutput = j.at("gas").at("per_output").get<uint64_t>();
    for (const auto& [key, info] : j.at("assets").items()) {
        AssetInfo a;
        a.symbol = info.at("symbol").get<std::string>();
        a.decimals = info.at("decimals").get<unsigned>();
        a.perDepositCap = fromDec(info.at("per_deposit_cap").get<std::string>());
        a.epochVolumeCap = fromDec(info.at("epoch_volume_cap").get<std::string>());
        params.assets[uint32_t(std::stoul(key))] = a;
    }
    for (const auto& [key, p] : j.at("gas_price").items()) params.gasPrice[uint32_t(std::stoul(key))] = p.get<uint64_t>();
    for (const auto& h : j.at("deny_list")) params.denyList.insert(h.get<std::string>());
    params.verifyingKey = verifyingKeyFromJson(j.at("verifying_key"));
    if (j.contains("compliance")) {
        params.compliance.revokerPub = pointFromJson(j.at("compliance").at("revoker_pub"));
        params.compliance.collectivePub = pointFromJson(j.at("compliance").at("collective_pub"));
        params.compliance.threshold = j.at("compliance").at("threshold").get<unsigned>();
        params.compliance.guardianCount = j.at("compliance").at("guardians").get<unsigned>();
    }
    return params;
}

}  // namespace zkfi

// Command-line wallet and chain simulator for the shielded pool.
// Stable JSON on stdout; human diagnostics on stderr; nonzero exit codes
// carry a machine-readable error category.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "zkfi/errors.hpp"
#include "zkfi/hex.hpp"
#include "zkfi/sim.hpp"
#include "zkfi/wallet.hpp"

using namespace zkfi;

namespace {

struct CliError {
    int code;
    std::string category;
    std::string detail;
};

int rejectExitCode(Reject reject) {
    switch (reject) {
        case Reject::None: return 0;
        case Reject::Screening: return 2;
        case Reject::DepositLimit:
        case Reject::EpochLimit: return 3;
        case Reject::StaleRoot: return 4;
        case Reject::DoubleSpend: return 5;
        case Reject::BadProof: return 6;
        case Reject::Paymaster: return 7;
        case Reject::FeeMissing: return 8;
        case Reject::Channel: return 9;
        case Reject::UnknownProxy:
        case Reject::ProxyFailure: return 10;
        case Reject::Conflict: return 11;
        case Reject::Malformed: return 12;
        case Reject::MissingCompliance: return 13;
        case Reject::UnknownAsset: return 16;
    }
    return 1;
}

int errcExitCode(Errc code) {
    switch (code) {
        case Errc::Funding: return 14;
        case Errc::Arity: return 15;
        case Errc::QuoteUnavailable: return 16;
        case Errc::Conflict: return 11;
        case Errc::Parse: return 12;
        case Errc::RequestNotLogged: return 13;
        case Errc::CombineFailure:
        case Errc::DecryptFailure: return 18;
        default: return 1;
    }
}

[[noreturn]] void bail(const CliError& err) {
    Json out{{"error", Json{{"category", err.category}, {"detail", err.detail}}}};
    std::cout << out.dump() << std::endl;
    std::cerr << "error (" << err.category << "): " << err.detail << std::endl;
    std::exit(err.code);
}

void requireOk(const OpResult& result) {
    if (result.ok()) return;
    bail({rejectExitCode(result.reject), rejectName(result.reject), result.detail});
}

void emit(const Json& out) { std::cout << out.dump() << std::endl; }

Json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) bail({17, "not-found", "cannot open " + path});
    return Json::parse(in);
}

void writeJsonFile(const std::string& path, const Json& doc) {
    std::ofstream out(path);
    if (!out.good()) bail({1, "io", "cannot write " + path});
    out << doc.dump(1) << "\n";
}

struct Workspace {
    std::string configPath = "zkfi-config.json";
    std::string ledgerPath = "zkfi-ledger.jsonl";
    std::optional<uint64_t> seed;

    Rng makeRng() const { return seed ? Rng::seeded(*seed) : Rng::live(); }

    Json config() const { return readJsonFile(configPath); }

    PoolParams poolParams(const Json& cfg) const { return poolParamsFromJson(cfg.at("pool")); }

    std::vector<ProxyConfig> proxyConfigs(const Json& cfg) const {
        std::vector<ProxyConfig> out;
        for (const auto& [id, body] : cfg.at("proxies").items()) {
            ProxyConfig p = proxyConfigFromJson(body);
            p.id = id;
            out.push_back(std::move(p));
        }
        return out;
    }

    Simulator open(const Json& cfg) const { return Simulator(poolParams(cfg), proxyConfigs(cfg), ledgerPath); }

    ShieldedAccount loadAccount(const std::string& keyPath) const { return accountFromJson(readJsonFile(keyPath)); }
};

Json receiptToJson(const OpResult& result, const Simulator& sim) {
    Json minted = Json::array();
    for (const auto& m : result.receipt.minted)
        minted.push_back(Json{{"leaf", m.leafIndex}, {"commitment", m.commitment.toHex()}});
    Json etas = Json::array();
    for (const auto& eta : result.receipt.spentNullifiers) etas.push_back(eta.toHex());
    Json out{{"block", sim.events().empty() ? 0 : sim.events().back().seq},
             {"minted", minted},
             {"nullifiers", etas}};
    if (!result.receipt.txId.empty()) out["tx_id"] = result.receipt.txId;
    if (!result.receipt.proxyOutputs.empty()) {
        Json flows = Json::array();
        for (const auto& f : result.receipt.proxyOutputs)
            flows.push_back(Json{{"asset", f.asset}, {"value", toDec(f.value)}});
        out["proxy_outputs"] = flows;
    }
    return out;
}

ShieldedAddress resolveRecipient(const Simulator& sim, const std::string& to) {
    if (auto address = sim.registry().lookup(to)) return *address;
    if (to.size() == 128) {
        auto decoded = ShieldedAddress::decode(fromHex(to));
        if (decoded) return *decoded;
    }
    bail({17, "not-found", "recipient is neither a registered handle nor a valid address: " + to});
}

// Iterative fee sizing against the paymaster quote at the built arity.
TxEnvelope buildOperation(const Simulator& sim, const ShieldedAccount& account, TxIntent intent, uint32_t feeAsset,
                          const ProvingKey& provingKey, Rng& rng) {
    U256 fee = sim.pool().feeQuote(0, 1, feeAsset);
    for (int iter = 0; iter < 8; ++iter) {
        intent.fee = Flow{feeAsset, fee};
        TxEnvelope envelope = buildSignedEnvelope(sim, account, intent, TxKind::Operation, provingKey, rng);
        U256 needed =
            sim.pool().feeQuote(countInputs(envelope.publicInputs), countOutputs(envelope.publicInputs), feeAsset);
        if (!(fee < needed)) return envelope;
        fee = needed;
    }
    fail(Errc::Funding, "fee sizing did not converge");
}

std::string resolveTxId(const Simulator& sim, const std::string& ref) {
    if (ref.size() == 64 && ref.find_first_not_of("0123456789abcdef") == std::string::npos) return ref;
    uint64_t seq = 0;
    try {
        seq = std::stoull(ref);
    } catch (...) {
        bail({17, "not-found", "transaction reference must be a sequence number or 64-hex id"});
    }
    for (const auto& event : sim.events()) {
        if (event.seq != seq) continue;
        if (event.kind != "operation" && event.kind != "convert")
            bail({17, "not-found", "event " + ref + " is not a shielded operation"});
        return event.payload.at("receipt").at("tx_id").get<std::string>();
    }
    bail({17, "not-found", "no event with sequence " + ref});
}

Json defaultConfig(Rng& rng) {
    PoolParams params;
    params.treeDepth = 20;
    params.rootHistorySize = 64;
    params.epochBlocks = 1000;
    params.paymasterMarginBps = 1000;
    params.gas = GasModel{};  // 50000 base, 10000 per input, 20000 per output
    params.assets[1] = AssetInfo{"TOKA", 18, fromDec("1000000000"), fromDec("10000000000")};
    params.assets[2] = AssetInfo{"TOKB", 18, fromDec("1000000000"), fromDec("10000000000")};
    params.assets[3] = AssetInfo{"WTOK", 18, fromDec("1000000000"), fromDec("10000000000")};
    params.gasPrice = {{1, 2}, {2, 2}, {3, 2}};
    params.denyList = {"mallory-wallet"};

    std::vector<Fr> contributions{rng.scalar(), rng.scalar(), rng.scalar()};
    CeremonyResult ceremony = runSetupCeremony(contributions);
    params.verifyingKey = ceremony.keys.verifyingKey;

    Json proxies{{"swap-ab", proxyConfigJson({"swap-ab", "swap", 1, 2, fromDec("1000000"), fromDec("1000000")})},
                 {"stake-aw", proxyConfigJson({"stake-aw", "stake", 1, 3, U256(), U256()})}};

    return Json{{"pool", poolParamsJson(params)},
                {"proving_key", provingKeyJson(ceremony.keys.provingKey)},
                {"proxies", proxies},
                {"request_log", "zkfi-requests.jsonl"}};
}

void appendRequestMirror(const Json& cfg, const RevocationRequest& request) {
    std::string path = cfg.value("request_log", std::string("zkfi-requests.jsonl"));
    std::ofstream out(path, std::ios::app);
    if (out.good()) out << requestJson(request).dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shielded multi-asset pool simulator"};
    app.require_subcommand(1);

    Workspace ws;
    app.add_option("--config", ws.configPath, "config file path");
    app.add_option("--ledger", ws.ledgerPath, "ledger file path");
    uint64_t seedValue = 0;
    auto* seedOpt = app.add_option("--seed", seedValue, "deterministic randomness seed");

    auto* init = app.add_subcommand("init", "create config and an empty ledger");
    bool force = false;
    init->add_flag("--force", force, "overwrite an existing config");

    auto* keygen = app.add_subcommand("keygen", "derive a shielded account key file");
    std::string keyOut = "zkfi-keys.json";
    keygen->add_option("--out", keyOut, "output key file");

    auto* reg = app.add_subcommand("register", "publish an address under a handle");
    std::string keysPath, handle;
    reg->add_option("--keys", keysPath)->required();
    reg->add_option("--handle", handle)->required();

    auto* balance = app.add_subcommand("balance", "per-asset shielded balance");
    balance->add_option("--keys", keysPath)->required();
    auto* scan = app.add_subcommand("scan", "list unspent notes owned by the key");
    scan->add_option("--keys", keysPath)->required();
    auto* exportView = app.add_subcommand("export-viewkey", "print the view keypair for voluntary disclosure");
    exportView->add_option("--keys", keysPath)->required();

    auto* deposit = app.add_subcommand("deposit", "move public value into the pool");
    uint32_t asset = 0;
    uint64_t value = 0;
    std::string source = "wallet";
    deposit->add_option("--keys", keysPath)->required();
    deposit->add_option("--asset", asset)->required();
    deposit->add_option("--value", value)->required();
    deposit->add_option("--source", source, "source handle for screening");

    auto* transfer = app.add_subcommand("transfer", "shielded payment to a handle or address");
    std::string to;
    uint32_t feeAsset = 0;
    transfer->add_option("--keys", keysPath)->required();
    transfer->add_option("--to", to)->required();
    transfer->add_option("--asset", asset)->required();
    transfer->add_option("--value", value)->required();
    transfer->add_option("--fee-asset", feeAsset, "defaults to the transfer asset");

    auto* withdraw = app.add_subcommand("withdraw", "move shielded value out of the pool");
    withdraw->add_option("--keys", keysPath)->required();
    withdraw->add_option("--asset", asset)->required();
    withdraw->add_option("--value", value)->required();
    withdraw->add_option("--fee-asset", feeAsset, "defaults to the withdrawn asset");

    auto* convert = app.add_subcommand("convert", "route shielded value through a protocol proxy");
    std::string proxyId;
    uint64_t minOut = 0;
    convert->add_option("--keys", keysPath)->required();
    convert->add_option("--proxy", proxyId)->required();
    convert->add_option("--asset", asset)->required();
    convert->add_option("--value", value)->required();
    convert->add_option("--fee-asset", feeAsset)->required();
    auto* minOutOpt = convert->add_option("--min-out", minOut, "lower bound on the proxy output");

    auto* guardianKg = app.add_subcommand("guardian-keygen", "create the guardian set and revoker keys");
    unsigned tOpt = 0, nOpt = 0;
    std::string outDir = ".";
    guardianKg->add_option("--t", tOpt)->required();
    guardianKg->add_option("--n", nOpt)->required();
    guardianKg->add_option("--out-dir", outDir);

    auto* requestCmd = app.add_subcommand("request-deanon", "log a signed de-anonymization request");
    std::string txRef, justification, revokerPath;
    requestCmd->add_option("--tx", txRef)->required();
    requestCmd->add_option("--justification", justification)->required();
    requestCmd->add_option("--revoker", revokerPath)->required();

    auto* approve = app.add_subcommand("guardian-approve", "produce a partial decryption for a logged request");
    std::string sharePath;
    approve->add_option("--tx", txRef)->required();
    approve->add_option("--share", sharePath)->required();

    auto* reveal = app.add_subcommand("reveal", "combine partials and finish the de-anonymization");
    std::string partialsCsv;
    reveal->add_option("--tx", txRef)->required();
    reveal->add_option("--partials", partialsCsv, "comma-separated partial files")->required();
    reveal->add_option("--revoker", revokerPath)->required();

    CLI11_PARSE(app, argc, argv);
    if (*seedOpt) ws.seed = seedValue;

    try {
        Rng rng = ws.makeRng();

        if (*init) {
            if (std::filesystem::exists(ws.configPath) && !force)
                bail({11, "conflict", ws.configPath + " already exists (use --force)"});
            Json cfg = defaultConfig(rng);
            writeJsonFile(ws.configPath, cfg);
            std::ofstream ledger(ws.ledgerPath, std::ios::trunc);
            emit(Json{{"config", ws.configPath},
                      {"ledger", ws.ledgerPath},
                      {"assets", cfg.at("pool").at("assets")},
                      {"ceremony_transcript", cfg.at("proving_key").at("transcript")}});
            return 0;
        }

        if (*keygen) {
            ShieldedAccount account = deriveAccount(rng.entropy());
            writeJsonFile(keyOut, accountJson(account));
            emit(Json{{"keys", keyOut}, {"address", toHex(account.address().encode())}});
            return 0;
        }

        Json cfg = ws.config();

        if (*guardianKg) {
            Simulator sim = ws.open(cfg);
            for (const auto& event : sim.events())
                if (event.kind == "operation" || event.kind == "convert")
                    bail({11, "conflict", "guardian keys must be configured before shielded operations exist"});
            GuardianSet set = guardianKeygen(tOpt, nOpt, rng);
            ShieldedAccount revoker = deriveAccount(rng.entropy());

            Json shares = Json::array();
            for (const auto& share : set.shares) {
                std::string path = outDir + "/guardian-" + std::to_string(share.index) + ".json";
                writeJsonFile(path, guardianShareJson(share));
                shares.push_back(path);
            }
            std::string revokerFile = outDir + "/revoker.json";
            writeJsonFile(revokerFile, Json{{"key", toHex(toBytesBE(revoker.signKey.toU256()))},
                                            {"pub", pointJson(revoker.signPub)}});

            cfg["pool"]["compliance"] = Json{{"revoker_pub", pointJson(revoker.signPub)},
                                             {"collective_pub", pointJson(set.collectivePub)},
                                             {"threshold", set.threshold},
                                             {"guardians", set.count}};
            writeJsonFile(ws.configPath, cfg);
            emit(Json{{"threshold", set.threshold},
                      {"guardians", set.count},
                      {"share_files", shares},
                      {"revoker", revokerFile},
                      {"collective_pub", pointJson(set.collectivePub)}});
            return 0;
        }

        Simulator sim = ws.open(cfg);
        ProvingKey provingKey = provingKeyFromJson(cfg.at("proving_key"));

        if (*reg) {
            ShieldedAccount account = ws.loadAccount(keysPath);
            if (!sim.registerHandle(handle, account.address()))
                bail({11, "conflict", "handle already registered: " + handle});
            emit(Json{{"handle", handle}, {"address", toHex(account.address().encode())}});
        } else if (*balance) {
            ShieldedAccount account = ws.loadAccount(keysPath);
            WalletView view = walletView(sim, account);
            Json balances = Json::object();
            for (const auto& [id, total] : view.balances) balances[std::to_string(id)] = toDec(total);
            emit(Json{{"balances", balances}, {"unspent_notes", view.unspent.size()}});
        } else if (*scan) {
            ShieldedAccount account = ws.loadAccount(keysPath);
            WalletView view = walletView(sim, account);
            Json notes = Json::array();
            for (const auto& n : view.unspent)
                notes.push_back(Json{{"leaf", n.leafIndex},
                                     {"asset", n.note.asset},
                                     {"value", toDec(n.note.value)},
                                     {"block", n.eventSeq}});
            emit(Json{{"notes", notes}});
        } else if (*exportView) {
            ShieldedAccount account = ws.loadAccount(keysPath);
            emit(Json{{"p", toHex(toBytesBE(account.viewKey.toU256()))}, {"P", pointJson(account.viewPub)}});
        } else if (*deposit) {
            ShieldedAccount account = ws.loadAccount(keysPath);
            DepositRequest req;
            req.asset = asset;
            req.value = U256(value);
            req.source = source;
            req.output = createStealthOutput(account.address(), asset, U256(value), rng);
            OpResult result = sim.deposit(req);
            requireOk(result);
            emit(receiptToJson(result, sim));
        } else if (*transfer) {
            ShieldedAccount account = ws.loadAccount(keysPath);
            TxIntent intent;
            intent.payments.push_back({resolveRecipient(sim, to), asset, U256(value)});
            TxEnvelope envelope = buildOperation(sim, account, intent, feeAsset ? feeAsset : asset, provingKey, rng);
            OpResult result = sim.submitViaBundler(std::move(envelope));
            requireOk(result);
            emit(receiptToJson(result, sim));
        } else if (*withdraw) {
            ShieldedAccount account = ws.loadAccount(keysPath);
            TxIntent intent;
            intent.publicOut.push_back({asset, U256(value)});
            TxEnvelope envelope = buildOperation(sim, account, intent, feeAsset ? feeAsset : asset, provingKey, rng);
            OpResult result = sim.submitViaBundler(std::move(envelope));
            requireOk(result);
            emit(receiptToJson(result, sim));
        } else if (*convert) {
            ShieldedAccount account = ws.loadAccount(keysPath);
            ConvertRequest req;
            req.inputs = {{asset, U256(value)}};
            req.feeAsset = feeAsset;
            if (*minOutOpt) {
                auto bytes = toBytesBE(U256(minOut));
                req.payload.assign(bytes.end() - 8, bytes.end());
            }
            req.proxyId = proxyId;
            req.outputStealth = {createStealthOutput(account.address(), 0, U256(), rng)};

            TxIntent intent;
            intent.publicOut.push_back({asset, U256(value)});

            // The fee settles from the proxy outputs, so it never changes the
            // funding side: one requote at the built arity suffices.
            req.feeValue = sim.pool().feeQuote(0, 1, feeAsset);
            TxEnvelope envelope = buildSignedEnvelope(sim, account, intent, TxKind::Convert, provingKey, rng, req);
            req.feeValue = sim.pool().feeQuote(countInputs(envelope.publicInputs),
                                               countOutputs(envelope.publicInputs), feeAsset);
            envelope = buildSignedEnvelope(sim, account, intent, TxKind::Convert, provingKey, rng, std::move(req));
            OpResult result = sim.submitViaBundler(std::move(envelope));
            requireOk(result);
            emit(receiptToJson(result, sim));
        } else if (*requestCmd) {
            Json revokerDoc = readJsonFile(revokerPath);
            Fr revokerKey = Fr::fromU256(fromHexStr(revokerDoc.at("key").get<std::string>()));
            std::string txId = resolveTxId(sim, txRef);
            RevocationRequest request = makeRevocationRequest(txId, justification, revokerKey);
            if (!sim.submitRevocationRequest(request))
                bail({13, "missing-compliance", "request signature does not verify against the configured revoker"});
            appendRequestMirror(cfg, request);
            emit(Json{{"tx_id", txId}, {"logged", true}, {"request", requestJson(request)}});
        } else if (*approve) {
            std::string txId = resolveTxId(sim, txRef);
            auto event = sim.findOperationEvent(txId);
            if (!event) bail({17, "not-found", "no operation with tx id " + txId});
            TxEnvelope envelope = envelopeFromJson(event->payload.at("envelope"));
            if (!envelope.compliance) bail({13, "missing-compliance", "operation carries no compliance envelope"});

            const RevocationRequest* request = nullptr;
            for (const auto& r : sim.requestLog().entries())
                if (r.txId == txId) request = &r;
            if (!request) bail({13, "request-not-logged", "no logged request for " + txId});

            Share<Fr> share = guardianShareFromJson(readJsonFile(sharePath));
            PartialDecryption partial = guardianApprove(*request, sim.requestLog(), *envelope.compliance, share);
            emit(partialJson(partial));
        } else if (*reveal) {
            Json revokerDoc = readJsonFile(revokerPath);
            Fr revokerKey = Fr::fromU256(fromHexStr(revokerDoc.at("key").get<std::string>()));
            std::string txId = resolveTxId(sim, txRef);
            auto event = sim.findOperationEvent(txId);
            if (!event) bail({17, "not-found", "no operation with tx id " + txId});
            TxEnvelope envelope = envelopeFromJson(event->payload.at("envelope"));
            if (!envelope.compliance) bail({13, "missing-compliance", "operation carries no compliance envelope"});

            std::vector<PartialDecryption> partials;
            std::stringstream ss(partialsCsv);
            std::string item;
            while (std::getline(ss, item, ',')) partials.push_back(partialFromJson(readJsonFile(item)));

            unsigned threshold = cfg.at("pool").at("compliance").at("threshold").get<unsigned>();
            InnerCiphertext inner = combinePartials(*envelope.compliance, partials, threshold);
            std::vector<uint8_t> plain = revokerDecrypt(inner, revokerKey);
            emit(Json{{"tx_id", txId}, {"disclosure", Json::parse(std::string(plain.begin(), plain.end()))}});
        }
        return 0;
    } catch (const Error& e) {
        bail({errcExitCode(e.code()), errcName(e.code()), e.what()});
    } catch (const std::exception& e) {
        bail({1, "error", e.what()});
    }
}

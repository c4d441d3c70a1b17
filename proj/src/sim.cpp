#include "zkfi/sim.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>

#include "zkfi/errors.hpp"
#include "zkfi/hex.hpp"

namespace zkfi {

namespace {

std::shared_ptr<ConvertProxy> buildProxy(const ProxyConfig& cfg) {
    if (cfg.kind == "swap") return std::make_shared<MockSwapProxy>(cfg.assetIn, cfg.assetOut, cfg.reserveIn, cfg.reserveOut);
    if (cfg.kind == "stake") return std::make_shared<MockStakeProxy>(cfg.assetIn, cfg.assetOut);
    fail(Errc::Parse, "unknown proxy kind: " + cfg.kind);
}

}  // namespace

Pool makePool(const PoolParams& params, const std::vector<ProxyConfig>& proxies) {
    Pool pool(params, std::make_shared<SimulatedSnark>());
    for (const auto& cfg : proxies) pool.registerProxy(cfg.id, buildProxy(cfg));
    return pool;
}

Simulator::Simulator(PoolParams params, std::vector<ProxyConfig> proxies, std::string ledgerPath)
    : pool_(makePool(params, proxies)), ledgerPath_(std::move(ledgerPath)) {
    if (params.compliance.configured()) requestLog_.setRevoker(params.compliance.revokerPub);

    if (!ledgerPath_.empty()) {
        // Advisory lock held for the simulator's lifetime: concurrent CLI
        // invocations sharing a ledger file serialize here.
        lockFd_ = ::open(ledgerPath_.c_str(), O_CREAT | O_RDWR, 0644);
        if (lockFd_ >= 0 && ::flock(lockFd_, LOCK_EX) != 0) {
            ::close(lockFd_);
            lockFd_ = -1;
        }
    }
    if (!ledgerPath_.empty()) {
        std::ifstream in(ledgerPath_);
        if (in.good()) {
            replaying_ = true;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                Json j = Json::parse(line);
                LedgerEvent event{j.at("seq").get<uint64_t>(), j.at("kind").get<std::string>(), j.at("payload")};
                replayEvent(event);
                events_.push_back(std::move(event));
            }
            replaying_ = false;
        }
    }
}

Simulator::~Simulator() {
    if (lockFd_ >= 0) {
        ::flock(lockFd_, LOCK_UN);
        ::close(lockFd_);
    }
}

Simulator::Simulator(Simulator&& other) noexcept
    : pool_(std::move(other.pool_)),
      registry_(std::move(other.registry_)),
      requestLog_(std::move(other.requestLog_)),
      queue_(std::move(other.queue_)),
      events_(std::move(other.events_)),
      ledgerPath_(std::move(other.ledgerPath_)),
      replaying_(other.replaying_),
      lockFd_(other.lockFd_) {
    other.lockFd_ = -1;
}

Json Simulator::receiptJson(const Receipt& receipt) {
    Json minted = Json::array();
    for (const auto& m : receipt.minted) {
        Json entry{{"leaf", m.leafIndex}, {"commitment", m.commitment.toHex()}, {"aux", toHex(m.aux)}};
        if (m.publicFace) {
            entry["public_asset"] = m.publicFace->asset;
            entry["public_value"] = toDec(m.publicFace->value);
        }
        minted.push_back(entry);
    }
    Json etas = Json::array();
    for (const auto& eta : receipt.spentNullifiers) etas.push_back(eta.toHex());
    Json proxyOut = Json::array();
    for (const auto& f : receipt.proxyOutputs) proxyOut.push_back(Json{{"asset", f.asset}, {"value", toDec(f.value)}});
    return Json{{"tx_id", receipt.txId}, {"minted", minted}, {"nullifiers", etas}, {"proxy_outputs", proxyOut}};
}

void Simulator::appendEvent(const std::string& kind, Json payload) {
    LedgerEvent event{nextSeq(), kind, std::move(payload)};
    pool_.advanceBlocks(1);
    persist(event);
    events_.push_back(std::move(event));
}

void Simulator::persist(const LedgerEvent& event) {
    if (ledgerPath_.empty() || replaying_) return;
    std::ofstream out(ledgerPath_, std::ios::app);
    if (!out.good()) fail(Errc::Io, "cannot append to ledger file " + ledgerPath_);
    Json j{{"seq", event.seq}, {"kind", event.kind}, {"payload", event.payload}};
    out << j.dump() << "\n";
}

OpResult Simulator::deposit(const DepositRequest& req) {
    OpResult result = pool_.applyDeposit(req);
    if (!result.ok()) return result;
    Json payload{{"asset", req.asset},
                 {"value", toDec(req.value)},
                 {"source", req.source},
                 {"receipt", receiptJson(result.receipt)}};
    appendEvent("deposit", std::move(payload));
    result.receipt.txId = "";  // deposits carry no statement, hence no tx id
    return result;
}

OpResult Simulator::enqueue(TxEnvelope envelope) {
    if (envelope.kind == TxKind::Deposit) {
        OpResult result;
        result.reject = Reject::Channel;
        result.detail = "deposits are sent directly from a wallet, never through the bundler";
        return result;
    }
    queue_.push_back(std::move(envelope));
    OpResult queued;
    queued.detail = "queued";
    return queued;
}

std::vector<OpResult> Simulator::flushBundler() {
    std::vector<OpResult> results;
    while (!queue_.empty()) {
        TxEnvelope envelope = std::move(queue_.front());
        queue_.pop_front();
        OpResult result = pool_.applyOperation(envelope);
        if (result.ok()) {
            Json payload{{"envelope", envelopeJson(envelope)}, {"receipt", receiptJson(result.receipt)}};
            appendEvent(envelope.kind == TxKind::Convert ? "convert" : "operation", std::move(payload));
        }
        results.push_back(std::move(result));
    }
    return results;
}

OpResult Simulator::submitViaBundler(TxEnvelope envelope) {
    OpResult queued = enqueue(std::move(envelope));
    if (!queued.ok()) return queued;
    auto results = flushBundler();
    return results.empty() ? queued : results.back();
}

bool Simulator::registerHandle(const std::string& handle, const ShieldedAddress& address) {
    if (!registry_.add(handle, address)) return false;
    appendEvent("registry", Json{{"handle", handle}, {"address", toHex(address.encode())}});
    return true;
}

bool Simulator::submitRevocationRequest(const RevocationRequest& request) {
    if (!requestLog_.append(request)) return false;
    appendEvent("compliance-request", requestJson(request));
    return true;
}

void Simulator::advanceBlocks(uint64_t n) {
    if (n == 0) return;
    // advance is itself one event (one block) plus the requested extra
    pool_.advanceBlocks(n - 1);
    appendEvent("advance", Json{{"blocks", n}});
}

void Simulator::replayEvent(const LedgerEvent& event) {
    if (event.kind == "deposit") {
        DepositRequest req;
        req.asset = event.payload.at("asset").get<uint32_t>();
        req.value = fromDec(event.payload.at("value").get<std::string>());
        req.source = event.payload.at("source").get<std::string>();
        req.output = parseAux(fromHex(event.payload.at("receipt").at("minted")[0].at("aux").get<std::string>()));
        OpResult result = pool_.applyDeposit(req);
        if (!result.ok()) fail(Errc::Io, "ledger replay: deposit rejected: " + result.detail);
    } else if (event.kind == "operation" || event.kind == "convert") {
        TxEnvelope envelope = envelopeFromJson(event.payload.at("envelope"));
        OpResult result = pool_.applyOperation(envelope);
        if (!result.ok()) fail(Errc::Io, "ledger replay: operation rejected: " + result.detail);
    } else if (event.kind == "registry") {
        auto address = ShieldedAddress::decode(fromHex(event.payload.at("address").get<std::string>()));
        if (!address) fail(Errc::Io, "ledger replay: bad registry address");
        registry_.add(event.payload.at("handle").get<std::string>(), *address);
    } else if (event.kind == "compliance-request") {
        if (!requestLog_.append(requestFromJson(event.payload)))
            fail(Errc::Io, "ledger replay: compliance request does not verify");
    } else if (event.kind == "advance") {
        pool_.advanceBlocks(event.payload.at("blocks").get<uint64_t>() - 1);
    } else {
        fail(Errc::Io, "ledger replay: unknown event kind " + event.kind);
    }
    pool_.advanceBlocks(1);
}

std::optional<LedgerEvent> Simulator::findOperationEvent(const std::string& txId) const {
    for (const auto& event : events_) {
        if (event.kind != "operation" && event.kind != "convert") continue;
        if (event.payload.at("receipt").at("tx_id").get<std::string>() == txId) return event;
    }
    return std::nullopt;
}

Bytes32 Simulator::stateDigest() const {
    std::vector<uint8_t> buf;
    Bytes32 poolDigest = pool_.stateDigest();
    buf.insert(buf.end(), poolDigest.begin(), poolDigest.end());
    for (const auto& [handle, address] : registry_.entries()) {
        buf.insert(buf.end(), handle.begin(), handle.end());
        auto enc = address.encode();
        buf.insert(buf.end(), enc.begin(), enc.end());
    }
    buf.push_back(uint8_t(requestLog_.entries().size()));
    uint64_t seq = nextSeq();
    for (int i = 7; i >= 0; --i) buf.push_back(uint8_t(seq >> (8 * i)));
    return keccak256(buf);
}

}  // namespace zkfi

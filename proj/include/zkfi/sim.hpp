#ifndef ZKFI_SIM_HPP_
#define ZKFI_SIM_HPP_

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "zkfi/pool.hpp"
#include "zkfi/serde.hpp"

namespace zkfi {

// One simulated-chain event: sequence number doubles as the block height.
struct LedgerEvent {
    uint64_t seq = 0;
    std::string kind;  // registry | deposit | operation | convert | compliance-request | advance
    Json payload;
};

// In-process chain simulator: pool state machine + address registry +
// compliance request log, persisted as an append-only JSON-lines file and
// reconstructed by replaying it. One block per accepted event; no reorgs.
class Simulator {
  public:
    // ledgerPath may be empty for a purely in-memory simulator. If the file
    // exists its events are replayed through the full validation path. A
    // non-empty path is held under an advisory lock until destruction.
    Simulator(PoolParams params, std::vector<ProxyConfig> proxies, std::string ledgerPath);
    ~Simulator();
    Simulator(const Simulator&) = delete;
    Simulator& operator=(const Simulator&) = delete;
    Simulator(Simulator&& other) noexcept;

    // Direct channel (wallet -> pool); the only path for deposits.
    OpResult deposit(const DepositRequest& req);

    // Bundler channel: FIFO queue of user operations.
    OpResult enqueue(TxEnvelope envelope);
    std::vector<OpResult> flushBundler();
    OpResult submitViaBundler(TxEnvelope envelope);  // enqueue + flush one
    size_t queueDepth() const { return queue_.size(); }

    bool registerHandle(const std::string& handle, const ShieldedAddress& address);
    const AddressRegistry& registry() const { return registry_; }

    // Appends a verified request to the log (ledger event + in-memory log).
    bool submitRevocationRequest(const RevocationRequest& request);
    const RequestLog& requestLog() const { return requestLog_; }

    void advanceBlocks(uint64_t n);

    Pool& pool() { return pool_; }
    const Pool& pool() const { return pool_; }
    const std::vector<LedgerEvent>& events() const { return events_; }
    std::optional<LedgerEvent> findOperationEvent(const std::string& txId) const;

    uint64_t nextSeq() const { return events_.empty() ? 1 : events_.back().seq + 1; }
    Bytes32 stateDigest() const;

  private:
    void appendEvent(const std::string& kind, Json payload);
    void replayEvent(const LedgerEvent& event);
    void persist(const LedgerEvent& event);
    static Json receiptJson(const Receipt& receipt);

    Pool pool_;
    AddressRegistry registry_;
    RequestLog requestLog_;
    std::deque<TxEnvelope> queue_;
    std::vector<LedgerEvent> events_;
    std::string ledgerPath_;
    bool replaying_ = false;
    int lockFd_ = -1;
};

// Builds a pool (with proxies) from config records.
Pool makePool(const PoolParams& params, const std::vector<ProxyConfig>& proxies);

}  // namespace zkfi

#endif

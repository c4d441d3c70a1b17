#ifndef ZKFI_POOL_HPP_
#define ZKFI_POOL_HPP_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zkfi/compliance.hpp"
#include "zkfi/merkle.hpp"
#include "zkfi/setup.hpp"
#include "zkfi/statement.hpp"
#include "zkfi/stealth.hpp"
#include "zkfi/txbuild.hpp"

namespace zkfi {

struct AssetInfo {
    std::string symbol;
    unsigned decimals = 18;
    U256 perDepositCap;
    U256 epochVolumeCap;
};

struct GasModel {
    uint64_t base = 50000;
    uint64_t perInput = 10000;
    uint64_t perOutput = 20000;
};

struct ComplianceKeys {
    AffinePoint revokerPub;
    AffinePoint collectivePub;
    unsigned threshold = 0;
    unsigned guardianCount = 0;

    bool configured() const { return threshold > 0; }
};

struct PoolParams {
    unsigned treeDepth = 20;
    size_t rootHistorySize = 64;
    uint64_t epochBlocks = 1000;
    unsigned paymasterMarginBps = 1000;  // 10%
    GasModel gas;
    std::map<uint32_t, AssetInfo> assets;
    std::set<std::string> denyList;
    std::map<uint32_t, uint64_t> gasPrice;  // asset base units per gas unit
    VerifyingKey verifyingKey;
    ComplianceKeys compliance;
};

// Inflow screening. The shipped client is a static deny list; anything
// richer plugs in behind this interface.
class ScreeningClient {
  public:
    virtual ~ScreeningClient() = default;
    virtual bool denied(const std::string& sourceHandle) const = 0;
};

class StaticDenyList final : public ScreeningClient {
  public:
    explicit StaticDenyList(std::set<std::string> handles) : handles_(std::move(handles)) {}
    bool denied(const std::string& handle) const override { return handles_.count(handle) > 0; }

  private:
    std::set<std::string> handles_;
};

// Stateless adapter converting input assets to output assets via a target
// protocol. quote() computes without side effects; settle() applies the
// target's state transition once the pool has accepted the operation.
class ConvertProxy {
  public:
    virtual ~ConvertProxy() = default;
    virtual std::string kind() const = 0;
    virtual std::vector<Flow> quote(const std::vector<Flow>& inputs, uint32_t feeAsset, const U256& feeValue,
                                    std::span<const uint8_t> payload) const = 0;
    virtual void settle(const std::vector<Flow>& /*inputs*/, const std::vector<Flow>& /*outputs*/) {}
    virtual std::string stateString() const { return ""; }
};

// Constant-product AMM pair with integer floor rounding.
class MockSwapProxy final : public ConvertProxy {
  public:
    MockSwapProxy(uint32_t assetIn, uint32_t assetOut, U256 reserveIn, U256 reserveOut);
    std::string kind() const override { return "swap"; }
    std::vector<Flow> quote(const std::vector<Flow>& inputs, uint32_t feeAsset, const U256& feeValue,
                            std::span<const uint8_t> payload) const override;
    void settle(const std::vector<Flow>& inputs, const std::vector<Flow>& outputs) override;
    std::string stateString() const override;

    uint32_t assetIn() const { return assetIn_; }
    uint32_t assetOut() const { return assetOut_; }

  private:
    uint32_t assetIn_, assetOut_;
    U256 reserveIn_, reserveOut_;
};

// 1:1 wrapper (stake-style).
class MockStakeProxy final : public ConvertProxy {
  public:
    MockStakeProxy(uint32_t assetIn, uint32_t wrappedAsset) : assetIn_(assetIn), wrapped_(wrappedAsset) {}
    std::string kind() const override { return "stake"; }
    std::vector<Flow> quote(const std::vector<Flow>& inputs, uint32_t feeAsset, const U256& feeValue,
                            std::span<const uint8_t> payload) const override;

  private:
    uint32_t assetIn_, wrapped_;
};

enum class TxKind { Deposit, Operation, Convert };

struct ConvertRequest {
    std::vector<Flow> inputs;   // released to the proxy
    uint32_t feeAsset = 0;      // e_f
    U256 feeValue;              // v_f
    std::vector<uint8_t> payload;
    std::string proxyId;
    std::vector<StealthOutput> outputStealth;  // one per expected proxy output asset
};

struct TxEnvelope {
    TxKind kind = TxKind::Operation;
    PublicInputs publicInputs;
    Proof proof;
    std::vector<std::vector<uint8_t>> auxData;  // aligned with live output slots
    Flow fee;
    std::optional<ComplianceEnvelope> compliance;
    std::optional<ConvertRequest> convert;
};

struct DepositRequest {
    uint32_t asset = 0;
    U256 value;
    StealthOutput output;
    std::string source;
};

enum class Reject {
    None,
    Screening,
    DepositLimit,
    EpochLimit,
    UnknownAsset,
    StaleRoot,
    DoubleSpend,
    BadProof,
    Paymaster,
    FeeMissing,
    Channel,
    UnknownProxy,
    ProxyFailure,
    Conflict,
    Malformed,
    MissingCompliance,
};

const char* rejectName(Reject reject);

struct MintedNote {
    uint64_t leafIndex = 0;
    Fq commitment;
    std::vector<uint8_t> aux;
    // Convert mints carry their asset/value in the clear; the target
    // protocol's transfers are public anyway and the payload cannot have
    // encrypted a value unknown at build time.
    std::optional<Flow> publicFace;
};

struct Receipt {
    std::string txId;
    std::vector<MintedNote> minted;
    std::vector<Fq> spentNullifiers;
    std::vector<Flow> proxyOutputs;  // converts only
};

struct OpResult {
    Reject reject = Reject::None;
    std::string detail;
    Receipt receipt;

    bool ok() const { return reject == Reject::None; }
};

// The multi-asset pool state machine. Strictly serialized: one operation
// applied at a time; every check runs before any mutation, so a rejection
// leaves the state bit-identical.
class Pool {
  public:
    Pool(PoolParams params, std::shared_ptr<const ProofBackend> backend,
         std::shared_ptr<const ScreeningClient> screening = nullptr);

    OpResult applyDeposit(const DepositRequest& req);
    OpResult applyOperation(const TxEnvelope& envelope);  // Operation or Convert kind

    // Throws Errc::Conflict on duplicate id.
    void registerProxy(const std::string& id, std::shared_ptr<ConvertProxy> proxy);
    const ConvertProxy* proxy(const std::string& id) const;

    // Base units of `asset` per gas unit; throws Errc::QuoteUnavailable.
    uint64_t gasPrice(uint32_t asset) const;
    uint64_t gasEstimate(unsigned inputCount, unsigned outputCount) const;
    // Minimum fee the paymaster accepts: estimate * price * (1 + margin).
    U256 feeQuote(unsigned inputCount, unsigned outputCount, uint32_t feeAsset) const;
    bool paymasterValidate(const TxEnvelope& envelope, std::string* why = nullptr) const;

    void advanceBlocks(uint64_t n = 1) { blockHeight_ += n; }
    uint64_t blockHeight() const { return blockHeight_; }

    const NoteTree& tree() const { return tree_; }
    const RootHistory& roots() const { return roots_; }
    bool nullifierSeen(const Fq& eta) const { return nullifiers_.count(eta.toU256()) > 0; }
    size_t nullifierCount() const { return nullifiers_.size(); }

    U256 balance(uint32_t asset) const;
    U256 paymasterCollected(uint32_t asset) const;
    U256 totalDeposited(uint32_t asset) const;
    U256 totalWithdrawn(uint32_t asset) const;
    U256 totalConvertOut(uint32_t asset) const;
    U256 totalConvertIn(uint32_t asset) const;

    const PoolParams& params() const { return params_; }

    // keccak over the full mutable state, proxies included.
    Bytes32 stateDigest() const;

  private:
    struct Validated;
    bool validateCommon(const TxEnvelope& envelope, OpResult& result, unsigned& liveOutputs) const;
    void applyFlows(const PublicInputs& pub);

    PoolParams params_;
    std::shared_ptr<const ProofBackend> backend_;
    std::shared_ptr<const ScreeningClient> screening_;

    NoteTree tree_;
    RootHistory roots_;
    std::set<U256> nullifiers_;
    std::map<uint32_t, U256> balances_;
    std::map<uint32_t, U256> paymaster_;
    std::map<uint32_t, U256> deposited_, withdrawn_, convertOut_, convertIn_;
    uint64_t blockHeight_ = 0;
    uint64_t epochIndex_ = 0;
    std::map<uint32_t, U256> epochVolume_;
    std::map<std::string, std::shared_ptr<ConvertProxy>> proxies_;
};

}  // namespace zkfi

#endif

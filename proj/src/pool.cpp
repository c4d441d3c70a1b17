#include "zkfi/pool.hpp"

#include <algorithm>

#include "zkfi/errors.hpp"
#include "zkfi/hex.hpp"
#include "zkfi/keccak.hpp"
#include "zkfi/note.hpp"

namespace zkfi {

const char* rejectName(Reject reject) {
    switch (reject) {
        case Reject::None: return "none";
        case Reject::Screening: return "screening";
        case Reject::DepositLimit: return "deposit-limit";
        case Reject::EpochLimit: return "epoch-limit";
        case Reject::UnknownAsset: return "unknown-asset";
        case Reject::StaleRoot: return "stale-root";
        case Reject::DoubleSpend: return "double-spend";
        case Reject::BadProof: return "bad-proof";
        case Reject::Paymaster: return "paymaster";
        case Reject::FeeMissing: return "fee-missing";
        case Reject::Channel: return "channel";
        case Reject::UnknownProxy: return "unknown-proxy";
        case Reject::ProxyFailure: return "proxy-failure";
        case Reject::Conflict: return "conflict";
        case Reject::Malformed: return "malformed";
        case Reject::MissingCompliance: return "missing-compliance";
    }
    return "unknown";
}

MockSwapProxy::MockSwapProxy(uint32_t assetIn, uint32_t assetOut, U256 reserveIn, U256 reserveOut)
    : assetIn_(assetIn), assetOut_(assetOut), reserveIn_(reserveIn), reserveOut_(reserveOut) {
    if (assetIn == assetOut) fail(Errc::InvalidArgument, "swap pair must differ");
    if (reserveIn_.isZero() || reserveOut_.isZero()) fail(Errc::InvalidArgument, "swap reserves must be positive");
}

namespace {

void addTo(std::map<uint32_t, U256>& acc, uint32_t asset, const U256& value) {
    auto [it, inserted] = acc.emplace(asset, value);
    if (!inserted) addCarry(it->second, value);
}

void subFrom(std::map<uint32_t, U256>& acc, uint32_t asset, const U256& value) {
    auto it = acc.find(asset);
    if (it == acc.end() || it->second < value) fail(Errc::InvalidArgument, "balance underflow");
    subBorrow(it->second, value);
}

// floor(a * b / c) for values comfortably below 2^128
U256 mulDiv(const U256& a, const U256& b, const U256& c) {
    if (a.bitLength() + b.bitLength() > 250) fail(Errc::InvalidArgument, "swap arithmetic overflow");
    auto wide = mulWide(a, b);
    U256 prod{wide[0], wide[1], wide[2], wide[3]};
    // binary long division
    U256 quotient, remainder;
    for (int bit = int(prod.bitLength()) - 1; bit >= 0; --bit) {
        shl1(remainder);
        if (prod.bit(unsigned(bit))) remainder.w[0] |= 1;
        if (remainder >= c) {
            subBorrow(remainder, c);
            quotient.setBit(unsigned(bit));
        }
    }
    return quotient;
}

}  // namespace

std::vector<Flow> MockSwapProxy::quote(const std::vector<Flow>& inputs, uint32_t, const U256&,
                                       std::span<const uint8_t> payload) const {
    if (inputs.size() != 1 || inputs[0].asset != assetIn_ || inputs[0].value.isZero())
        fail(Errc::InvalidArgument, "swap expects a single input of its pair asset");
    U256 in = inputs[0].value;
    U256 denom = reserveIn_;
    addCarry(denom, in);
    U256 out = mulDiv(reserveOut_, in, denom);
    if (!payload.empty()) {
        if (payload.size() != 8) fail(Errc::InvalidArgument, "swap payload must be an 8-byte minimum-output bound");
        U256 minOut = fromBytesBE(payload);
        if (out < minOut) fail(Errc::InvalidArgument, "swap output below the minimum bound");
    }
    return {{assetOut_, out}};
}

void MockSwapProxy::settle(const std::vector<Flow>& inputs, const std::vector<Flow>& outputs) {
    addCarry(reserveIn_, inputs[0].value);
    subBorrow(reserveOut_, outputs[0].value);
}

std::string MockSwapProxy::stateString() const {
    return "swap:" + std::to_string(assetIn_) + ":" + std::to_string(assetOut_) + ":" + toDec(reserveIn_) + ":" +
           toDec(reserveOut_);
}

std::vector<Flow> MockStakeProxy::quote(const std::vector<Flow>& inputs, uint32_t, const U256&,
                                        std::span<const uint8_t>) const {
    if (inputs.size() != 1 || inputs[0].asset != assetIn_ || inputs[0].value.isZero())
        fail(Errc::InvalidArgument, "stake expects a single input of its underlying asset");
    return {{wrapped_, inputs[0].value}};
}

Pool::Pool(PoolParams params, std::shared_ptr<const ProofBackend> backend,
           std::shared_ptr<const ScreeningClient> screening)
    : params_(std::move(params)),
      backend_(std::move(backend)),
      screening_(screening ? std::move(screening) : std::make_shared<StaticDenyList>(params_.denyList)),
      tree_(params_.treeDepth),
      roots_(params_.rootHistorySize) {
    roots_.push(tree_.root());
}

void Pool::registerProxy(const std::string& id, std::shared_ptr<ConvertProxy> proxy) {
    if (id.empty() || proxy == nullptr) fail(Errc::InvalidArgument, "proxy registration needs an id and an instance");
    if (!proxies_.emplace(id, std::move(proxy)).second) fail(Errc::Conflict, "proxy id already registered");
}

const ConvertProxy* Pool::proxy(const std::string& id) const {
    auto it = proxies_.find(id);
    return it == proxies_.end() ? nullptr : it->second.get();
}

uint64_t Pool::gasPrice(uint32_t asset) const {
    auto it = params_.gasPrice.find(asset);
    if (it == params_.gasPrice.end() || it->second == 0)
        fail(Errc::QuoteUnavailable, "no gas price configured for asset " + std::to_string(asset));
    return it->second;
}

uint64_t Pool::gasEstimate(unsigned inputCount, unsigned outputCount) const {
    return params_.gas.base + uint64_t(inputCount) * params_.gas.perInput +
           uint64_t(outputCount) * params_.gas.perOutput;
}

U256 Pool::feeQuote(unsigned inputCount, unsigned outputCount, uint32_t feeAsset) const {
    // ceil(estimate * price * (10000 + margin) / 10000)
    uint64_t estimate = gasEstimate(inputCount, outputCount);
    uint64_t price = gasPrice(feeAsset);
    auto wide = mulWide(U256(estimate), U256(price));
    U256 cost{wide[0], wide[1], wide[2], wide[3]};
    auto scaled = mulWide(cost, U256(10000 + params_.paymasterMarginBps));
    U256 numer{scaled[0], scaled[1], scaled[2], scaled[3]};
    addCarry(numer, U256(9999));
    return mulDiv(numer, U256(1), U256(10000));
}

bool Pool::paymasterValidate(const TxEnvelope& envelope, std::string* why) const {
    auto explain = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (envelope.fee.asset == 0 || envelope.fee.value.isZero()) return explain("fee quote missing");
    if (!params_.assets.count(envelope.fee.asset)) return explain("fee asset not registered");
    U256 minimum;
    try {
        minimum = feeQuote(countInputs(envelope.publicInputs), countOutputs(envelope.publicInputs),
                           envelope.fee.asset);
    } catch (const Error& e) {
        return explain(e.what());
    }
    if (envelope.fee.value < minimum)
        return explain("fee below the paymaster minimum of " + toDec(minimum));
    return true;
}

U256 Pool::balance(uint32_t asset) const {
    auto it = balances_.find(asset);
    return it == balances_.end() ? U256() : it->second;
}
U256 Pool::paymasterCollected(uint32_t asset) const {
    auto it = paymaster_.find(asset);
    return it == paymaster_.end() ? U256() : it->second;
}
U256 Pool::totalDeposited(uint32_t asset) const {
    auto it = deposited_.find(asset);
    return it == deposited_.end() ? U256() : it->second;
}
U256 Pool::totalWithdrawn(uint32_t asset) const {
    auto it = withdrawn_.find(asset);
    return it == withdrawn_.end() ? U256() : it->second;
}
U256 Pool::totalConvertOut(uint32_t asset) const {
    auto it = convertOut_.find(asset);
    return it == convertOut_.end() ? U256() : it->second;
}
U256 Pool::totalConvertIn(uint32_t asset) const {
    auto it = convertIn_.find(asset);
    return it == convertIn_.end() ? U256() : it->second;
}

OpResult Pool::applyDeposit(const DepositRequest& req) {
    OpResult result;
    auto rejectWith = [&](Reject r, const std::string& detail) {
        result.reject = r;
        result.detail = detail;
        return result;
    };

    auto assetIt = params_.assets.find(req.asset);
    if (assetIt == params_.assets.end()) return rejectWith(Reject::UnknownAsset, "asset not registered");
    if (!valueFits(req.value) || req.value.isZero()) return rejectWith(Reject::Malformed, "deposit value invalid");
    if (screening_->denied(req.source))
        return rejectWith(Reject::Screening, "source handle failed screening: " + req.source);
    if (req.value > assetIt->second.perDepositCap)
        return rejectWith(Reject::DepositLimit, "deposit exceeds the per-deposit cap of " +
                                                    toDec(assetIt->second.perDepositCap));

    // Tumbling epoch volume window.
    uint64_t epoch = params_.epochBlocks ? blockHeight_ / params_.epochBlocks : 0;
    if (epoch != epochIndex_) {
        epochIndex_ = epoch;
        epochVolume_.clear();
    }
    U256 used = epochVolume_.count(req.asset) ? epochVolume_[req.asset] : U256();
    U256 after = used;
    addCarry(after, req.value);
    if (after > assetIt->second.epochVolumeCap)
        return rejectWith(Reject::EpochLimit, "deposit exceeds the epoch volume cap");

    if (tree_.size() >= tree_.capacity()) return rejectWith(Reject::Malformed, "note tree at capacity");

    Fq commitment = noteCommitment(req.asset, req.output.stealthAddress, req.value);
    uint64_t leaf = tree_.append(commitment);
    roots_.push(tree_.root());
    epochVolume_[req.asset] = after;
    addTo(balances_, req.asset, req.value);
    addTo(deposited_, req.asset, req.value);

    result.receipt.minted.push_back({leaf, commitment, encodeAux(req.output), std::nullopt});
    return result;
}

bool Pool::validateCommon(const TxEnvelope& envelope, OpResult& result, unsigned& liveOutputs) const {
    auto rejectWith = [&](Reject r, const std::string& detail) {
        result.reject = r;
        result.detail = detail;
        return false;
    };

    if (envelope.kind == TxKind::Deposit)
        return rejectWith(Reject::Channel, "deposits are sent directly, not as user operations");

    // Public inflows only arrive through the deposit channel.
    for (unsigned j = 0; j < kMaxOutputs; ++j) {
        if (envelope.publicInputs.publicValue[j] > 0)
            return rejectWith(Reject::Channel, "positive public value requires the deposit channel");
        if (envelope.publicInputs.publicAsset[j] != 0 && !params_.assets.count(envelope.publicInputs.publicAsset[j]))
            return rejectWith(Reject::UnknownAsset, "public flow references an unregistered asset");
    }

    if (params_.compliance.configured() && !envelope.compliance.has_value())
        return rejectWith(Reject::MissingCompliance, "operation lacks its compliance envelope");
    if (envelope.compliance && envelope.compliance->txBinding != transactionId(envelope.publicInputs))
        return rejectWith(Reject::MissingCompliance, "compliance envelope bound to a different transaction");

    liveOutputs = countOutputs(envelope.publicInputs);
    if (envelope.auxData.size() != liveOutputs)
        return rejectWith(Reject::Malformed, "aux data count does not match live output slots");

    std::string why;
    if (!paymasterValidate(envelope, &why)) return rejectWith(Reject::Paymaster, why);

    if (!roots_.contains(envelope.publicInputs.root))
        return rejectWith(Reject::StaleRoot, "root is not in the recent-root window");

    std::set<U256> inTx;
    for (const Fq& eta : envelope.publicInputs.nullifier) {
        if (eta.isZero()) continue;
        if (!inTx.insert(eta.toU256()).second)
            return rejectWith(Reject::DoubleSpend, "duplicate nullifier inside the transaction");
        if (nullifiers_.count(eta.toU256()))
            return rejectWith(Reject::DoubleSpend, "nullifier already spent");
    }

    if (tree_.size() + liveOutputs > tree_.capacity())
        return rejectWith(Reject::Malformed, "note tree would exceed capacity");

    if (!backend_->verify(params_.verifyingKey, envelope.proof, envelope.publicInputs))
        return rejectWith(Reject::BadProof, "proof does not verify");

    // Custody sufficiency, aggregated per asset so the later balance
    // mutation can never throw mid-apply. Unreachable while conservation
    // held historically, but a forged proof must still be rejected cleanly.
    std::map<uint32_t, U256> outflows;
    for (unsigned j = 0; j < kMaxOutputs; ++j) {
        int64_t v = envelope.publicInputs.publicValue[j];
        if (v < 0) addTo(outflows, envelope.publicInputs.publicAsset[j], U256(uint64_t(-v)));
    }
    for (const auto& [asset, total] : outflows) {
        if (balance(asset) < total) return rejectWith(Reject::Malformed, "outflows exceed pool custody");
    }
    return true;
}

void Pool::applyFlows(const PublicInputs& pub) {
    for (unsigned j = 0; j < kMaxOutputs; ++j) {
        if (pub.publicAsset[j] == 0) continue;
        int64_t v = pub.publicValue[j];
        if (v < 0) subFrom(balances_, pub.publicAsset[j], U256(uint64_t(-v)));
        else if (v > 0) addTo(balances_, pub.publicAsset[j], U256(uint64_t(v)));
    }
}

OpResult Pool::applyOperation(const TxEnvelope& envelope) {
    OpResult result;
    result.receipt.txId = transactionId(envelope.publicInputs);
    unsigned liveOutputs = 0;
    if (!validateCommon(envelope, result, liveOutputs)) return result;

    auto rejectWith = [&](Reject r, const std::string& detail) {
        result.reject = r;
        result.detail = detail;
        return result;
    };

    const bool isConvert = envelope.kind == TxKind::Convert;
    ConvertProxy* proxyPtr = nullptr;
    std::vector<Flow> proxyOutputs;
    std::vector<Flow> mintPlan;  // per-asset values minted from proxy outputs (fee already deducted)

    if (isConvert) {
        if (!envelope.convert) return rejectWith(Reject::Malformed, "convert kind without a convert request");
        const ConvertRequest& req = *envelope.convert;
        if (req.feeAsset != envelope.fee.asset || !(req.feeValue == envelope.fee.value))
            return rejectWith(Reject::Malformed, "convert fee does not match the envelope fee");
        if (req.inputs.empty()) return rejectWith(Reject::Malformed, "convert request has no inputs");
        if (req.feeValue.isZero()) return rejectWith(Reject::Paymaster, "convert fee must be positive");

        auto it = proxies_.find(req.proxyId);
        if (it == proxies_.end()) return rejectWith(Reject::UnknownProxy, "no proxy registered as " + req.proxyId);
        proxyPtr = it->second.get();

        // The operation's outflows must release exactly the convert inputs.
        std::map<uint32_t, U256> outflows, wanted;
        for (unsigned j = 0; j < kMaxOutputs; ++j) {
            int64_t v = envelope.publicInputs.publicValue[j];
            if (v < 0) addTo(outflows, envelope.publicInputs.publicAsset[j], U256(uint64_t(-v)));
        }
        for (const Flow& f : req.inputs) {
            if (f.asset == 0 || f.value.isZero()) return rejectWith(Reject::Malformed, "convert input flow invalid");
            addTo(wanted, f.asset, f.value);
        }
        if (outflows != wanted)
            return rejectWith(Reject::Malformed, "operation outflows do not match the convert inputs");

        try {
            proxyOutputs = proxyPtr->quote(req.inputs, req.feeAsset, req.feeValue, req.payload);
        } catch (const std::exception& e) {
            return rejectWith(Reject::ProxyFailure, std::string("proxy failed: ") + e.what());
        }

        // Aggregate outputs per asset, preserving first-appearance order.
        std::vector<Flow> aggregated;
        for (const Flow& f : proxyOutputs) {
            if (f.asset == 0 || !assetFits(f.asset) || !valueFits(f.value))
                return rejectWith(Reject::ProxyFailure, "proxy returned an invalid output flow");
            auto found = std::find_if(aggregated.begin(), aggregated.end(),
                                      [&](const Flow& g) { return g.asset == f.asset; });
            if (found == aggregated.end()) aggregated.push_back(f);
            else addCarry(found->value, f.value);
        }
        // Fee must come back as one of the output assets.
        auto feeIt = std::find_if(aggregated.begin(), aggregated.end(),
                                  [&](const Flow& g) { return g.asset == envelope.fee.asset; });
        if (feeIt == aggregated.end() || feeIt->value < envelope.fee.value)
            return rejectWith(Reject::FeeMissing, "proxy outputs do not cover the fee asset");

        mintPlan = aggregated;
        for (Flow& f : mintPlan)
            if (f.asset == envelope.fee.asset) subBorrow(f.value, envelope.fee.value);
        mintPlan.erase(std::remove_if(mintPlan.begin(), mintPlan.end(),
                                      [](const Flow& f) { return f.value.isZero(); }),
                       mintPlan.end());

        if (req.outputStealth.size() != mintPlan.size())
            return rejectWith(Reject::Malformed, "convert stealth parameters do not match proxy output count");
        if (tree_.size() + liveOutputs + mintPlan.size() > tree_.capacity())
            return rejectWith(Reject::Malformed, "note tree would exceed capacity");
    } else {
        if (envelope.convert) return rejectWith(Reject::Malformed, "convert request on a non-convert operation");
        // Ordinary operations settle the fee from their own declared outflows.
        U256 outflowFeeAsset;
        for (unsigned j = 0; j < kMaxOutputs; ++j) {
            if (envelope.publicInputs.publicAsset[j] == envelope.fee.asset && envelope.publicInputs.publicValue[j] < 0)
                addCarry(outflowFeeAsset, U256(uint64_t(-envelope.publicInputs.publicValue[j])));
        }
        if (outflowFeeAsset < envelope.fee.value)
            return rejectWith(Reject::FeeMissing, "declared outflows do not cover the fee");
    }

    // --- all checks passed; mutate atomically from here on ---
    for (const Fq& eta : envelope.publicInputs.nullifier) {
        if (eta.isZero()) continue;
        nullifiers_.insert(eta.toU256());
        result.receipt.spentNullifiers.push_back(eta);
    }

    size_t auxCursor = 0;
    for (unsigned j = 0; j < kMaxOutputs; ++j) {
        if (envelope.publicInputs.outCommitment[j].isZero()) continue;
        uint64_t leaf = tree_.append(envelope.publicInputs.outCommitment[j]);
        result.receipt.minted.push_back(
            {leaf, envelope.publicInputs.outCommitment[j], envelope.auxData[auxCursor++], std::nullopt});
    }

    applyFlows(envelope.publicInputs);

    if (isConvert) {
        const ConvertRequest& req = *envelope.convert;
        for (const Flow& f : req.inputs) addTo(convertOut_, f.asset, f.value);
        for (const Flow& f : proxyOutputs) {
            addTo(balances_, f.asset, f.value);
            addTo(convertIn_, f.asset, f.value);
        }
        // Fee leaves custody for the paymaster.
        subFrom(balances_, envelope.fee.asset, envelope.fee.value);
        addTo(paymaster_, envelope.fee.asset, envelope.fee.value);
        for (size_t i = 0; i < mintPlan.size(); ++i) {
            const Flow& f = mintPlan[i];
            const StealthOutput& params = req.outputStealth[i];
            Fq commitment = noteCommitment(f.asset, params.stealthAddress, f.value);
            uint64_t leaf = tree_.append(commitment);
            result.receipt.minted.push_back({leaf, commitment, encodeAux(params), f});
        }
        proxyPtr->settle(req.inputs, proxyOutputs);
        result.receipt.proxyOutputs = proxyOutputs;
    } else {
        // Of the outflows, the fee portion lands with the paymaster rather
        // than an external recipient.
        addTo(paymaster_, envelope.fee.asset, envelope.fee.value);
        for (unsigned j = 0; j < kMaxOutputs; ++j) {
            int64_t v = envelope.publicInputs.publicValue[j];
            if (v < 0) addTo(withdrawn_, envelope.publicInputs.publicAsset[j], U256(uint64_t(-v)));
        }
        subFrom(withdrawn_, envelope.fee.asset, envelope.fee.value);
    }

    roots_.push(tree_.root());
    return result;
}

Bytes32 Pool::stateDigest() const {
    std::vector<uint8_t> buf;
    auto putU64 = [&](uint64_t v) {
        for (int i = 7; i >= 0; --i) buf.push_back(uint8_t(v >> (8 * i)));
    };
    auto putU256v = [&](const U256& v) {
        auto b = toBytesBE(v);
        buf.insert(buf.end(), b.begin(), b.end());
    };
    auto putMap = [&](const std::map<uint32_t, U256>& m) {
        putU64(m.size());
        for (const auto& [k, v] : m) {
            putU64(k);
            putU256v(v);
        }
    };
    putU256v(tree_.root().toU256());
    putU64(tree_.size());
    putU64(nullifiers_.size());
    for (const U256& eta : nullifiers_) putU256v(eta);
    putMap(balances_);
    putMap(paymaster_);
    putMap(deposited_);
    putMap(withdrawn_);
    putMap(convertOut_);
    putMap(convertIn_);
    putMap(epochVolume_);
    putU64(blockHeight_);
    putU64(epochIndex_);
    putU64(proxies_.size());
    for (const auto& [id, proxy] : proxies_) {
        buf.insert(buf.end(), id.begin(), id.end());
        std::string st = proxy->stateString();
        buf.insert(buf.end(), st.begin(), st.end());
    }
    return keccak256(buf);
}

}  // namespace zkfi

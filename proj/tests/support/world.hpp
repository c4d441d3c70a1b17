#ifndef ZKFI_TESTS_WORLD_HPP_
#define ZKFI_TESTS_WORLD_HPP_

#include <memory>

#include "zkfi/sim.hpp"
#include "zkfi/wallet.hpp"

namespace zkfi_test {

using namespace zkfi;

// Full-stack world: configured pool + simulator + funded accounts, with the
// sender pipeline helpers the CLI uses. Gas numbers are scaled down so fees
// stay small next to test note values.
struct SimWorld {
    Rng rng;
    PoolParams params;
    ProvingKey provingKey;
    Fr toxicWaste;
    std::vector<ProxyConfig> proxyConfigs;
    std::unique_ptr<Simulator> sim;
    ShieldedAccount alice, bob, carol;
    GuardianSet guardians;
    ShieldedAccount revoker;

    explicit SimWorld(uint64_t seed, std::string ledgerPath = "", bool withCompliance = true)
        : rng(Rng::seeded(seed)),
          alice(deriveAccount(rng.entropy())),
          bob(deriveAccount(rng.entropy())),
          carol(deriveAccount(rng.entropy())),
          revoker(deriveAccount(rng.entropy())) {
        std::vector<Fr> contributions{rng.scalar(), rng.scalar(), rng.scalar()};
        CeremonyResult ceremony = runSetupCeremony(contributions);
        provingKey = ceremony.keys.provingKey;
        toxicWaste = ceremony.toxicWaste;

        params.treeDepth = 12;
        params.rootHistorySize = 64;
        params.epochBlocks = 1000;
        params.paymasterMarginBps = 1000;
        params.gas = GasModel{10, 2, 3};
        params.assets[1] = AssetInfo{"TOKA", 18, U256(1000000), U256(10000000)};
        params.assets[2] = AssetInfo{"TOKB", 18, U256(1000000), U256(10000000)};
        params.assets[3] = AssetInfo{"WTOK", 18, U256(1000000), U256(10000000)};
        params.gasPrice = {{1, 2}, {2, 1}, {3, 1}};
        params.denyList = {"mallory"};
        params.verifyingKey = ceremony.keys.verifyingKey;
        if (withCompliance) {
            guardians = guardianKeygen(2, 3, rng);
            params.compliance.revokerPub = revoker.signPub;
            params.compliance.collectivePub = guardians.collectivePub;
            params.compliance.threshold = guardians.threshold;
            params.compliance.guardianCount = guardians.count;
        }
        proxyConfigs = {
            {"swap-ab", "swap", 1, 2, U256(1000), U256(1000)},
            {"stake-aw", "stake", 1, 3, U256(), U256()},
        };
        sim = std::make_unique<Simulator>(params, proxyConfigs, std::move(ledgerPath));
    }

    OpResult deposit(const ShieldedAccount& account, uint32_t asset, uint64_t value,
                     const std::string& source = "clean-wallet") {
        DepositRequest req;
        req.asset = asset;
        req.value = U256(value);
        req.source = source;
        req.output = createStealthOutput(account.address(), asset, U256(value), rng);
        return sim->deposit(req);
    }

    // Iterative fee sizing: start from the smallest quote, rebuild until the
    // fee covers the quote at the built arity.
    TxEnvelope makeOperation(const ShieldedAccount& from, TxIntent intent, uint32_t feeAsset) {
        U256 fee = sim->pool().feeQuote(0, 1, feeAsset);
        for (int iter = 0; iter < 8; ++iter) {
            intent.fee = Flow{feeAsset, fee};
            TxEnvelope envelope = buildSignedEnvelope(*sim, from, intent, TxKind::Operation, provingKey, rng);
            unsigned n = countInputs(envelope.publicInputs), m = countOutputs(envelope.publicInputs);
            U256 needed = sim->pool().feeQuote(n, m, feeAsset);
            if (!(fee < needed)) return envelope;
            fee = needed;
        }
        fail(Errc::Funding, "fee sizing did not converge");
    }

    OpResult transfer(const ShieldedAccount& from, const ShieldedAddress& to, uint32_t asset, uint64_t value,
                      uint32_t feeAsset = 0) {
        TxIntent intent;
        intent.payments.push_back({to, asset, U256(value)});
        return sim->submitViaBundler(makeOperation(from, intent, feeAsset ? feeAsset : asset));
    }

    OpResult withdraw(const ShieldedAccount& from, uint32_t asset, uint64_t value, uint32_t feeAsset = 0) {
        TxIntent intent;
        intent.publicOut.push_back({asset, U256(value)});
        return sim->submitViaBundler(makeOperation(from, intent, feeAsset ? feeAsset : asset));
    }

    // Spends `value` of `asset` through a proxy; proxy outputs come back as
    // fresh notes for `from`, minus the fee.
    OpResult convert(const ShieldedAccount& from, const std::string& proxyId, uint32_t asset, uint64_t value,
                     uint32_t feeAsset, std::vector<uint8_t> payload = {}) {
        ConvertRequest req;
        req.inputs = {{asset, U256(value)}};
        req.feeAsset = feeAsset;
        req.feeValue = sim->pool().feeQuote(kMaxInputs, kMaxOutputs, feeAsset);
        req.payload = std::move(payload);
        req.proxyId = proxyId;
        req.outputStealth = {createStealthOutput(from.address(), 0, U256(), rng)};

        TxIntent intent;
        intent.publicOut.push_back({asset, U256(value)});
        TxEnvelope envelope =
            buildSignedEnvelope(*sim, from, intent, TxKind::Convert, provingKey, rng, std::move(req));
        return sim->submitViaBundler(std::move(envelope));
    }

    std::map<uint32_t, U256> balances(const ShieldedAccount& account) const {
        return walletView(*sim, account).balances;
    }
    uint64_t balanceOf(const ShieldedAccount& account, uint32_t asset) const {
        auto b = balances(account);
        auto it = b.find(asset);
        return it == b.end() ? 0 : it->second.w[0];
    }
};

}  // namespace zkfi_test

#endif

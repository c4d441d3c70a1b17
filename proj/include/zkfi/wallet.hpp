#ifndef ZKFI_WALLET_HPP_
#define ZKFI_WALLET_HPP_

#include <map>
#include <optional>
#include <vector>

#include "zkfi/sim.hpp"

namespace zkfi {

struct OwnedNote {
    Note note;
    uint64_t leafIndex = 0;
    Fq commitment;
    Fq nullifier;
    uint64_t eventSeq = 0;
};

// Scans every note entry in the ledger with the account's view key. Convert
// mints carry their asset/value beside the payload; everything else comes
// out of the stealth box.
std::vector<OwnedNote> scanOwnedNotes(const std::vector<LedgerEvent>& events, const ShieldedAccount& account);

struct WalletView {
    std::vector<OwnedNote> unspent;
    std::map<uint32_t, U256> balances;
};

WalletView walletView(const Simulator& sim, const ShieldedAccount& account);

LedgerView ledgerViewFor(const Simulator& sim, const WalletView& wallet);

// Full sender pipeline: build, sign, prove, wrap with the compliance
// envelope. The fee slot must already be part of the intent for plain
// operations; converts declare the fee in the request instead.
TxEnvelope buildSignedEnvelope(const Simulator& sim, const ShieldedAccount& account, const TxIntent& intent,
                               TxKind kind, const ProvingKey& provingKey, Rng& rng,
                               std::optional<ConvertRequest> convert = std::nullopt);

}  // namespace zkfi

#endif

#ifndef ZKFI_TXBUILD_HPP_
#define ZKFI_TXBUILD_HPP_

#include <optional>
#include <vector>

#include "zkfi/account.hpp"
#include "zkfi/note.hpp"
#include "zkfi/statement.hpp"
#include "zkfi/stealth.hpp"

namespace zkfi {

class NoteTree;
class RootHistory;

// A note the wallet can spend: plaintext plus its position in the tree.
struct SpendableNote {
    Note note;
    uint64_t leafIndex = 0;
    Fq commitment;
};

// Frozen view of the ledger a transaction is built against.
struct LedgerView {
    const NoteTree* tree = nullptr;
    const RootHistory* roots = nullptr;
    std::vector<SpendableNote> unspent;
};

struct Payment {
    ShieldedAddress to;
    uint32_t asset = 0;
    U256 value;
};

struct Flow {
    uint32_t asset = 0;
    U256 value;

    bool operator==(const Flow&) const = default;
};

// What the user wants: shielded payments, value crossing the pool boundary
// in either direction, and the paymaster fee.
struct TxIntent {
    std::vector<Payment> payments;
    std::vector<Flow> publicOut;  // leaving the pool
    std::vector<Flow> publicIn;   // entering the pool
    std::optional<Flow> fee;      // leaving the pool, settled to the paymaster
};

struct BuiltTransaction {
    PublicInputs publicInputs;
    PrivateInputs privateInputs;
    // One payload per live output slot, in slot order (payments first, then
    // change back to the sender).
    std::vector<StealthOutput> stealthPayloads;
};

// Steps: scan-filtered note selection (greedy largest-first, ties by lower
// leaf index), nullifier computation, recent root and openings, recipient
// stealth derivation with change back to the sender, and the public V/E
// slots. Throws Errc::Funding, Errc::Arity or Errc::StaleView.
BuiltTransaction buildTransaction(const TxIntent& intent, const ShieldedAccount& account, const LedgerView& view,
                                  Rng& rng);

// Populates ownership signatures for every live input slot.
void signInputs(PrivateInputs& wit, const Fr& signKey);

}  // namespace zkfi

#endif

#ifndef ZKFI_TESTS_FIXTURES_HPP_
#define ZKFI_TESTS_FIXTURES_HPP_

#include <deque>
#include <map>
#include <vector>

#include "zkfi/merkle.hpp"
#include "zkfi/note.hpp"
#include "zkfi/schnorr.hpp"
#include "zkfi/statement.hpp"
#include "zkfi/stealth.hpp"
#include "zkfi/txbuild.hpp"

namespace zkfi_test {

using namespace zkfi;

// A hand-built funded scenario: accounts with notes already in a tree,
// signatures cached, ready to assemble statements slot by slot.
struct FundedScenario {
    explicit FundedScenario(unsigned treeDepth = 6) : tree(treeDepth), roots(16) { roots.push(tree.root()); }

    struct Funded {
        Note note;
        uint64_t leaf;
        Fq commitment;
        Signature signature;
        const ShieldedAccount* owner;
    };

    NoteTree tree;
    RootHistory roots;
    std::deque<Funded> notes;  // stable references across fund() calls

    // Mint a note owned by `account` straight into the tree.
    const Funded& fund(const ShieldedAccount& account, uint32_t asset, uint64_t value, Rng& rng) {
        Note note;
        note.asset = asset;
        note.value = U256(value);
        note.blinding = rng.field();
        note.stealthAddress = stealthAddressFor(account.signPub, note.blinding);
        Fq commitment = noteCommitment(note);
        uint64_t leaf = tree.append(commitment);
        roots.push(tree.root());
        notes.push_back({note, leaf, commitment, schnorrSign(commitment, account.signKey), &account});
        return notes.back();
    }

    void setInput(PublicInputs& pub, PrivateInputs& wit, unsigned slot, const Funded& funded) const {
        wit.inAsset[slot] = funded.note.asset;
        wit.inValue[slot] = funded.note.value;
        wit.inBlinding[slot] = funded.note.blinding;
        wit.inOwner[slot] = funded.owner->signPub;
        wit.inSig[slot] = funded.signature;
        wit.inLeaf[slot] = funded.leaf;
        wit.inPath[slot] = tree.open(funded.leaf);
        pub.nullifier[slot] = noteNullifier(funded.leaf, funded.commitment, funded.note.blinding);
    }

    void setOutput(PublicInputs& pub, PrivateInputs& wit, unsigned slot, uint32_t asset, uint64_t value,
                   const Fq& stealth) const {
        wit.outAsset[slot] = asset;
        wit.outValue[slot] = U256(value);
        wit.outStealth[slot] = stealth;
        pub.outCommitment[slot] = noteCommitment(asset, stealth, U256(value));
    }

    PublicInputs freshPublic() const {
        PublicInputs pub;
        pub.root = roots.current();
        return pub;
    }
};

}  // namespace zkfi_test

#endif

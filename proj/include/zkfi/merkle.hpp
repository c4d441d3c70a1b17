#ifndef ZKFI_MERKLE_HPP_
#define ZKFI_MERKLE_HPP_

#include <cstdint>
#include <deque>
#include <vector>

#include "zkfi/field.hpp"

namespace zkfi {

struct MerklePath {
    std::vector<Fq> siblings;  // leaf level first

    bool operator==(const MerklePath&) const = default;
};

// Append-only Poseidon Merkle tree. Empty leaves hold poseidon(0,0,0);
// appends and openings are O(depth) via per-level node caches.
class NoteTree {
  public:
    explicit NoteTree(unsigned depth);

    unsigned depth() const { return depth_; }
    uint64_t size() const { return uint64_t(levels_[0].size()); }
    uint64_t capacity() const { return uint64_t(1) << depth_; }

    // Returns the index of the new leaf; throws Errc::TreeFull at capacity.
    uint64_t append(const Fq& commitment);

    Fq root() const;
    Fq leaf(uint64_t index) const;

    // Sibling path for an existing leaf; throws Errc::IndexRange.
    MerklePath open(uint64_t index) const;

    // Empty-subtree hash at a level (0 = leaf).
    const Fq& zeroAtLevel(unsigned level) const { return zeros_[level]; }

  private:
    unsigned depth_;
    std::vector<Fq> zeros_;                 // depth_+1 entries
    std::vector<std::vector<Fq>> levels_;   // levels_[0] = leaves
};

bool verifyOpening(const Fq& root, uint64_t index, const Fq& commitment, const MerklePath& path);

// Sliding window of the most recent roots.
class RootHistory {
  public:
    explicit RootHistory(size_t capacity);

    void push(const Fq& root);
    bool contains(const Fq& root) const;
    const Fq& current() const;
    size_t capacity() const { return capacity_; }

  private:
    size_t capacity_;
    std::deque<Fq> roots_;
};

}  // namespace zkfi

#endif

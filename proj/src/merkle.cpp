#include "zkfi/merkle.hpp"

#include <algorithm>

#include "zkfi/errors.hpp"
#include "zkfi/poseidon.hpp"

namespace zkfi {

NoteTree::NoteTree(unsigned depth) : depth_(depth) {
    if (depth < 1 || depth > 32) fail(Errc::InvalidArgument, "tree depth out of range");
    zeros_.resize(depth + 1);
    zeros_[0] = poseidon({Fq::zero(), Fq::zero(), Fq::zero()});
    for (unsigned i = 1; i <= depth; ++i) zeros_[i] = poseidon({zeros_[i - 1], zeros_[i - 1]});
    levels_.resize(depth + 1);
}

uint64_t NoteTree::append(const Fq& commitment) {
    if (size() >= capacity()) fail(Errc::TreeFull, "note tree at capacity");
    uint64_t index = size();
    levels_[0].push_back(commitment);

    uint64_t nodeIndex = index;
    for (unsigned level = 0; level < depth_; ++level) {
        uint64_t parentIndex = nodeIndex >> 1;
        const auto& cur = levels_[level];
        uint64_t left = parentIndex << 1;
        const Fq& lhs = cur[left];
        const Fq& rhs = (left + 1 < cur.size()) ? cur[left + 1] : zeros_[level];
        Fq parent = poseidon({lhs, rhs});
        auto& up = levels_[level + 1];
        if (parentIndex < up.size()) up[parentIndex] = parent;
        else up.push_back(parent);
        nodeIndex = parentIndex;
    }
    return index;
}

Fq NoteTree::root() const {
    if (levels_[depth_].empty()) return zeros_[depth_];
    return levels_[depth_][0];
}

Fq NoteTree::leaf(uint64_t index) const {
    if (index >= size()) fail(Errc::IndexRange, "leaf index out of range");
    return levels_[0][index];
}

MerklePath NoteTree::open(uint64_t index) const {
    if (index >= size()) fail(Errc::IndexRange, "leaf index out of range");
    MerklePath path;
    path.siblings.reserve(depth_);
    uint64_t nodeIndex = index;
    for (unsigned level = 0; level < depth_; ++level) {
        uint64_t sibling = nodeIndex ^ 1;
        const auto& cur = levels_[level];
        path.siblings.push_back(sibling < cur.size() ? cur[sibling] : zeros_[level]);
        nodeIndex >>= 1;
    }
    return path;
}

bool verifyOpening(const Fq& root, uint64_t index, const Fq& commitment, const MerklePath& path) {
    if (path.siblings.size() > 63) return false;
    if (index >> path.siblings.size()) return false;
    Fq acc = commitment;
    for (size_t level = 0; level < path.siblings.size(); ++level) {
        const Fq& sibling = path.siblings[level];
        if ((index >> level) & 1) acc = poseidon({sibling, acc});
        else acc = poseidon({acc, sibling});
    }
    return acc == root;
}

RootHistory::RootHistory(size_t capacity) : capacity_(capacity) {
    if (capacity == 0) fail(Errc::InvalidArgument, "root history capacity must be positive");
}

void RootHistory::push(const Fq& root) {
    roots_.push_back(root);
    if (roots_.size() > capacity_) roots_.pop_front();
}

bool RootHistory::contains(const Fq& root) const {
    return std::find(roots_.begin(), roots_.end(), root) != roots_.end();
}

const Fq& RootHistory::current() const {
    if (roots_.empty()) fail(Errc::InvalidArgument, "root history empty");
    return roots_.back();
}

}  // namespace zkfi

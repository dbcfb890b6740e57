#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "semirings/op_table.hpp"

namespace semirings {

/// A partition of {0..n-1} in canonical form: block ids are contiguous
/// 0..block_count-1 and numbered in order of each block's least element.
class Partition {
public:
    static Partition identity(std::size_t order);
    static Partition full(std::size_t order);
    /// Canonicalizes arbitrary (consistent) block ids.
    static Partition from_block_ids(const std::vector<Elem>& raw_ids);
    static Partition from_blocks(std::size_t order,
                                 const std::vector<std::vector<Elem>>& blocks);

    std::size_t order() const { return block_id_.size(); }
    std::size_t block_count() const { return block_count_; }
    Elem block_of(Elem x) const { return block_id_[x]; }
    bool same_block(Elem a, Elem b) const { return block_id_[a] == block_id_[b]; }

    bool is_identity() const { return block_count_ == order(); }
    bool is_full() const { return block_count_ == 1; }

    /// Blocks as sorted element lists, ordered by least element.
    std::vector<std::vector<Elem>> blocks() const;

    /// True when every block of this partition lies inside a block of
    /// `coarser`.
    bool refines(const Partition& coarser) const;

    const std::vector<Elem>& block_ids() const { return block_id_; }

    bool operator==(const Partition&) const = default;
    /// Deterministic total order (lexicographic on block ids).
    std::strong_ordering operator<=>(const Partition& other) const {
        return block_id_ <=> other.block_id_;
    }

private:
    Partition(std::vector<Elem> ids, std::size_t blocks)
        : block_id_(std::move(ids)), block_count_(blocks) {}

    std::vector<Elem> block_id_;
    std::size_t block_count_ = 0;
};

}  // namespace semirings

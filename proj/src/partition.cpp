#include "semirings/partition.hpp"

#include <numeric>
#include <string>

#include "semirings/errors.hpp"

namespace semirings {

Partition Partition::identity(std::size_t order) {
    std::vector<Elem> ids(order);
    std::iota(ids.begin(), ids.end(), Elem{0});
    return Partition(std::move(ids), order);
}

Partition Partition::full(std::size_t order) {
    return Partition(std::vector<Elem>(order, 0), order ? 1 : 0);
}

Partition Partition::from_block_ids(const std::vector<Elem>& raw_ids) {
    const std::size_t n = raw_ids.size();
    std::vector<Elem> remap(n, static_cast<Elem>(n));
    std::vector<Elem> ids(n);
    Elem next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Elem raw = raw_ids[i];
        if (raw >= n) throw input_error("partition: block id out of range");
        if (remap[raw] == static_cast<Elem>(n)) remap[raw] = next++;
        ids[i] = remap[raw];
    }
    return Partition(std::move(ids), next);
}

Partition Partition::from_blocks(std::size_t order,
                                 const std::vector<std::vector<Elem>>& blocks) {
    std::vector<Elem> raw(order, static_cast<Elem>(order));
    Elem id = 0;
    for (const auto& block : blocks) {
        if (block.empty()) throw input_error("partition: empty block");
        for (Elem x : block) {
            if (x >= order) throw input_error("partition: element out of range");
            if (raw[x] != static_cast<Elem>(order))
                throw input_error("partition: element " + std::to_string(x) +
                                  " appears in two blocks");
            raw[x] = id;
        }
        ++id;
    }
    for (std::size_t x = 0; x < order; ++x)
        if (raw[x] == static_cast<Elem>(order))
            throw input_error("partition: element " + std::to_string(x) +
                              " missing from all blocks");
    return from_block_ids(raw);
}

std::vector<std::vector<Elem>> Partition::blocks() const {
    std::vector<std::vector<Elem>> out(block_count_);
    for (std::size_t x = 0; x < order(); ++x)
        out[block_id_[x]].push_back(static_cast<Elem>(x));
    return out;
}

bool Partition::refines(const Partition& coarser) const {
    if (order() != coarser.order()) return false;
    // Two elements sharing a block here must share one there.
    std::vector<Elem> image(block_count_, static_cast<Elem>(coarser.order()));
    for (std::size_t x = 0; x < order(); ++x) {
        Elem& img = image[block_id_[x]];
        const Elem target = coarser.block_id_[x];
        if (img == static_cast<Elem>(coarser.order())) img = target;
        else if (img != target) return false;
    }
    return true;
}

}  // namespace semirings

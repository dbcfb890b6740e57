#include "semirings/op_table.hpp"

#include <string>

#include "semirings/errors.hpp"

namespace semirings {

OpTable::OpTable(std::size_t order, std::vector<Elem> entries)
    : order_(order), entries_(std::move(entries)) {
    if (order_ < 1 || order_ > kMaxOrder) {
        throw input_error("operation table: order must be in [1, " +
                          std::to_string(kMaxOrder) + "], got " + std::to_string(order_));
    }
    if (entries_.size() != order_ * order_) {
        throw input_error("operation table: expected " + std::to_string(order_ * order_) +
                          " entries, got " + std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] >= order_) {
            throw input_error("operation table: entry at cell (" + std::to_string(i / order_) +
                              "," + std::to_string(i % order_) + ") is " +
                              std::to_string(entries_[i]) + ", not below order " +
                              std::to_string(order_));
        }
    }
}

OpTable OpTable::filled(std::size_t order, Elem value) {
    return OpTable(order, std::vector<Elem>(order * order, value));
}

std::optional<std::array<Elem, 2>> OpTable::commutativity_witness() const {
    const Elem n = static_cast<Elem>(order_);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = static_cast<Elem>(a + 1); b < n; ++b)
            if ((*this)(a, b) != (*this)(b, a)) return std::array<Elem, 2>{a, b};
    return std::nullopt;
}

std::optional<std::array<Elem, 3>> OpTable::associativity_witness() const {
    const Elem n = static_cast<Elem>(order_);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if ((*this)((*this)(a, b), c) != (*this)(a, (*this)(b, c)))
                    return std::array<Elem, 3>{a, b, c};
    return std::nullopt;
}

OpTable OpTable::transposed() const {
    std::vector<Elem> t(order_ * order_);
    for (std::size_t x = 0; x < order_; ++x)
        for (std::size_t y = 0; y < order_; ++y)
            t[y * order_ + x] = entries_[x * order_ + y];
    return OpTable(order_, std::move(t));
}

}  // namespace semirings

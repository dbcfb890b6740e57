#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace semirings {

/// Element index into a finite carrier set {0, ..., order-1}.
using Elem = std::uint16_t;

/// Largest supported carrier size; keeps every table in one flat block.
inline constexpr std::size_t kMaxOrder = 256;

/// One binary operation on {0..n-1}, stored as a row-major n*n table.
/// Immutable after construction.
class OpTable {
public:
    OpTable(std::size_t order, std::vector<Elem> entries);

    /// Table whose every entry is `value`.
    static OpTable filled(std::size_t order, Elem value);

    Elem operator()(Elem x, Elem y) const {
        return entries_[static_cast<std::size_t>(x) * order_ + y];
    }

    std::size_t order() const { return order_; }
    const std::vector<Elem>& entries() const { return entries_; }

    bool is_commutative() const { return !commutativity_witness().has_value(); }
    bool is_associative() const { return !associativity_witness().has_value(); }

    /// First (a,b) with a*b != b*a, scanning lexicographically.
    std::optional<std::array<Elem, 2>> commutativity_witness() const;
    /// First (a,b,c) with (a*b)*c != a*(b*c), scanning lexicographically.
    std::optional<std::array<Elem, 3>> associativity_witness() const;

    /// Same operation with the arguments swapped.
    OpTable transposed() const;

    bool operator==(const OpTable&) const = default;

private:
    std::size_t order_;
    std::vector<Elem> entries_;
};

}  // namespace semirings

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semirings/op_table.hpp"

namespace semirings {

inline constexpr std::size_t kSmallGroupsGuard = 8;

/// A finite group given by its multiplication table. Construction
/// checks associativity, a two-sided identity, and two-sided inverses.
class GroupTable {
public:
    GroupTable(std::string name, OpTable mul);

    const std::string& name() const { return name_; }
    std::size_t order() const { return mul_.order(); }
    const OpTable& mul_table() const { return mul_; }
    Elem mul(Elem x, Elem y) const { return mul_(x, y); }
    Elem identity() const { return identity_; }

private:
    std::string name_;
    OpTable mul_;
    Elem identity_ = 0;
};

GroupTable cyclic_group(std::size_t n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
/// Order 2m; m = 2 gives the Klein four-group.
GroupTable dihedral_group(std::size_t m);
GroupTable quaternion_group();

/// All groups of the given order up to isomorphism, by direct
/// construction. Guarded at order 8.
std::vector<GroupTable> small_groups(std::size_t order);

/// Lookup by CLI name: z1..z8, klein4, z2xz2, z4xz2, z2xz2xz2, s3, d3,
/// d4, q8.
std::optional<GroupTable> group_by_name(const std::string& name);
std::vector<std::string> group_names();

}  // namespace semirings

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "semirings/partition.hpp"
#include "semirings/semiring.hpp"

namespace semirings {

/// all_congruences refuses larger carriers; the join closure can blow up.
inline constexpr std::size_t kAllCongruencesGuard = 16;

struct SimplicityWitness {
    std::array<Elem, 2> pair;  // lexicographically first failing pair
    Partition congruence;      // its principal congruence, nontrivial
};

struct SimplicityReport {
    bool simple = false;
    std::optional<SimplicityWitness> witness;
};

/// True iff P is compatible with both operations under all left and
/// right translations. Both additive conditions are evaluated even
/// though addition is commutative.
bool is_congruence(const FiniteSemiring& s, const Partition& p);

/// Smallest congruence putting a and b in one block (union-find closure
/// over translate pairs; the result is re-verified with is_congruence).
Partition principal_congruence(const FiniteSemiring& s, Elem a, Elem b);

/// Smallest congruence coarser than both arguments.
Partition congruence_join(const FiniteSemiring& s, const Partition& p, const Partition& q);

/// Simple iff every pair's principal congruence is the full partition.
/// Honors the SEMIRING_THREADS environment variable for large carriers;
/// the reported witness pair is lexicographically first regardless.
SimplicityReport is_congruence_simple(const FiniteSemiring& s);

/// Every congruence, as the join closure of the principal congruences;
/// sorted, always containing the identity and full partitions.
std::vector<Partition> all_congruences(const FiniteSemiring& s);

/// Semigroup analogues: only the two multiplicative translate
/// conditions are closed over. The table must be associative.
bool is_semigroup_congruence(const OpTable& mul, const Partition& p);
Partition semigroup_principal_congruence(const OpTable& mul, Elem a, Elem b);
SimplicityReport is_congruence_free_semigroup(const OpTable& mul);

/// Smallest subset containing x and closed under adding or multiplying
/// by arbitrary elements on either side. Sorted.
std::vector<Elem> bi_ideal_closure(const FiniteSemiring& s, Elem x);

}  // namespace semirings

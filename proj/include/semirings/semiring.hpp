#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "semirings/op_table.hpp"

namespace semirings {

enum class Axiom {
    AddCommutative,
    AddAssociative,
    MulAssociative,
    LeftDistributive,
    RightDistributive,
};

const char* axiom_name(Axiom a);

struct AxiomViolation {
    Axiom axiom;
    /// Witness triple (a,b,c); c is unused (zero) for commutativity.
    std::array<Elem, 3> witness;

    bool operator==(const AxiomViolation&) const = default;
};

struct AxiomReport {
    bool valid = false;
    /// First witness per failed axiom, in Axiom declaration order.
    std::vector<AxiomViolation> violations;
};

/// Checks the semiring axioms on a pair of tables of equal order.
AxiomReport validate(const OpTable& add, const OpTable& mul);

/// A validated finite semiring: commutative-associative addition,
/// associative multiplication, two-sided distributivity. Construction
/// throws input_error when an axiom fails.
class FiniteSemiring {
public:
    FiniteSemiring(OpTable add, OpTable mul);
    FiniteSemiring(OpTable add, OpTable mul, std::vector<std::string> labels);

    std::size_t order() const { return add_.order(); }
    const OpTable& add_table() const { return add_; }
    const OpTable& mul_table() const { return mul_; }

    Elem add(Elem x, Elem y) const { return add_(x, y); }
    Elem mul(Elem x, Elem y) const { return mul_(x, y); }

    /// Display labels; defaults to "e0".."e{n-1}".
    const std::vector<std::string>& labels() const { return labels_; }
    bool has_custom_labels() const { return custom_labels_; }

    /// Structural equality on the tables; labels are cosmetic.
    bool operator==(const FiniteSemiring& other) const {
        return add_ == other.add_ && mul_ == other.mul_;
    }

private:
    OpTable add_;
    OpTable mul_;
    std::vector<std::string> labels_;
    bool custom_labels_ = false;
};

/// Distinguished elements, each present only when an element with the
/// stated property exists (uniqueness is checked during detection).
struct SpecialElements {
    std::optional<Elem> additive_identity;
    std::optional<Elem> zero;                      // mult. absorbing additive identity
    std::optional<Elem> additively_absorbing;
    std::optional<Elem> multiplicatively_absorbing;
    std::optional<Elem> infinity;                  // absorbing for both operations
};

SpecialElements special_elements(const FiniteSemiring& s);

struct Properties {
    bool additively_idempotent = false;
    /// Empty when no additive identity exists (the notion does not apply).
    std::optional<bool> zero_sum_free;
    bool zero_multiplication = false;
    bool is_ring = false;          // (S,+) is an abelian group
    bool trivial_addition = false; // infinity exists and every sum is it
};

Properties properties(const FiniteSemiring& s);

/// Same addition, multiplication arguments swapped.
FiniteSemiring opposite(const FiniteSemiring& s);

/// Sum of a nonempty subset of elements; well-defined by commutativity
/// and associativity of the addition.
Elem sigma(const FiniteSemiring& s, const std::vector<Elem>& subset);

}  // namespace semirings

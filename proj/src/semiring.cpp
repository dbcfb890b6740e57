#include "semirings/semiring.hpp"

#include <algorithm>
#include <string>

#include "semirings/errors.hpp"

namespace semirings {

const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::AddCommutative: return "add_commutative";
        case Axiom::AddAssociative: return "add_associative";
        case Axiom::MulAssociative: return "mul_associative";
        case Axiom::LeftDistributive: return "left_distributive";
        case Axiom::RightDistributive: return "right_distributive";
    }
    return "?";
}

AxiomReport validate(const OpTable& add, const OpTable& mul) {
    if (add.order() != mul.order()) {
        throw input_error("validate: addition has order " + std::to_string(add.order()) +
                          " but multiplication has order " + std::to_string(mul.order()));
    }
    const Elem n = static_cast<Elem>(add.order());
    AxiomReport report;

    if (auto w = add.commutativity_witness())
        report.violations.push_back({Axiom::AddCommutative, {(*w)[0], (*w)[1], 0}});
    if (auto w = add.associativity_witness())
        report.violations.push_back({Axiom::AddAssociative, *w});
    if (auto w = mul.associativity_witness())
        report.violations.push_back({Axiom::MulAssociative, *w});

    auto first_distributivity_witness = [&](bool left) -> std::optional<std::array<Elem, 3>> {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c) {
                    const Elem lhs = left ? mul(a, add(b, c)) : mul(add(a, b), c);
                    const Elem rhs = left ? add(mul(a, b), mul(a, c))
                                          : add(mul(a, c), mul(b, c));
                    if (lhs != rhs) return std::array<Elem, 3>{a, b, c};
                }
        return std::nullopt;
    };
    if (auto w = first_distributivity_witness(true))
        report.violations.push_back({Axiom::LeftDistributive, *w});
    if (auto w = first_distributivity_witness(false))
        report.violations.push_back({Axiom::RightDistributive, *w});

    report.valid = report.violations.empty();
    return report;
}

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
    return out;
}

void check_axioms_or_throw(const OpTable& add, const OpTable& mul) {
    const AxiomReport report = validate(add, mul);
    if (report.valid) return;
    const AxiomViolation& v = report.violations.front();
    throw input_error(std::string("semiring axioms violated: ") + axiom_name(v.axiom) +
                      " fails at (" + std::to_string(v.witness[0]) + "," +
                      std::to_string(v.witness[1]) + "," + std::to_string(v.witness[2]) + ")");
}

}  // namespace

FiniteSemiring::FiniteSemiring(OpTable add, OpTable mul)
    : add_(std::move(add)), mul_(std::move(mul)), labels_(default_labels(add_.order())) {
    check_axioms_or_throw(add_, mul_);
}

FiniteSemiring::FiniteSemiring(OpTable add, OpTable mul, std::vector<std::string> labels)
    : add_(std::move(add)),
      mul_(std::move(mul)),
      labels_(std::move(labels)),
      custom_labels_(true) {
    check_axioms_or_throw(add_, mul_);
    if (labels_.size() != order()) {
        throw input_error("semiring labels: expected " + std::to_string(order()) +
                          " labels, got " + std::to_string(labels_.size()));
    }
}

namespace {

/// Unique element with the given elementwise property, if any. Two hits
/// would contradict the algebra; detection still checks.
template <typename Pred>
std::optional<Elem> unique_element(std::size_t order, Pred pred, const char* what) {
    std::optional<Elem> found;
    for (Elem x = 0; x < static_cast<Elem>(order); ++x) {
        if (!pred(x)) continue;
        if (found) throw std::logic_error(std::string("two distinct ") + what + " elements");
        found = x;
    }
    return found;
}

}  // namespace

SpecialElements special_elements(const FiniteSemiring& s) {
    const Elem n = static_cast<Elem>(s.order());
    SpecialElements out;

    out.additive_identity = unique_element(
        n,
        [&](Elem o) {
            for (Elem x = 0; x < n; ++x)
                if (s.add(o, x) != x || s.add(x, o) != x) return false;
            return true;
        },
        "additive-identity");

    out.additively_absorbing = unique_element(
        n,
        [&](Elem a) {
            for (Elem x = 0; x < n; ++x)
                if (s.add(a, x) != a || s.add(x, a) != a) return false;
            return true;
        },
        "additively-absorbing");

    out.multiplicatively_absorbing = unique_element(
        n,
        [&](Elem a) {
            for (Elem x = 0; x < n; ++x)
                if (s.mul(a, x) != a || s.mul(x, a) != a) return false;
            return true;
        },
        "multiplicatively-absorbing");

    if (out.additive_identity && out.multiplicatively_absorbing &&
        *out.additive_identity == *out.multiplicatively_absorbing) {
        out.zero = out.additive_identity;
    }
    if (out.additively_absorbing && out.multiplicatively_absorbing &&
        *out.additively_absorbing == *out.multiplicatively_absorbing) {
        out.infinity = out.additively_absorbing;
    }
    return out;
}

Properties properties(const FiniteSemiring& s) {
    const Elem n = static_cast<Elem>(s.order());
    const SpecialElements sp = special_elements(s);
    Properties p;

    p.additively_idempotent = true;
    for (Elem x = 0; x < n; ++x)
        if (s.add(x, x) != x) { p.additively_idempotent = false; break; }

    if (sp.additive_identity) {
        const Elem o = *sp.additive_identity;
        bool zsf = true;
        for (Elem a = 0; a < n && zsf; ++a)
            for (Elem b = 0; b < n; ++b)
                if (s.add(a, b) == o && (a != o || b != o)) { zsf = false; break; }
        p.zero_sum_free = zsf;
    }

    if (sp.zero) {
        const Elem z = *sp.zero;
        p.zero_multiplication = true;
        for (Elem x = 0; x < n && p.zero_multiplication; ++x)
            for (Elem y = 0; y < n; ++y)
                if (s.mul(x, y) != z) { p.zero_multiplication = false; break; }
    }

    if (sp.additive_identity) {
        const Elem o = *sp.additive_identity;
        p.is_ring = true;
        for (Elem x = 0; x < n && p.is_ring; ++x) {
            bool has_inverse = false;
            for (Elem y = 0; y < n; ++y)
                if (s.add(x, y) == o) { has_inverse = true; break; }
            p.is_ring = has_inverse;
        }
    }

    if (sp.infinity) {
        const Elem inf = *sp.infinity;
        p.trivial_addition = true;
        for (Elem x = 0; x < n && p.trivial_addition; ++x)
            for (Elem y = 0; y < n; ++y)
                if (s.add(x, y) != inf) { p.trivial_addition = false; break; }
    }

    return p;
}

FiniteSemiring opposite(const FiniteSemiring& s) {
    if (s.has_custom_labels())
        return FiniteSemiring(s.add_table(), s.mul_table().transposed(), s.labels());
    return FiniteSemiring(s.add_table(), s.mul_table().transposed());
}

Elem sigma(const FiniteSemiring& s, const std::vector<Elem>& subset) {
    if (subset.empty()) throw input_error("sigma: subset must be nonempty");
    for (Elem x : subset)
        if (x >= s.order())
            throw input_error("sigma: element " + std::to_string(x) + " not below order " +
                              std::to_string(s.order()));
    Elem acc = subset.front();
    for (std::size_t i = 1; i < subset.size(); ++i) acc = s.add(acc, subset[i]);
    return acc;
}

}  // namespace semirings

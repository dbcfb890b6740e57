#include "semirings/congruence.hpp"

#include <atomic>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "semirings/errors.hpp"

namespace semirings {

namespace {

struct DisjointSets {
    std::vector<Elem> parent;

    explicit DisjointSets(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<Elem>(i);
    }

    Elem find(Elem x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];  // path halving
            x = parent[x];
        }
        return x;
    }

    /// Merges the classes of a and b; returns the two old roots when a
    /// merge actually happened.
    std::optional<std::pair<Elem, Elem>> unite(Elem a, Elem b) {
        a = find(a);
        b = find(b);
        if (a == b) return std::nullopt;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return std::pair{a, b};
    }

    Partition to_partition() {
        std::vector<Elem> ids(parent.size());
        for (std::size_t i = 0; i < parent.size(); ++i) ids[i] = find(static_cast<Elem>(i));
        return Partition::from_block_ids(ids);
    }
};

/// Union-find closure over translate pairs: each merged pair (x,y) is
/// reprocessed against every element c of the carrier, uniting
/// op(c,x)/op(c,y) and op(x,c)/op(y,c) for each listed operation. Every
/// pair in one final class is connected by a chain of processed merges,
/// so transitivity extends the enforced translate relations to all of
/// them.
Partition translate_closure(std::size_t order,
                            const std::vector<std::pair<Elem, Elem>>& seeds,
                            const std::vector<const OpTable*>& ops) {
    DisjointSets ds(order);
    std::vector<std::pair<Elem, Elem>> work;
    for (const auto& [a, b] : seeds)
        if (auto merged = ds.unite(a, b)) work.push_back(*merged);

    const Elem n = static_cast<Elem>(order);
    while (!work.empty()) {
        const auto [x, y] = work.back();
        work.pop_back();
        for (Elem c = 0; c < n; ++c) {
            for (const OpTable* op : ops) {
                if (auto m = ds.unite((*op)(c, x), (*op)(c, y))) work.push_back(*m);
                if (auto m = ds.unite((*op)(x, c), (*op)(y, c))) work.push_back(*m);
            }
        }
    }
    return ds.to_partition();
}

std::vector<std::pair<Elem, Elem>> partition_seed_pairs(const Partition& p) {
    std::vector<std::pair<Elem, Elem>> seeds;
    for (const auto& block : p.blocks())
        for (std::size_t i = 1; i < block.size(); ++i) seeds.emplace_back(block[0], block[i]);
    return seeds;
}

std::vector<const OpTable*> semiring_ops(const FiniteSemiring& s) {
    return {&s.add_table(), &s.mul_table()};
}

unsigned worker_count() {
    if (const char* env = std::getenv("SEMIRING_THREADS")) {
        const long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

/// Scans pairs (a,b), a < b, in lexicographic order; simple iff every
/// principal congruence is full. Parallel workers claim pairs in order
/// and only shrink an atomic "first failure" index, so the reported
/// witness is the same as in a sequential scan.
SimplicityReport simplicity_scan(std::size_t order,
                                 const std::vector<const OpTable*>& ops) {
    const Elem n = static_cast<Elem>(order);
    std::vector<std::pair<Elem, Elem>> pairs;
    pairs.reserve(order * (order - 1) / 2);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = static_cast<Elem>(a + 1); b < n; ++b) pairs.emplace_back(a, b);

    const unsigned workers =
        order >= 64 ? std::min<unsigned>(worker_count(), std::thread::hardware_concurrency())
                    : 1;

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_failure{pairs.size()};
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= pairs.size() || i >= first_failure.load()) return;
            const auto [a, b] = pairs[i];
            if (translate_closure(order, {{a, b}}, ops).is_full()) continue;
            std::size_t seen = first_failure.load();
            while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {}
        }
    };

    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }

    const std::size_t fail = first_failure.load();
    if (fail == pairs.size()) return {true, std::nullopt};
    const auto [a, b] = pairs[fail];
    Partition witness = translate_closure(order, {{a, b}}, ops);
    return {false, SimplicityWitness{{a, b}, std::move(witness)}};
}

}  // namespace

bool is_congruence(const FiniteSemiring& s, const Partition& p) {
    if (p.order() != s.order())
        throw input_error("is_congruence: partition order " + std::to_string(p.order()) +
                          " does not match semiring order " + std::to_string(s.order()));
    const Elem n = static_cast<Elem>(s.order());
    for (Elem x1 = 0; x1 < n; ++x1)
        for (Elem x2 = static_cast<Elem>(x1 + 1); x2 < n; ++x2) {
            if (!p.same_block(x1, x2)) continue;
            for (Elem c = 0; c < n; ++c) {
                if (!p.same_block(s.add(c, x1), s.add(c, x2))) return false;
                if (!p.same_block(s.add(x1, c), s.add(x2, c))) return false;
                if (!p.same_block(s.mul(c, x1), s.mul(c, x2))) return false;
                if (!p.same_block(s.mul(x1, c), s.mul(x2, c))) return false;
            }
        }
    return true;
}

Partition principal_congruence(const FiniteSemiring& s, Elem a, Elem b) {
    if (a >= s.order() || b >= s.order())
        throw input_error("principal_congruence: element out of range");
    Partition p = translate_closure(s.order(), {{a, b}}, semiring_ops(s));
    if (!is_congruence(s, p))
        throw std::logic_error("principal_congruence: closure failed verification");
    return p;
}

Partition congruence_join(const FiniteSemiring& s, const Partition& p, const Partition& q) {
    if (p.order() != s.order() || q.order() != s.order())
        throw input_error("congruence_join: partition order mismatch");
    auto seeds = partition_seed_pairs(p);
    const auto more = partition_seed_pairs(q);
    seeds.insert(seeds.end(), more.begin(), more.end());
    Partition joined = translate_closure(s.order(), seeds, semiring_ops(s));
    if (!is_congruence(s, joined))
        throw std::logic_error("congruence_join: closure failed verification");
    return joined;
}

SimplicityReport is_congruence_simple(const FiniteSemiring& s) {
    SimplicityReport report = simplicity_scan(s.order(), semiring_ops(s));
    if (report.witness &&
        (!is_congruence(s, report.witness->congruence) ||
         report.witness->congruence.is_identity() || report.witness->congruence.is_full()))
        throw std::logic_error("is_congruence_simple: unsound witness");
    return report;
}

std::vector<Partition> all_congruences(const FiniteSemiring& s) {
    const std::size_t n = s.order();
    if (n > kAllCongruencesGuard)
        throw capacity_error("all_congruences: order " + std::to_string(n) + " exceeds guard " +
                             std::to_string(kAllCongruencesGuard));

    std::set<Partition> found;
    found.insert(Partition::identity(n));
    for (Elem a = 0; a < static_cast<Elem>(n); ++a)
        for (Elem b = static_cast<Elem>(a + 1); b < static_cast<Elem>(n); ++b)
            found.insert(principal_congruence(s, a, b));

    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<Partition> snapshot(found.begin(), found.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                Partition joined = congruence_join(s, snapshot[i], snapshot[j]);
                if (found.insert(std::move(joined)).second) grew = true;
            }
    }
    return {found.begin(), found.end()};
}

namespace {

void require_associative(const OpTable& mul, const char* who) {
    if (auto w = mul.associativity_witness())
        throw input_error(std::string(who) + ": table is not associative, witness (" +
                          std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
                          std::to_string((*w)[2]) + ")");
}

}  // namespace

bool is_semigroup_congruence(const OpTable& mul, const Partition& p) {
    if (p.order() != mul.order())
        throw input_error("is_semigroup_congruence: partition order mismatch");
    const Elem n = static_cast<Elem>(mul.order());
    for (Elem x1 = 0; x1 < n; ++x1)
        for (Elem x2 = static_cast<Elem>(x1 + 1); x2 < n; ++x2) {
            if (!p.same_block(x1, x2)) continue;
            for (Elem c = 0; c < n; ++c) {
                if (!p.same_block(mul(c, x1), mul(c, x2))) return false;
                if (!p.same_block(mul(x1, c), mul(x2, c))) return false;
            }
        }
    return true;
}

Partition semigroup_principal_congruence(const OpTable& mul, Elem a, Elem b) {
    require_associative(mul, "semigroup_principal_congruence");
    if (a >= mul.order() || b >= mul.order())
        throw input_error("semigroup_principal_congruence: element out of range");
    Partition p = translate_closure(mul.order(), {{a, b}}, {&mul});
    if (!is_semigroup_congruence(mul, p))
        throw std::logic_error("semigroup_principal_congruence: closure failed verification");
    return p;
}

SimplicityReport is_congruence_free_semigroup(const OpTable& mul) {
    require_associative(mul, "is_congruence_free_semigroup");
    SimplicityReport report = simplicity_scan(mul.order(), {&mul});
    if (report.witness &&
        (!is_semigroup_congruence(mul, report.witness->congruence) ||
         report.witness->congruence.is_identity() || report.witness->congruence.is_full()))
        throw std::logic_error("is_congruence_free_semigroup: unsound witness");
    return report;
}

std::vector<Elem> bi_ideal_closure(const FiniteSemiring& s, Elem x) {
    if (x >= s.order()) throw input_error("bi_ideal_closure: element out of range");
    const Elem n = static_cast<Elem>(s.order());
    std::vector<bool> in(n, false);
    std::vector<Elem> work{x};
    in[x] = true;
    while (!work.empty()) {
        const Elem b = work.back();
        work.pop_back();
        for (Elem c = 0; c < n; ++c) {
            for (Elem y : {s.add(b, c), s.add(c, b), s.mul(b, c), s.mul(c, b)}) {
                if (!in[y]) {
                    in[y] = true;
                    work.push_back(y);
                }
            }
        }
    }
    std::vector<Elem> out;
    for (Elem i = 0; i < n; ++i)
        if (in[i]) out.push_back(i);
    return out;
}

}  // namespace semirings

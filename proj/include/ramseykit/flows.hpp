#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramseykit/expansions.hpp"
#include "ramseykit/verdict.hpp"

namespace ramseykit {

using Permutation = std::vector<int>; // image array

Permutation identity_permutation(int degree);
Permutation compose(const Permutation& g, const Permutation& h); // g after h
Permutation inverse(const Permutation& g);

inline constexpr std::uint64_t kDefaultElementCap = 1'000'000;
inline constexpr std::uint64_t kDefaultSubgroupOrderCap = 1'000;
inline constexpr std::uint64_t kDefaultPointCap = 10'000;

// Finite permutation group given by generators. Elements are materialized
// lazily by breadth-first closure under a hard cap and then kept sorted
// lexicographically; copies share the materialization.
class PermGroup {
public:
    static PermGroup from_generators(int degree, std::vector<Permutation> generators,
                                     std::uint64_t element_cap = kDefaultElementCap);
    // Fixture registry: c2..c8 (cyclic), s3, d4, a4, t1 (trivial).
    static PermGroup named(const std::string& name);
    static const std::vector<std::string>& fixture_names();

    int degree() const;
    const std::vector<Permutation>& generators() const;
    std::uint64_t element_cap() const;

    // Materialized, lexicographically sorted element list. Throws
    // CapExceededError when the closure exceeds the element cap.
    const std::vector<Permutation>& elements() const;
    std::size_t order() const { return elements().size(); }
    int identity_index() const;
    int element_index(const Permutation& p) const; // -1 when absent
    int compose_index(int g, int h) const;
    int inverse_index(int g) const;

    bool same_group(const PermGroup& other) const;

private:
    struct Data;
    std::shared_ptr<Data> data_;
};

// Finite group action on a finite point set. Points may carry labels (and,
// for ordering spaces, the orderings themselves) so certificates are
// readable. Per-element action tables are materialized together with the
// group's elements.
class FiniteFlow {
public:
    static FiniteFlow from_generator_actions(PermGroup group,
                                             std::vector<std::vector<int>> generator_actions,
                                             std::vector<std::string> point_labels = {});

    // S_n (adjacent transpositions) acting on all n! orderings by
    // a (s.o) b <=> s^-1(a) o s^-1(b).
    static FiniteFlow lo_flow(int n, std::uint64_t point_cap = kDefaultPointCap,
                              std::uint64_t element_cap = kDefaultElementCap);
    static FiniteFlow regular(const PermGroup& G);
    // Left-multiplication action on the left cosets of the subgroup generated
    // by the given element indices.
    static FiniteFlow coset(const PermGroup& G, const std::vector<int>& subgroup_elements);
    static FiniteFlow one_point(const PermGroup& G);
    static FiniteFlow disjoint_union(const FiniteFlow& a, const FiniteFlow& b);

    const PermGroup& group() const;
    int point_count() const;
    const std::vector<std::string>& point_labels() const;
    const std::vector<LinearOrdering>& ordering_payloads() const; // empty unless lo flow

    int act_generator(int gen, int point) const;
    // Element-indexed action (indices follow group().elements() order).
    const std::vector<std::vector<int>>& element_actions() const;

private:
    struct Data;
    std::shared_ptr<Data> data_;
};

// --- flow operations ---------------------------------------------------------

// Orbit partition; orbits sorted by least point, points ascending.
std::vector<std::vector<int>> orbits(const FiniteFlow& flow);

// Points fixed by every listed generator (equivalently by the generated
// subgroup). Generators must be elements of the flow's group.
std::vector<int> fix_set(const FiniteFlow& flow, const std::vector<Permutation>& subgroup_gens);

// Elements fixing the point, in element order.
std::vector<Permutation> stabilizer(const FiniteFlow& flow, int point);

bool is_minimal(const FiniteFlow& flow);

// True iff every y in Y has full orbit (vacuously true for empty Y).
bool transitive_wrt(const FiniteFlow& flow, const std::vector<int>& Y);

// Equivariant surjection X -> Y (same group), first found under canonical
// point order, or nullopt.
std::optional<std::vector<int>> is_factor(const FiniteFlow& X, const FiniteFlow& Y);

struct SubgroupInfo {
    std::vector<int> element_indices;  // sorted
    std::vector<Permutation> elements; // materialized permutations
};

// All subgroups of G up to conjugacy (lex-least element set per class).
// Throws CapExceededError when |G| exceeds the order cap.
std::vector<SubgroupInfo> subgroups_up_to_conjugacy(const PermGroup& G,
                                                    std::uint64_t order_cap = kDefaultSubgroupOrderCap);

struct UniversalityResult {
    Verdict verdict = Verdict::True; // True | False | Inconclusive
    std::optional<SubgroupInfo> failing_subgroup;
    int subgroup_classes_checked = 0;
};

// Finite universality: every transitive G-flow (coset flow, one per subgroup
// conjugacy class) is a factor of X.
UniversalityResult is_universal_finite(const FiniteFlow& X,
                                       std::uint64_t subgroup_order_cap = kDefaultSubgroupOrderCap);

struct RelEaResult {
    Verdict verdict = Verdict::False;
    bool regular_criterion = false; // fixed point in the regular flow
    bool coset_criterion = false;   // fixed point in every transitive flow
    std::optional<Permutation> fixed_point; // regular-flow fixed point (a group element)
    std::optional<SubgroupInfo> failing_flow_subgroup;
    int flows_checked = 0;
};

// Finite analog of the fixed-point characterization: whether <H> fixes a
// point of the regular flow (the universal minimal flow of a finite discrete
// group), cross-checked against the definition on every coset flow. The two
// computations disagreeing raises AuditMismatchError (always a bug).
RelEaResult rel_ea_finite(const PermGroup& G, const std::vector<Permutation>& h_gens,
                          std::uint64_t subgroup_order_cap = kDefaultSubgroupOrderCap);

struct MinimalityAuditResult {
    Verdict verdict = Verdict::Pass;
    Verdict universality = Verdict::True;
    bool minimal = false;
    bool fix_transitive = false;
    int stabilizer_order = 0;
    int fix_size = 0;
};

// Checks the biconditional: flow minimal <=> Fix(Stab(x)) transitive w.r.t.
// the flow.
MinimalityAuditResult audit_minimality_equivalence(const FiniteFlow& flow, int point,
                                                   std::uint64_t subgroup_order_cap = kDefaultSubgroupOrderCap);

struct MaximalFixResult {
    Verdict verdict = Verdict::Maximal; // Maximal | Extendable
    std::optional<Permutation> extension_element;
    int fix_size = 0;
};

// Searches g outside <H> with Fix(<H> + g) nonempty; requires Fix(<H>)
// nonempty.
MaximalFixResult maximal_fixing_extension(const FiniteFlow& flow,
                                          const std::vector<Permutation>& h_gens);

} // namespace ramseykit

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramseykit/classes.hpp"
#include "ramseykit/expansions.hpp"
#include "ramseykit/verdict.hpp"

namespace ramseykit {

inline constexpr std::uint64_t kDefaultColoringBudget = 1ull << 24;

// Convention notes attached to every relative-Ramsey report: the defining
// text leaves "C" vs "C0" and "B0" ambiguous; both are resolved explicitly.
const std::vector<std::string>& relative_ramsey_convention_notes();

// --- Ramsey property ---------------------------------------------------------

struct RamseyVerifyResult {
    Verdict verdict = Verdict::True; // True | False | Inconclusive
    std::vector<std::vector<int>> a_copies;
    std::optional<std::vector<int>> counterexample_colors; // per a-copy
    std::uint64_t colorings_checked = 0;
    std::uint64_t budget = kDefaultColoringBudget;
};

// Every k-coloring of the A-copies in C admits a copy of B whose A-copies are
// monochromatic. Colorings are scanned in canonical (restricted-growth)
// order, which quotients by color permutations without changing the verdict.
RamseyVerifyResult verify_ramsey_witness(const ClassSpec& K, const Structure& A,
                                         const Structure& B, int k, const Structure& C,
                                         std::uint64_t budget = kDefaultColoringBudget,
                                         int parallelism = 1);

// Certificate replay: true iff the pinned coloring admits NO monochromatic
// B-copy (i.e. it really refutes C).
bool ramsey_coloring_refutes(const ClassSpec& K, const Structure& A, const Structure& B,
                             const Structure& C, const std::vector<int>& colors);

struct RamseyRefutation {
    Structure c;
    std::vector<std::vector<int>> a_copies;
    std::vector<int> colors;
};

struct RamseySearchResult {
    Verdict verdict = Verdict::NotFound; // Found | NotFound | Inconclusive
    std::optional<Structure> witness;
    std::vector<RamseyRefutation> refutations; // all smaller candidates, refuted
    std::uint64_t colorings_checked = 0;
};

// Canonically-first member C with |C| <= max_size passing the verification.
RamseySearchResult find_ramsey_witness(const ClassSpec& K, const Structure& A, const Structure& B,
                                       int k, int max_size,
                                       std::uint64_t budget = kDefaultColoringBudget,
                                       int parallelism = 1);

// --- ordering property ---------------------------------------------------------

struct OrderingVerifyResult {
    Verdict verdict = Verdict::True;
    std::optional<std::pair<LinearOrdering, LinearOrdering>> counterexample;
    int pairs_checked = 0;
};

// Every admissible ordering of A0 embeds into every admissible ordering of B0.
OrderingVerifyResult verify_ordering_witness(const ClassSpec& K0, const ClassSpec& K,
                                             const Structure& A0, const Structure& B0);

struct OrderingSearchResult {
    Verdict verdict = Verdict::NotFound;
    std::optional<Structure> witness;
    int candidates_checked = 0;
};

OrderingSearchResult find_ordering_witness(const ClassSpec& K0, const ClassSpec& K,
                                           const Structure& A0, int max_size);

// --- relative Ramsey property ----------------------------------------------------

struct RelativeRamseyResult {
    Verdict verdict = Verdict::True;
    std::vector<std::vector<int>> a0_copies_in_c0;
    std::optional<std::vector<int>> counterexample_colors;
    std::uint64_t colorings_checked = 0;
    std::uint64_t budget = kDefaultColoringBudget;
    std::vector<std::string> convention_notes;
};

// For every coloring of the A0-copies in C0 there is an embedding of B|L0
// into C0 under which any two A0-copies supporting isomorphic expanded
// structures in B land on equal colors.
RelativeRamseyResult verify_relative_ramsey_witness(const ClassSpec& K0, const ClassSpec& K,
                                                    const Structure& A0, const Structure& B, int k,
                                                    const Structure& C0,
                                                    std::uint64_t budget = kDefaultColoringBudget,
                                                    int parallelism = 1);

// Certificate replay for a relative-Ramsey counterexample coloring.
bool relative_ramsey_coloring_refutes(const ClassSpec& K0, const ClassSpec& K, const Structure& A0,
                                      const Structure& B, const Structure& C0,
                                      const std::vector<int>& colors);

// --- weak ordering property --------------------------------------------------------

struct WeakOrderingResult {
    Verdict verdict = Verdict::True; // True | False | VacuousTrue
    std::optional<std::pair<LinearOrdering, LinearOrdering>> counterexample;
    Verdict limit_status = Verdict::Closed;
    int fixed_count = 0;
    int pairs_checked = 0;
};

// For every admissible ordering of A0 and every fixed ordering of the carrier
// approximation, <A0,o> embeds into the designated copy B0 under the
// restricted fixed ordering. Vacuously true (reported as such) when the fixed
// set is empty.
WeakOrderingResult verify_weak_ordering_witness(const ClassSpec& K0, const ClassSpec& K,
                                                const Structure& A0,
                                                const std::vector<int>& b0_subset, int level,
                                                int cap, int parallelism = 1);
// Variant over a precomputed fixed-orderings approximation.
WeakOrderingResult verify_weak_ordering_witness(const ClassSpec& K, const Structure& A0,
                                                const std::vector<int>& b0_subset,
                                                const FixedOrderingsResult& fixed);

// --- orbit-closure realization -----------------------------------------------------

struct RealizesResult {
    Verdict verdict = Verdict::True;
    std::optional<Structure> missing;
    int structures_checked = 0;
};

// Every member A of K with |A| <= m is realized as <C0, o|C0> for some
// induced substructure C0 of F0.
RealizesResult realizes_all(const ClassSpec& K, const Structure& F0, const LinearOrdering& o,
                            int m);

// --- implication audit ----------------------------------------------------------------

struct WopAuditEntry {
    Structure a0;
    bool wop_witness_some = false;  // some placed copy works (substantive TRUE)
    bool wop_witness_every = false; // some iso class of copies works at every placement
    bool vacuous = false;           // fixed set empty; never gates the audit
    std::optional<std::vector<int>> wop_copy; // first working placement
    std::optional<Structure> op_witness;
    Verdict status = Verdict::Pass; // Pass | Fail | Inconclusive per a0
};

struct WopAuditResult {
    Verdict verdict = Verdict::Pass;
    std::vector<WopAuditEntry> entries;
    Verdict limit_status = Verdict::Closed;
    int carrier_size = 0;
};

// For every A0 with a substantive weak-ordering witness among the carrier's
// copies, an ordering-property witness must exist within the budget.
WopAuditResult audit_wop_implies_op(const ClassSpec& K0, const ClassSpec& K, int n, int level,
                                    int witness_max, int cap, int parallelism = 1);

} // namespace ramseykit

#pragma once

#include <string>
#include <vector>

#include "ramseykit/classes.hpp"
#include "ramseykit/structures.hpp"

namespace ramseykit {

// Strict total order on 0..n-1, stored as the points from least to greatest.
class LinearOrdering {
public:
    explicit LinearOrdering(std::vector<int> ascending);

    static LinearOrdering usual(int n);
    // All n! orderings in lexicographic order of their ascending arrays.
    static std::vector<LinearOrdering> all(int n);

    int size() const { return static_cast<int>(asc_.size()); }
    bool less(int a, int b) const {
        return rank_.at(static_cast<std::size_t>(a)) < rank_.at(static_cast<std::size_t>(b));
    }
    const std::vector<int>& ascending() const { return asc_; }

    LinearOrdering reversed() const;
    // Induced ordering on the subset, renumbered by increasing original index.
    LinearOrdering restricted_to(const std::vector<int>& subset) const;

    bool operator==(const LinearOrdering& o) const { return asc_ == o.asc_; }
    bool operator<(const LinearOrdering& o) const { return asc_ < o.asc_; }

private:
    std::vector<int> asc_;
    std::vector<int> rank_;
};

LinearOrdering reversal(const LinearOrdering& o);

struct OrderingSet {
    int size = 0;
    std::string role; // admissible | locally_invariant | fixed_approx
    std::vector<LinearOrdering> orderings; // sorted, duplicate-free

    bool contains(const LinearOrdering& o) const;
};

// The expanded structure <A0, o> in K's (order) signature.
Structure expand_with_order(const ClassSpec& K, const Structure& A0, const LinearOrdering& o);

// The order-free reduct of an expanded structure.
Structure reduct(const Structure& A);

// Exactly the orderings making A0 a member of the order expansion K.
// Requires A0 to be a member of K's base class.
OrderingSet admissible_orderings(const ClassSpec& K, const Structure& A0);

// Orderings preserved by every partial automorphism of D0 (isomorphism
// between induced substructures) where defined. Computed via the two-point
// reduction: a violation of any partial automorphism restricts to a violation
// of one with a two-point domain, so quantifying over those suffices.
OrderingSet locally_invariant_orderings(const Structure& D0, int parallelism = 1);

// Finite surrogate for the fixed orderings of the expansion group on the
// admissible-ordering space: admissible orderings of the level-l carrier
// reduct preserved by every partial automorphism of the expanded carrier.
struct FixedOrderingsResult {
    LimitBuildResult limit;
    Structure reduct_carrier;
    OrderingSet orderings;
};

FixedOrderingsResult fixed_orderings_approx(const ClassSpec& K0, const ClassSpec& K, int level,
                                            int cap, int parallelism = 1);

} // namespace ramseykit

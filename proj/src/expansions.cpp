#include "ramseykit/expansions.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "detail/parallel.hpp"

namespace ramseykit {

// --- LinearOrdering ----------------------------------------------------------

LinearOrdering::LinearOrdering(std::vector<int> ascending) : asc_(std::move(ascending)) {
    const int n = static_cast<int>(asc_.size());
    rank_.assign(static_cast<std::size_t>(n), -1);
    for (int pos = 0; pos < n; ++pos) {
        const int v = asc_[static_cast<std::size_t>(pos)];
        if (v < 0 || v >= n || rank_[static_cast<std::size_t>(v)] != -1)
            throw Error("linear ordering: not a permutation of 0..n-1");
        rank_[static_cast<std::size_t>(v)] = pos;
    }
}

LinearOrdering LinearOrdering::usual(int n) {
    std::vector<int> asc(static_cast<std::size_t>(n));
    std::iota(asc.begin(), asc.end(), 0);
    return LinearOrdering(std::move(asc));
}

std::vector<LinearOrdering> LinearOrdering::all(int n) {
    std::vector<int> asc(static_cast<std::size_t>(n));
    std::iota(asc.begin(), asc.end(), 0);
    std::vector<LinearOrdering> out;
    do {
        out.emplace_back(asc);
    } while (std::next_permutation(asc.begin(), asc.end()));
    return out;
}

LinearOrdering LinearOrdering::reversed() const {
    std::vector<int> rev(asc_.rbegin(), asc_.rend());
    return LinearOrdering(std::move(rev));
}

LinearOrdering LinearOrdering::restricted_to(const std::vector<int>& subset) const {
    std::vector<int> pts = subset;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<int> by_order = pts;
    std::sort(by_order.begin(), by_order.end(), [&](int a, int b) { return less(a, b); });
    // renumber: point pts[i] becomes i
    std::vector<int> asc;
    asc.reserve(by_order.size());
    for (int v : by_order) {
        const auto it = std::lower_bound(pts.begin(), pts.end(), v);
        asc.push_back(static_cast<int>(it - pts.begin()));
    }
    return LinearOrdering(std::move(asc));
}

LinearOrdering reversal(const LinearOrdering& o) { return o.reversed(); }

bool OrderingSet::contains(const LinearOrdering& o) const {
    return std::binary_search(orderings.begin(), orderings.end(), o);
}

// --- expansion helpers ---------------------------------------------------------

Structure expand_with_order(const ClassSpec& K, const Structure& A0, const LinearOrdering& o) {
    const auto base = K.expansion_base();
    if (!base) throw PreconditionError("expand_with_order: class is not an order expansion");
    if (!(A0.signature() == base->signature()))
        throw SignatureMismatchError("expand_with_order: structure not in the base signature");
    if (o.size() != A0.size()) throw PreconditionError("expand_with_order: ordering size mismatch");

    const auto& sig = K.signature();
    std::vector<std::vector<Tuple>> rels(sig.symbol_count());
    int bi = 0;
    for (int s = 0; s < static_cast<int>(sig.symbol_count()); ++s) {
        if (s == sig.order_symbol_index()) {
            for (int a = 0; a < A0.size(); ++a)
                for (int b = 0; b < A0.size(); ++b)
                    if (a != b && o.less(a, b)) rels[static_cast<std::size_t>(s)].push_back({a, b});
        } else {
            rels[static_cast<std::size_t>(s)] = A0.relation(bi++);
        }
    }
    return Structure(sig, A0.size(), std::move(rels));
}

Structure reduct(const Structure& A) {
    const auto& sig = A.signature();
    if (sig.order_symbol_index() < 0) return A;
    std::vector<std::vector<Tuple>> rels;
    for (int s = 0; s < static_cast<int>(sig.symbol_count()); ++s)
        if (s != sig.order_symbol_index()) rels.push_back(A.relation(s));
    return Structure(sig.without_order_symbol(), A.size(), std::move(rels));
}

OrderingSet admissible_orderings(const ClassSpec& K, const Structure& A0) {
    const auto base = K.expansion_base();
    if (!base) throw PreconditionError("admissible_orderings: class is not an order expansion");
    if (!base->member(A0))
        throw PreconditionError("admissible_orderings: structure not a member of the base class");
    OrderingSet out;
    out.size = A0.size();
    out.role = "admissible";
    for (auto& o : LinearOrdering::all(A0.size()))
        if (K.member(expand_with_order(K, A0, o))) out.orderings.push_back(std::move(o));
    return out;
}

// --- locally invariant orderings ------------------------------------------------

namespace {

// All two-point partial automorphisms of D as quadruples (a,b)->(c,d),
// a != b, c != d. Any partial automorphism violating an ordering restricts to
// one of these, so they decide invariance.
std::vector<std::array<int, 4>> two_point_partial_automorphisms(const Structure& D) {
    std::vector<std::array<int, 4>> out;
    const int n = D.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (c == d) continue;
                    // {a->c, b->d} must be an isomorphism of induced substructures
                    bool iso = true;
                    const auto& sig = D.signature();
                    for (int s = 0; s < static_cast<int>(sig.symbol_count()) && iso; ++s) {
                        const int r = sig.arity(s);
                        Tuple t(static_cast<std::size_t>(r), 0);
                        std::function<bool(int)> rec = [&](int pos) -> bool {
                            if (pos == r) {
                                Tuple img(t.size());
                                for (std::size_t i = 0; i < t.size(); ++i)
                                    img[i] = t[i] == a ? c : d;
                                return D.has(s, t) == D.has(s, img);
                            }
                            for (int v : {a, b}) {
                                t[static_cast<std::size_t>(pos)] = v;
                                if (!rec(pos + 1)) return false;
                            }
                            return true;
                        };
                        if (!rec(0)) iso = false;
                    }
                    if (iso) out.push_back({a, b, c, d});
                }
        }
    return out;
}

std::vector<LinearOrdering> filter_invariant(const std::vector<LinearOrdering>& candidates,
                                             const std::vector<std::array<int, 4>>& pair_maps,
                                             int parallelism) {
    std::vector<char> keep(candidates.size(), 0);
    detail::parallel_for(candidates.size(), parallelism, [&](std::size_t i) {
        const auto& o = candidates[i];
        for (const auto& [a, b, c, d] : pair_maps) {
            if (o.less(a, b) != o.less(c, d)) return;
        }
        keep[i] = 1;
    });
    std::vector<LinearOrdering> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i]) out.push_back(candidates[i]);
    return out;
}

} // namespace

OrderingSet locally_invariant_orderings(const Structure& D0, int parallelism) {
    OrderingSet out;
    out.size = D0.size();
    out.role = "locally_invariant";
    const auto pair_maps = two_point_partial_automorphisms(D0);
    out.orderings = filter_invariant(LinearOrdering::all(D0.size()), pair_maps, parallelism);
    return out;
}

FixedOrderingsResult fixed_orderings_approx(const ClassSpec& K0, const ClassSpec& K, int level,
                                            int cap, int parallelism) {
    const auto base = K.expansion_base();
    if (!base) throw PreconditionError("fixed_orderings_approx: class is not an order expansion");
    if (!(base->signature() == K0.signature()))
        throw SignatureMismatchError("fixed_orderings_approx: base signature mismatch");

    auto limit = build_limit_approx(K, level, cap);
    const Structure& F = limit.approx.carrier;
    if (F.size() > 10)
        throw CapExceededError("fixed_orderings_approx: carrier too large to scan all orderings (" +
                               std::to_string(F.size()) + " points)");
    Structure F0 = reduct(F);

    OrderingSet set;
    set.size = F0.size();
    set.role = "fixed_approx";
    std::vector<LinearOrdering> admissible;
    for (auto& o : LinearOrdering::all(F0.size()))
        if (K.member(expand_with_order(K, F0, o))) admissible.push_back(std::move(o));
    const auto pair_maps = two_point_partial_automorphisms(F);
    set.orderings = filter_invariant(admissible, pair_maps, parallelism);

    return FixedOrderingsResult{std::move(limit), std::move(F0), std::move(set)};
}

} // namespace ramseykit

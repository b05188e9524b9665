#pragma once

// Independent oracles for the test suites: straight-line brute force written
// against the definitions, sharing no search code with the library paths they
// check.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "ramseykit/expansions.hpp"
#include "ramseykit/structures.hpp"

namespace rkoracle {

using namespace ramseykit;

// brute-force isomorphism: try all bijections
inline bool iso_brute(const Structure& A, const Structure& B) {
    if (A.size() != B.size()) return false;
    std::vector<int> perm(static_cast<std::size_t>(A.size()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int s = 0; s < static_cast<int>(A.signature().symbol_count()) && ok; ++s) {
            const int r = A.signature().arity(s);
            std::vector<int> t(static_cast<std::size_t>(r), 0);
            std::function<bool(int)> rec = [&](int pos) -> bool {
                if (pos == r) {
                    Tuple src(t.begin(), t.end());
                    Tuple img(t.size());
                    for (std::size_t i = 0; i < t.size(); ++i)
                        img[i] = perm[static_cast<std::size_t>(t[i])];
                    return A.has(s, src) == B.has(s, img);
                }
                for (int v = 0; v < A.size(); ++v) {
                    t[static_cast<std::size_t>(pos)] = v;
                    if (!rec(pos + 1)) return false;
                }
                return true;
            };
            if (!rec(0)) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return A.size() == 0;
}

// all injections A -> B that preserve and reflect, by direct filtering
inline std::vector<std::vector<int>> embeddings_brute(const Structure& A, const Structure& B) {
    std::vector<std::vector<int>> out;
    std::vector<int> map(static_cast<std::size_t>(A.size()), -1);
    std::vector<bool> used(static_cast<std::size_t>(B.size()), false);
    std::function<void(int)> rec = [&](int depth) {
        if (depth == A.size()) {
            EmbeddingMap e{A, B, map};
            if (is_embedding(e)) out.push_back(map);
            return;
        }
        for (int img = 0; img < B.size(); ++img) {
            if (used[static_cast<std::size_t>(img)]) continue;
            used[static_cast<std::size_t>(img)] = true;
            map[static_cast<std::size_t>(depth)] = img;
            rec(depth + 1);
            used[static_cast<std::size_t>(img)] = false;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

// all partial automorphisms of D as (domain, image-under-map) pairs;
// enumerated by domain size so small violators come first
template <typename Fn>
inline void for_each_partial_automorphism(const Structure& D, Fn&& fn) {
    const int n = D.size();
    std::vector<int> domain;
    std::vector<int> image;
    // choose domain subset, then an injection into the universe, check iso
    std::function<void(int)> choose_image = [&](std::size_t pos) {};
    for (int k = 0; k <= n; ++k) {
        std::vector<int> comb(static_cast<std::size_t>(k));
        std::iota(comb.begin(), comb.end(), 0);
        bool more = true;
        if (k > n) break;
        while (more) {
            // all injections comb -> universe
            std::vector<int> img(static_cast<std::size_t>(k), -1);
            std::vector<bool> used(static_cast<std::size_t>(n), false);
            std::function<void(int)> inj = [&](int pos) {
                if (pos == k) {
                    // isomorphism of induced substructures?
                    bool iso = true;
                    for (int s = 0; s < static_cast<int>(D.signature().symbol_count()) && iso; ++s) {
                        const int r = D.signature().arity(s);
                        std::vector<int> idx(static_cast<std::size_t>(r), 0);
                        std::function<bool(int)> rec = [&](int p) -> bool {
                            if (p == r) {
                                Tuple src(idx.size()), dst(idx.size());
                                for (std::size_t i = 0; i < idx.size(); ++i) {
                                    src[i] = comb[static_cast<std::size_t>(idx[i])];
                                    dst[i] = img[static_cast<std::size_t>(idx[i])];
                                }
                                return D.has(s, src) == D.has(s, dst);
                            }
                            for (int v = 0; v < k; ++v) {
                                idx[static_cast<std::size_t>(p)] = v;
                                if (!rec(p + 1)) return false;
                            }
                            return true;
                        };
                        if (!rec(0)) iso = false;
                    }
                    if (iso) fn(comb, img);
                    return;
                }
                for (int v = 0; v < n; ++v) {
                    if (used[static_cast<std::size_t>(v)]) continue;
                    used[static_cast<std::size_t>(v)] = true;
                    img[static_cast<std::size_t>(pos)] = v;
                    inj(pos + 1);
                    used[static_cast<std::size_t>(v)] = false;
                }
            };
            inj(0);
            // next combination
            int i = k - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) {
                more = false;
            } else {
                ++comb[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
            }
            if (k == 0) more = false;
        }
    }
}

// definition-level locally invariant orderings: all n! orderings against ALL
// partial automorphisms (not just two-point ones)
inline std::vector<LinearOrdering> invariant_orderings_brute(const Structure& D) {
    std::vector<LinearOrdering> out;
    for (const auto& o : LinearOrdering::all(D.size())) {
        bool invariant = true;
        for_each_partial_automorphism(D, [&](const std::vector<int>& dom, const std::vector<int>& img) {
            if (!invariant) return;
            for (std::size_t i = 0; i < dom.size() && invariant; ++i)
                for (std::size_t j = 0; j < dom.size(); ++j) {
                    if (i == j) continue;
                    if (o.less(dom[i], dom[j]) != o.less(img[i], img[j])) {
                        invariant = false;
                        break;
                    }
                }
        });
        if (invariant) out.push_back(o);
    }
    return out;
}

} // namespace rkoracle

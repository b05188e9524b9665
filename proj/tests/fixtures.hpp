#pragma once

// Shared structure builders for the test suites. All of these construct
// concrete labeled structures; canonical forms are never assumed.

#include <numeric>
#include <vector>

#include "ramseykit/classes.hpp"
#include "ramseykit/structures.hpp"

namespace rktest {

using namespace ramseykit;

inline Signature graph_sig() { return Signature({{"E", 2}}); }
inline Signature lo_sig() { return Signature({{"<", 2}}, "<"); }
inline Signature set_sig() { return Signature(std::vector<SymbolDecl>{}); }

inline Structure graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Tuple> e;
    for (auto [a, b] : edges) {
        e.push_back({a, b});
        e.push_back({b, a});
    }
    return Structure(graph_sig(), n, {e});
}

inline Structure pure_set(int n) { return Structure(set_sig(), n, {}); }

// usual chain 0 < 1 < ... < n-1
inline Structure chain(int n) {
    std::vector<Tuple> lt;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) lt.push_back({a, b});
    return Structure(lo_sig(), n, {lt});
}

// chain in the given point order: asc[0] < asc[1] < ...
inline Structure chain_ordered_as(const std::vector<int>& asc) {
    const int n = static_cast<int>(asc.size());
    std::vector<Tuple> lt;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) lt.push_back({asc[static_cast<std::size_t>(i)], asc[static_cast<std::size_t>(j)]});
    return Structure(lo_sig(), n, {lt});
}

inline Structure complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return graph(n, edges);
}

inline Structure path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
    return graph(n, edges);
}

inline Structure cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
    return graph(n, edges);
}

inline Structure edgeless_graph(int n) { return graph(n, {}); }

// equivalence relation from a partition of 0..n-1
inline Structure equivalence(int n, const std::vector<std::vector<int>>& classes) {
    std::vector<Tuple> r;
    for (const auto& cls : classes)
        for (int a : cls)
            for (int b : cls) r.push_back({a, b});
    return Structure(Signature({{"R", 2}}), n, {r});
}

// {<, P}: members are linear orders with at most one P point (two P points
// forbidden); the classes module's amalgamation-failure fixture
inline ClassSpec two_p_forbidden_class() {
    Signature sig({{"P", 1}, {"<", 2}}, "<");
    Structure two_p(sig, 2, {{{0}, {1}}, {{0, 1}}});
    return ClassSpec::forbidden(sig, {two_p});
}

// {P}: forbids one P point together with one non-P point; joint embedding
// fails between a P point and a non-P point
inline ClassSpec mixed_p_forbidden_class() {
    Signature sig({{"P", 1}});
    Structure mixed(sig, 2, {{{0}}});
    return ClassSpec::forbidden(sig, {mixed});
}

inline Structure p_point(bool has_p) {
    Signature sig({{"P", 1}});
    std::vector<Tuple> p;
    if (has_p) p.push_back({0});
    return Structure(sig, 1, {p});
}

} // namespace rktest

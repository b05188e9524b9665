#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramseykit/errors.hpp"

namespace ramseykit {

// Finite relational signature. Symbols are ordered (the order fixes all
// serialized and canonical encodings); at most one binary symbol may be
// distinguished as the strict linear order "<".
struct SymbolDecl {
    std::string name;
    int arity = 0;

    bool operator==(const SymbolDecl&) const = default;
};

class Signature {
public:
    Signature() = default;
    Signature(std::vector<SymbolDecl> symbols,
              std::optional<std::string> order_symbol = std::nullopt);

    const std::vector<SymbolDecl>& symbols() const { return symbols_; }
    const std::optional<std::string>& order_symbol() const { return order_symbol_; }
    int order_symbol_index() const { return order_index_; } // -1 if none

    std::size_t symbol_count() const { return symbols_.size(); }
    int arity(int sym) const { return symbols_.at(static_cast<std::size_t>(sym)).arity; }
    const std::string& name(int sym) const { return symbols_.at(static_cast<std::size_t>(sym)).name; }
    std::optional<int> index_of(std::string_view name) const;

    // Signature extended by a strict-order symbol "<" appended last.
    Signature with_order_symbol(const std::string& name = "<") const;
    // Signature with the order symbol removed.
    Signature without_order_symbol() const;

    bool operator==(const Signature&) const = default;

private:
    std::vector<SymbolDecl> symbols_;
    std::optional<std::string> order_symbol_;
    int order_index_ = -1;
};

using Tuple = std::vector<int>;

// Finite relational structure over universe 0..n-1. Relations are stored
// sorted and deduplicated; if the signature carries an order symbol its
// relation must be a strict total order on the universe. Immutable after
// construction, so all operations on structures are pure.
class Structure {
public:
    Structure(Signature sig, int size, std::vector<std::vector<Tuple>> relations);

    static Structure empty(Signature sig) { return Structure(std::move(sig), 0, {}); }

    const Signature& signature() const { return sig_; }
    int size() const { return size_; }
    const std::vector<Tuple>& relation(int sym) const { return rels_.at(static_cast<std::size_t>(sym)); }
    const std::vector<std::vector<Tuple>>& relations() const { return rels_; }

    bool has(int sym, const Tuple& t) const;
    std::size_t tuple_count() const;

    bool operator==(const Structure& other) const {
        return sig_ == other.sig_ && size_ == other.size_ && rels_ == other.rels_;
    }

private:
    Signature sig_;
    int size_ = 0;
    std::vector<std::vector<Tuple>> rels_;
    std::vector<std::vector<std::uint64_t>> packed_; // sorted packed keys, one list per symbol
};

// An injective map claimed to be an embedding of source into target
// (relations preserved and reflected).
struct EmbeddingMap {
    Structure source;
    Structure target;
    std::vector<int> map; // image of each source point
};

// --- core operations ------------------------------------------------------

// Substructure induced on `subset` (set semantics; points renumbered by
// increasing original index). Throws on out-of-range indices.
Structure induced_substructure(const Structure& B, std::vector<int> subset);

// True iff e.map is injective and preserves/reflects every relation.
// Throws SignatureMismatchError when source/target signatures differ.
bool is_embedding(const EmbeddingMap& e);

// All embeddings A -> B as image vectors, in lexicographic order of the map.
std::vector<std::vector<int>> embedding_maps(const Structure& A, const Structure& B);
std::vector<EmbeddingMap> find_embeddings(const Structure& A, const Structure& B);
bool embeds(const Structure& A, const Structure& B);

// Existence of an embedding extending the given pins (pins[i] = forced image
// of source point i, or -1).
bool exists_embedding_with_pins(const Structure& A, const Structure& B,
                                const std::vector<int>& pins);

// Image of A under the relabeling perm (perm[old] = new).
Structure relabel(const Structure& A, const std::vector<int>& perm);

// Canonical encoding: the lexicographically minimal relation bitstring over
// all relabelings of the universe, prefixed by size and signature. Tuples are
// enumerated in "layered" order (block k lists the tuples whose maximum entry
// is k-1), which makes prefix pruning in the backtracking search sound. Equal
// encodings <=> isomorphic.
std::vector<std::uint8_t> canonical_form(const Structure& A);
std::string canonical_hex(const Structure& A);
// Relabeling achieving the canonical encoding, as new_index -> old_point.
std::vector<int> canonical_relabeling(const Structure& A);
// The canonical representative of A's isomorphism class.
Structure canonicalize(const Structure& A);

bool are_isomorphic(const Structure& A, const Structure& B);

using StructureFilter = std::function<bool(const Structure&)>;

// One canonical representative per isomorphism class of size-n structures
// passing the filter, sorted by canonical encoding. When hereditary_filter is
// set the filter is also used to prune intermediate extension levels (sound
// only for hereditary predicates).
std::vector<Structure> enumerate_structures(const Signature& sig, int n,
                                            const StructureFilter& filter = nullptr,
                                            bool hereditary_filter = false);

// All point subsets S of C with C|S isomorphic to A, in lexicographic
// subset order.
std::vector<std::vector<int>> copies_of(const Structure& A, const Structure& C);

// Automorphism count (embeddings A -> A).
std::size_t automorphism_count(const Structure& A);

} // namespace ramseykit

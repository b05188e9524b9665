#include "ramseykit/structures.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

namespace ramseykit {

namespace {

constexpr int kMaxUniverse = 63; // packed tuple keys use 6 bits per entry
constexpr int kMaxArity = 10;

std::uint64_t pack_tuple(const Tuple& t) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        key |= static_cast<std::uint64_t>(t[i]) << (6 * i);
    return key;
}

void check_same_signature(const Signature& a, const Signature& b, const char* what) {
    if (!(a == b)) throw SignatureMismatchError(std::string(what) + ": signatures differ");
}

} // namespace

// --- Signature -------------------------------------------------------------

Signature::Signature(std::vector<SymbolDecl> symbols, std::optional<std::string> order_symbol)
    : symbols_(std::move(symbols)), order_symbol_(std::move(order_symbol)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].name.empty()) throw Error("signature: empty symbol name");
        if (symbols_[i].arity < 1 || symbols_[i].arity > kMaxArity)
            throw Error("signature: arity out of range for symbol " + symbols_[i].name);
        for (std::size_t j = 0; j < i; ++j)
            if (symbols_[j].name == symbols_[i].name)
                throw Error("signature: duplicate symbol name " + symbols_[i].name);
    }
    if (order_symbol_) {
        auto idx = index_of(*order_symbol_);
        if (!idx) throw Error("signature: order symbol " + *order_symbol_ + " not declared");
        if (arity(*idx) != 2) throw Error("signature: order symbol must be binary");
        order_index_ = *idx;
    }
}

std::optional<int> Signature::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name == name) return static_cast<int>(i);
    return std::nullopt;
}

Signature Signature::with_order_symbol(const std::string& name) const {
    if (order_symbol_) throw Error("signature already has an order symbol");
    auto syms = symbols_;
    syms.push_back({name, 2});
    return Signature(std::move(syms), name);
}

Signature Signature::without_order_symbol() const {
    if (!order_symbol_) return *this;
    std::vector<SymbolDecl> syms;
    for (int i = 0; i < static_cast<int>(symbols_.size()); ++i)
        if (i != order_index_) syms.push_back(symbols_[static_cast<std::size_t>(i)]);
    return Signature(std::move(syms));
}

// --- Structure ---------------------------------------------------------------

Structure::Structure(Signature sig, int size, std::vector<std::vector<Tuple>> relations)
    : sig_(std::move(sig)), size_(size) {
    if (size_ < 0 || size_ > kMaxUniverse) throw Error("structure: size out of range");
    if (relations.size() > sig_.symbol_count())
        throw Error("structure: more relation lists than symbols");
    relations.resize(sig_.symbol_count());
    rels_ = std::move(relations);
    packed_.resize(rels_.size());
    for (std::size_t s = 0; s < rels_.size(); ++s) {
        const int r = sig_.arity(static_cast<int>(s));
        for (auto& t : rels_[s]) {
            if (static_cast<int>(t.size()) != r)
                throw Error("structure: tuple arity mismatch for " + sig_.name(static_cast<int>(s)));
            for (int v : t)
                if (v < 0 || v >= size_)
                    throw Error("structure: point index out of range in " + sig_.name(static_cast<int>(s)));
        }
        std::sort(rels_[s].begin(), rels_[s].end());
        rels_[s].erase(std::unique(rels_[s].begin(), rels_[s].end()), rels_[s].end());
        packed_[s].reserve(rels_[s].size());
        for (const auto& t : rels_[s]) packed_[s].push_back(pack_tuple(t));
    }
    if (sig_.order_symbol_index() >= 0) {
        // The order relation must be a strict total order on the universe.
        const auto& ord = rels_[static_cast<std::size_t>(sig_.order_symbol_index())];
        std::vector<std::vector<bool>> lt(static_cast<std::size_t>(size_),
                                          std::vector<bool>(static_cast<std::size_t>(size_), false));
        for (const auto& t : ord) {
            if (t[0] == t[1]) throw Error("structure: order relation is reflexive");
            lt[static_cast<std::size_t>(t[0])][static_cast<std::size_t>(t[1])] = true;
        }
        for (int a = 0; a < size_; ++a)
            for (int b = 0; b < size_; ++b) {
                if (a == b) continue;
                if (lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ==
                    lt[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
                    throw Error("structure: order relation not total/antisymmetric");
            }
        for (int a = 0; a < size_; ++a)
            for (int b = 0; b < size_; ++b)
                for (int c = 0; c < size_; ++c)
                    if (a != b && b != c && a != c &&
                        lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
                        lt[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] &&
                        !lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)])
                        throw Error("structure: order relation not transitive");
    }
}

bool Structure::has(int sym, const Tuple& t) const {
    const auto& keys = packed_.at(static_cast<std::size_t>(sym));
    return std::binary_search(keys.begin(), keys.end(), pack_tuple(t));
}

std::size_t Structure::tuple_count() const {
    std::size_t n = 0;
    for (const auto& r : rels_) n += r.size();
    return n;
}

// --- induced substructure ---------------------------------------------------

Structure induced_substructure(const Structure& B, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (int v : subset)
        if (v < 0 || v >= B.size()) throw Error("induced_substructure: point index out of range");

    std::vector<int> new_index(static_cast<std::size_t>(B.size()), -1);
    for (std::size_t i = 0; i < subset.size(); ++i)
        new_index[static_cast<std::size_t>(subset[i])] = static_cast<int>(i);

    std::vector<std::vector<Tuple>> rels(B.signature().symbol_count());
    for (std::size_t s = 0; s < rels.size(); ++s) {
        for (const auto& t : B.relation(static_cast<int>(s))) {
            Tuple mapped;
            mapped.reserve(t.size());
            bool inside = true;
            for (int v : t) {
                if (new_index[static_cast<std::size_t>(v)] < 0) { inside = false; break; }
                mapped.push_back(new_index[static_cast<std::size_t>(v)]);
            }
            if (inside) rels[s].push_back(std::move(mapped));
        }
    }
    return Structure(B.signature(), static_cast<int>(subset.size()), std::move(rels));
}

// --- embeddings ---------------------------------------------------------------

namespace {

// Enumerates all tuples over `domain` (as new-label indices 0..d-1) of the
// given arity that mention index `must_use`, calling fn(tuple). Used for the
// incremental preserve/reflect check: when point `must_use` is assigned, only
// tuples involving it are newly decidable.
template <typename Fn>
void for_tuples_using(int domain, int arity, int must_use, Fn&& fn) {
    Tuple t(static_cast<std::size_t>(arity), 0);
    std::function<void(int, bool)> rec = [&](int pos, bool used) {
        if (pos == arity) {
            if (used) fn(t);
            return;
        }
        const int remaining = arity - pos - 1;
        for (int v = 0; v < domain; ++v) {
            if (!used && v != must_use && remaining == 0) continue; // cannot satisfy must_use
            t[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, used || v == must_use);
        }
    };
    rec(0, false);
}

// Checks tuples decided by assigning source point `p` (all tuples over the
// assigned source points that mention p): preserved and reflected.
bool assignment_consistent(const Structure& A, const Structure& B,
                           const std::vector<int>& map, int p) {
    const auto& sig = A.signature();
    const int assigned = p + 1; // points 0..p are assigned (search assigns in order)
    for (int s = 0; s < static_cast<int>(sig.symbol_count()); ++s) {
        const int r = sig.arity(s);
        bool ok = true;
        for_tuples_using(assigned, r, p, [&](const Tuple& t) {
            if (!ok) return;
            Tuple img(t.size());
            for (std::size_t i = 0; i < t.size(); ++i)
                img[i] = map[static_cast<std::size_t>(t[i])];
            if (A.has(s, t) != B.has(s, img)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

void embedding_search(const Structure& A, const Structure& B, std::vector<int>& map,
                      std::vector<bool>& used, int depth, const std::vector<int>* pins,
                      bool stop_at_first, bool& found,
                      std::vector<std::vector<int>>* out) {
    if (stop_at_first && found) return;
    if (depth == A.size()) {
        found = true;
        if (out) out->push_back(map);
        return;
    }
    const int pinned = pins ? (*pins)[static_cast<std::size_t>(depth)] : -1;
    for (int img = 0; img < B.size(); ++img) {
        if (used[static_cast<std::size_t>(img)]) continue;
        if (pinned >= 0 && img != pinned) continue;
        map[static_cast<std::size_t>(depth)] = img;
        if (assignment_consistent(A, B, map, depth)) {
            used[static_cast<std::size_t>(img)] = true;
            embedding_search(A, B, map, used, depth + 1, pins, stop_at_first, found, out);
            used[static_cast<std::size_t>(img)] = false;
            if (stop_at_first && found) return;
        }
    }
    map[static_cast<std::size_t>(depth)] = -1;
}

} // namespace

bool is_embedding(const EmbeddingMap& e) {
    check_same_signature(e.source.signature(), e.target.signature(), "is_embedding");
    const auto& m = e.map;
    if (static_cast<int>(m.size()) != e.source.size()) return false;
    std::vector<bool> seen(static_cast<std::size_t>(e.target.size()), false);
    for (int img : m) {
        if (img < 0 || img >= e.target.size()) return false;
        if (seen[static_cast<std::size_t>(img)]) return false; // not injective
        seen[static_cast<std::size_t>(img)] = true;
    }
    const auto& sig = e.source.signature();
    for (int s = 0; s < static_cast<int>(sig.symbol_count()); ++s) {
        const int r = sig.arity(s);
        // every tuple over the source universe: preserved and reflected
        Tuple t(static_cast<std::size_t>(r), 0);
        std::function<bool(int)> rec = [&](int pos) -> bool {
            if (pos == r) {
                Tuple img(t.size());
                for (std::size_t i = 0; i < t.size(); ++i)
                    img[i] = m[static_cast<std::size_t>(t[i])];
                return e.source.has(s, t) == e.target.has(s, img);
            }
            for (int v = 0; v < e.source.size(); ++v) {
                t[static_cast<std::size_t>(pos)] = v;
                if (!rec(pos + 1)) return false;
            }
            return true;
        };
        if (!rec(0)) return false;
    }
    return true;
}

std::vector<std::vector<int>> embedding_maps(const Structure& A, const Structure& B) {
    check_same_signature(A.signature(), B.signature(), "embedding_maps");
    std::vector<std::vector<int>> out;
    if (A.size() > B.size()) return out;
    std::vector<int> map(static_cast<std::size_t>(A.size()), -1);
    std::vector<bool> used(static_cast<std::size_t>(B.size()), false);
    bool found = false;
    embedding_search(A, B, map, used, 0, nullptr, false, found, &out);
    return out;
}

std::vector<EmbeddingMap> find_embeddings(const Structure& A, const Structure& B) {
    std::vector<EmbeddingMap> out;
    for (auto& m : embedding_maps(A, B)) out.push_back(EmbeddingMap{A, B, std::move(m)});
    return out;
}

bool embeds(const Structure& A, const Structure& B) {
    check_same_signature(A.signature(), B.signature(), "embeds");
    if (A.size() > B.size()) return false;
    std::vector<int> map(static_cast<std::size_t>(A.size()), -1);
    std::vector<bool> used(static_cast<std::size_t>(B.size()), false);
    bool found = false;
    embedding_search(A, B, map, used, 0, nullptr, true, found, nullptr);
    return found;
}

bool exists_embedding_with_pins(const Structure& A, const Structure& B,
                                const std::vector<int>& pins) {
    check_same_signature(A.signature(), B.signature(), "exists_embedding_with_pins");
    if (static_cast<int>(pins.size()) != A.size())
        throw Error("exists_embedding_with_pins: pin vector size mismatch");
    if (A.size() > B.size()) return false;
    std::vector<int> map(static_cast<std::size_t>(A.size()), -1);
    std::vector<bool> used(static_cast<std::size_t>(B.size()), false);
    bool found = false;
    embedding_search(A, B, map, used, 0, &pins, true, found, nullptr);
    return found;
}

Structure relabel(const Structure& A, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != A.size()) throw Error("relabel: permutation size mismatch");
    std::vector<std::vector<Tuple>> rels(A.signature().symbol_count());
    for (std::size_t s = 0; s < rels.size(); ++s) {
        for (const auto& t : A.relation(static_cast<int>(s))) {
            Tuple mapped(t.size());
            for (std::size_t i = 0; i < t.size(); ++i)
                mapped[i] = perm.at(static_cast<std::size_t>(t[i]));
            rels[s].push_back(std::move(mapped));
        }
    }
    return Structure(A.signature(), A.size(), std::move(rels));
}

// --- canonical form -----------------------------------------------------------

namespace {

// Tuples grouped into layers: layer k (1-based) holds the tuples over
// {0..k-1} whose maximum entry is exactly k-1, per symbol in signature order.
// Assigning the first k points of a relabeling decides exactly the bits of
// layers 1..k, so prefix comparison against the best-known encoding is sound.
struct LayerPlan {
    // per layer, per symbol: list of tuples (in new labels), lex sorted
    std::vector<std::vector<std::vector<Tuple>>> layers;
    std::vector<std::size_t> bits_through_layer; // cumulative bit counts
    std::size_t total_bits = 0;
};

LayerPlan make_layer_plan(const Signature& sig, int n) {
    LayerPlan plan;
    plan.layers.resize(static_cast<std::size_t>(n));
    std::size_t cum = 0;
    for (int k = 1; k <= n; ++k) {
        auto& layer = plan.layers[static_cast<std::size_t>(k - 1)];
        layer.resize(sig.symbol_count());
        for (int s = 0; s < static_cast<int>(sig.symbol_count()); ++s) {
            const int r = sig.arity(s);
            Tuple t(static_cast<std::size_t>(r), 0);
            std::function<void(int, bool)> rec = [&](int pos, bool hit) {
                if (pos == r) {
                    if (hit) layer[static_cast<std::size_t>(s)].push_back(t);
                    return;
                }
                for (int v = 0; v < k; ++v) {
                    t[static_cast<std::size_t>(pos)] = v;
                    rec(pos + 1, hit || v == k - 1);
                }
            };
            rec(0, false);
            cum += layer[static_cast<std::size_t>(s)].size();
        }
        plan.bits_through_layer.push_back(cum);
    }
    plan.total_bits = cum;
    return plan;
}

struct BitString {
    std::vector<std::uint8_t> bytes;
    std::size_t bit_count = 0;

    void push(bool b) {
        if (bit_count % 8 == 0) bytes.push_back(0);
        if (b) bytes.back() |= static_cast<std::uint8_t>(1u << (7 - bit_count % 8));
        ++bit_count;
    }
    void truncate(std::size_t bits) {
        bit_count = bits;
        bytes.resize((bits + 7) / 8);
        if (bits % 8 != 0 && !bytes.empty())
            bytes.back() &= static_cast<std::uint8_t>(0xFFu << (8 - bits % 8));
    }
    // -1 / 0 / +1 comparison of the first `bits` bits.
    int compare_prefix(const BitString& other, std::size_t bits) const {
        const std::size_t full = bits / 8, rem = bits % 8;
        for (std::size_t i = 0; i < full; ++i) {
            if (bytes[i] != other.bytes[i]) return bytes[i] < other.bytes[i] ? -1 : 1;
        }
        if (rem) {
            const std::uint8_t mask = static_cast<std::uint8_t>(0xFFu << (8 - rem));
            const std::uint8_t a = static_cast<std::uint8_t>(bytes[full] & mask);
            const std::uint8_t b = static_cast<std::uint8_t>(other.bytes[full] & mask);
            if (a != b) return a < b ? -1 : 1;
        }
        return 0;
    }
};

struct CanonicalData {
    std::vector<std::uint8_t> encoding; // header + bits
    std::vector<int> relabeling;        // new index -> old point
};

// Degree profile of a point: per (symbol, position), how many tuples have the
// point at that position. Used only to order candidates (helps the search
// find the minimal labeling early); correctness does not depend on it.
std::vector<std::vector<int>> degree_profiles(const Structure& A) {
    std::size_t slots = 0;
    for (const auto& sym : A.signature().symbols()) slots += static_cast<std::size_t>(sym.arity);
    std::vector<std::vector<int>> prof(static_cast<std::size_t>(A.size()),
                                       std::vector<int>(slots, 0));
    std::size_t slot = 0;
    for (int s = 0; s < static_cast<int>(A.signature().symbol_count()); ++s) {
        const int r = A.signature().arity(s);
        for (int pos = 0; pos < r; ++pos, ++slot)
            for (const auto& t : A.relation(s))
                ++prof[static_cast<std::size_t>(t[static_cast<std::size_t>(pos)])][slot];
    }
    return prof;
}

void append_layer_bits(const Structure& A, const LayerPlan& plan,
                       const std::vector<int>& chosen, int depth, BitString& bits) {
    const auto& layer = plan.layers[static_cast<std::size_t>(depth)];
    Tuple old_t;
    for (std::size_t s = 0; s < layer.size(); ++s) {
        for (const auto& t : layer[s]) {
            old_t.resize(t.size());
            for (std::size_t i = 0; i < t.size(); ++i)
                old_t[i] = chosen[static_cast<std::size_t>(t[i])];
            bits.push(A.has(static_cast<int>(s), old_t));
        }
    }
}

CanonicalData canonical_data(const Structure& A) {
    const int n = A.size();
    const LayerPlan plan = make_layer_plan(A.signature(), n);

    // header: size (4 bytes big-endian) + symbol table
    std::vector<std::uint8_t> header;
    for (int shift = 24; shift >= 0; shift -= 8)
        header.push_back(static_cast<std::uint8_t>((static_cast<std::uint32_t>(n) >> shift) & 0xFF));
    for (const auto& sym : A.signature().symbols()) {
        header.push_back(static_cast<std::uint8_t>(sym.arity));
        header.insert(header.end(), sym.name.begin(), sym.name.end());
        header.push_back(0);
    }
    header.push_back(A.signature().order_symbol_index() >= 0
                         ? static_cast<std::uint8_t>(A.signature().order_symbol_index() + 1)
                         : 0);

    if (n == 0) return {header, {}};

    const auto prof = degree_profiles(A);
    std::vector<int> candidate_order(static_cast<std::size_t>(n));
    std::iota(candidate_order.begin(), candidate_order.end(), 0);
    std::sort(candidate_order.begin(), candidate_order.end(), [&](int a, int b) {
        if (prof[static_cast<std::size_t>(a)] != prof[static_cast<std::size_t>(b)])
            return prof[static_cast<std::size_t>(a)] < prof[static_cast<std::size_t>(b)];
        return a < b;
    });

    // initial best: identity labeling
    BitString best;
    {
        std::vector<int> ident(static_cast<std::size_t>(n));
        std::iota(ident.begin(), ident.end(), 0);
        for (int d = 0; d < n; ++d) append_layer_bits(A, plan, ident, d, best);
    }
    std::vector<int> best_rel(static_cast<std::size_t>(n));
    std::iota(best_rel.begin(), best_rel.end(), 0);

    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    BitString bits;

    std::function<void(int)> dfs = [&](int depth) {
        if (depth == n) {
            if (bits.compare_prefix(best, plan.total_bits) < 0) {
                best = bits;
                best_rel = chosen;
            }
            return;
        }
        const std::size_t bits_before = depth == 0 ? 0 : plan.bits_through_layer[static_cast<std::size_t>(depth - 1)];
        const std::size_t bits_after = plan.bits_through_layer[static_cast<std::size_t>(depth)];
        for (int v : candidate_order) {
            if (used[static_cast<std::size_t>(v)]) continue;
            chosen.push_back(v);
            append_layer_bits(A, plan, chosen, depth, bits);
            if (bits.compare_prefix(best, bits_after) <= 0) {
                used[static_cast<std::size_t>(v)] = true;
                dfs(depth + 1);
                used[static_cast<std::size_t>(v)] = false;
            }
            bits.truncate(bits_before);
            chosen.pop_back();
        }
    };
    dfs(0);

    std::vector<std::uint8_t> encoding = header;
    encoding.insert(encoding.end(), best.bytes.begin(), best.bytes.end());
    return {std::move(encoding), std::move(best_rel)};
}

} // namespace

std::vector<std::uint8_t> canonical_form(const Structure& A) { return canonical_data(A).encoding; }

std::string canonical_hex(const Structure& A) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (std::uint8_t b : canonical_form(A)) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

std::vector<int> canonical_relabeling(const Structure& A) { return canonical_data(A).relabeling; }

Structure canonicalize(const Structure& A) {
    const auto rel = canonical_relabeling(A); // new index -> old point
    std::vector<int> perm(static_cast<std::size_t>(A.size()));
    for (std::size_t i = 0; i < rel.size(); ++i)
        perm[static_cast<std::size_t>(rel[i])] = static_cast<int>(i); // old -> new
    return relabel(A, perm);
}

bool are_isomorphic(const Structure& A, const Structure& B) {
    check_same_signature(A.signature(), B.signature(), "are_isomorphic");
    if (A.size() != B.size()) return false;
    for (int s = 0; s < static_cast<int>(A.signature().symbol_count()); ++s)
        if (A.relation(s).size() != B.relation(s).size()) return false;
    auto pa = degree_profiles(A);
    auto pb = degree_profiles(B);
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return false;
    return canonical_form(A) == canonical_form(B);
}

// --- enumeration ---------------------------------------------------------------

namespace {

// All ways to wire a new point p = |parent| to an existing structure, per
// symbol. For the order symbol the wirings are the p+1 insertion positions;
// for other symbols, every subset of the tuples over 0..p that mention p.
std::vector<std::vector<std::vector<Tuple>>> wiring_choices(const Signature& sig,
                                                            const Structure& parent) {
    const int p = parent.size();
    std::vector<std::vector<std::vector<Tuple>>> per_symbol;
    for (int s = 0; s < static_cast<int>(sig.symbol_count()); ++s) {
        std::vector<std::vector<Tuple>> choices;
        if (s == sig.order_symbol_index()) {
            // existing points in ascending parent order
            std::vector<int> asc(static_cast<std::size_t>(p));
            std::iota(asc.begin(), asc.end(), 0);
            std::sort(asc.begin(), asc.end(), [&](int a, int b) {
                return parent.has(s, {a, b});
            });
            for (int pos = 0; pos <= p; ++pos) {
                std::vector<Tuple> tuples;
                for (int i = 0; i < pos; ++i) tuples.push_back({asc[static_cast<std::size_t>(i)], p});
                for (int i = pos; i < p; ++i) tuples.push_back({p, asc[static_cast<std::size_t>(i)]});
                choices.push_back(std::move(tuples));
            }
        } else {
            const int r = sig.arity(s);
            std::vector<Tuple> slots;
            Tuple t(static_cast<std::size_t>(r), 0);
            std::function<void(int, bool)> rec = [&](int pos, bool hit) {
                if (pos == r) {
                    if (hit) slots.push_back(t);
                    return;
                }
                for (int v = 0; v <= p; ++v) {
                    t[static_cast<std::size_t>(pos)] = v;
                    rec(pos + 1, hit || v == p);
                }
            };
            rec(0, false);
            if (slots.size() > 18)
                throw CapExceededError("enumerate_structures: wiring space too large (" +
                                       std::to_string(slots.size()) + " tuple slots)");
            const std::uint32_t total = 1u << slots.size();
            for (std::uint32_t mask = 0; mask < total; ++mask) {
                std::vector<Tuple> tuples;
                for (std::size_t i = 0; i < slots.size(); ++i)
                    if (mask & (1u << i)) tuples.push_back(slots[i]);
                choices.push_back(std::move(tuples));
            }
        }
        per_symbol.push_back(std::move(choices));
    }
    return per_symbol;
}

} // namespace

std::vector<Structure> enumerate_structures(const Signature& sig, int n,
                                            const StructureFilter& filter,
                                            bool hereditary_filter) {
    if (n < 0) throw Error("enumerate_structures: negative size");
    std::vector<Structure> level;
    {
        Structure e = Structure::empty(sig);
        if (!(hereditary_filter && filter && !filter(e))) level.push_back(std::move(e));
    }
    for (int m = 1; m <= n && !level.empty(); ++m) {
        std::map<std::vector<std::uint8_t>, Structure> next;
        for (const auto& parent : level) {
            const auto choices = wiring_choices(sig, parent);
            std::vector<std::size_t> idx(choices.size(), 0);
            while (true) {
                std::vector<std::vector<Tuple>> rels(sig.symbol_count());
                for (std::size_t s = 0; s < rels.size(); ++s) {
                    rels[s] = parent.relation(static_cast<int>(s));
                    const auto& add = choices[s][idx[s]];
                    rels[s].insert(rels[s].end(), add.begin(), add.end());
                }
                Structure cand(sig, m, std::move(rels));
                if (!(hereditary_filter && filter && !filter(cand))) {
                    Structure canon = canonicalize(cand);
                    auto key = canonical_form(canon);
                    next.try_emplace(std::move(key), std::move(canon));
                }
                // advance mixed-radix counter
                std::size_t s = 0;
                for (; s < idx.size(); ++s) {
                    if (++idx[s] < choices[s].size()) break;
                    idx[s] = 0;
                }
                if (s == idx.size()) break;
            }
        }
        level.clear();
        for (auto& [key, st] : next) level.push_back(std::move(st));
    }
    if (filter) {
        std::vector<Structure> out;
        for (auto& st : level)
            if (filter(st)) out.push_back(std::move(st));
        return out;
    }
    return level;
}

std::vector<std::vector<int>> copies_of(const Structure& A, const Structure& C) {
    check_same_signature(A.signature(), C.signature(), "copies_of");
    std::vector<std::vector<int>> out;
    const int n = C.size(), k = A.size();
    if (k > n) return out;
    const auto target = canonical_form(A);
    std::vector<int> comb(static_cast<std::size_t>(k));
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        Structure sub = induced_substructure(C, comb);
        bool counts_ok = true;
        for (int s = 0; s < static_cast<int>(A.signature().symbol_count()); ++s)
            if (sub.relation(s).size() != A.relation(s).size()) { counts_ok = false; break; }
        if (counts_ok && canonical_form(sub) == target) out.push_back(comb);
        // next combination in lex order
        int i = k - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::size_t automorphism_count(const Structure& A) { return embedding_maps(A, A).size(); }

} // namespace ramseykit

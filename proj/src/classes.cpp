#include "ramseykit/classes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace ramseykit {

namespace {

Signature sig_pure_sets() { return Signature(std::vector<SymbolDecl>{}); }
Signature sig_graphs() { return Signature({{"E", 2}}); }
Signature sig_tournaments() { return Signature({{"T", 2}}); }
Signature sig_equivalence() { return Signature({{"R", 2}}); }
Signature sig_linear_orders() { return Signature({{"<", 2}}, "<"); }
Signature sig_ordered_graphs() { return Signature({{"E", 2}, {"<", 2}}, "<"); }

bool symmetric_irreflexive(const Structure& A, int sym) {
    for (const auto& t : A.relation(sym)) {
        if (t[0] == t[1]) return false;
        if (!A.has(sym, {t[1], t[0]})) return false;
    }
    return true;
}

bool graph_member(const Structure& A) { return symmetric_irreflexive(A, 0); }

bool triangle_free_member(const Structure& A) {
    if (!graph_member(A)) return false;
    for (int a = 0; a < A.size(); ++a)
        for (int b = a + 1; b < A.size(); ++b)
            for (int c = b + 1; c < A.size(); ++c)
                if (A.has(0, {a, b}) && A.has(0, {b, c}) && A.has(0, {a, c}))
                    return false;
    return true;
}

bool tournament_member(const Structure& A) {
    for (const auto& t : A.relation(0))
        if (t[0] == t[1]) return false;
    for (int a = 0; a < A.size(); ++a)
        for (int b = a + 1; b < A.size(); ++b)
            if (A.has(0, {a, b}) == A.has(0, {b, a})) return false;
    return true;
}

bool equivalence_member(const Structure& A) {
    for (int a = 0; a < A.size(); ++a)
        if (!A.has(0, {a, a})) return false;
    for (const auto& t : A.relation(0))
        if (!A.has(0, {t[1], t[0]})) return false;
    for (int a = 0; a < A.size(); ++a)
        for (int b = 0; b < A.size(); ++b)
            for (int c = 0; c < A.size(); ++c)
                if (A.has(0, {a, b}) && A.has(0, {b, c}) && !A.has(0, {a, c}))
                    return false;
    return true;
}

// Admissibility predicates (closed registry). They see the fully expanded
// structure; the order symbol is the last binary symbol tagged in the
// signature.
bool adm_all_orders(const Structure&) { return true; }

bool adm_convex_wrt_equivalence(const Structure& A) {
    // the first non-order binary symbol is the equivalence
    int eq = -1;
    for (int s = 0; s < static_cast<int>(A.signature().symbol_count()); ++s)
        if (s != A.signature().order_symbol_index() && A.signature().arity(s) == 2) { eq = s; break; }
    if (eq < 0) throw PreconditionError("convex_wrt_equivalence: no binary base symbol");
    const int ord = A.signature().order_symbol_index();
    for (int a = 0; a < A.size(); ++a)
        for (int b = 0; b < A.size(); ++b) {
            if (a == b || !A.has(eq, {a, b})) continue;
            for (int c = 0; c < A.size(); ++c) {
                if (c == a || c == b) continue;
                if (A.has(ord, {a, c}) && A.has(ord, {c, b}) && !A.has(eq, {a, c}))
                    return false;
            }
        }
    return true;
}

bool adm_increasing_edges(const Structure& A) {
    const int ord = A.signature().order_symbol_index();
    for (int s = 0; s < static_cast<int>(A.signature().symbol_count()); ++s) {
        if (s == ord || A.signature().arity(s) != 2) continue;
        for (const auto& t : A.relation(s))
            if (t[0] != t[1] && !A.has(ord, {t[0], t[1]})) return false;
    }
    return true;
}

using AdmissibilityFn = bool (*)(const Structure&);

const std::map<std::string, AdmissibilityFn>& admissibility_registry() {
    static const std::map<std::string, AdmissibilityFn> reg = {
        {"all_orders", adm_all_orders},
        {"convex_wrt_equivalence", adm_convex_wrt_equivalence},
        {"increasing_edges", adm_increasing_edges},
    };
    return reg;
}

} // namespace

// --- ClassSpec ----------------------------------------------------------------

const std::vector<std::string>& ClassSpec::builtin_names() {
    static const std::vector<std::string> names = {
        "pure-sets",      "graphs",        "k3-free-graphs", "tournaments",
        "equivalence-relations", "linear-orders", "ordered-graphs", "even-size-sets",
    };
    return names;
}

const std::vector<std::string>& ClassSpec::admissibility_names() {
    static std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, v] : admissibility_registry()) out.push_back(k);
        return out;
    }();
    return names;
}

ClassSpec ClassSpec::builtin(const std::string& name) {
    ClassSpec k;
    k.mode_ = Mode::Builtin;
    k.builtin_name_ = name;
    if (name == "pure-sets" || name == "even-size-sets") k.sig_ = sig_pure_sets();
    else if (name == "graphs" || name == "k3-free-graphs") k.sig_ = sig_graphs();
    else if (name == "tournaments") k.sig_ = sig_tournaments();
    else if (name == "equivalence-relations") k.sig_ = sig_equivalence();
    else if (name == "linear-orders") k.sig_ = sig_linear_orders();
    else if (name == "ordered-graphs") k.sig_ = sig_ordered_graphs();
    else throw UnknownNameError("unknown builtin class: " + name);
    return k;
}

ClassSpec ClassSpec::forbidden(Signature sig, std::vector<Structure> forbidden) {
    ClassSpec k;
    k.mode_ = Mode::Forbidden;
    k.sig_ = std::move(sig);
    for (auto& f : forbidden) {
        if (!(f.signature() == k.sig_))
            throw SignatureMismatchError("forbidden structure signature differs from class signature");
        k.forbidden_.push_back(canonicalize(f));
    }
    return k;
}

ClassSpec ClassSpec::order_expansion(ClassSpec base, const std::string& admissibility) {
    if (base.signature().order_symbol())
        throw PreconditionError("order_expansion: base class already ordered");
    if (!admissibility_registry().count(admissibility))
        throw UnknownNameError("unknown admissibility predicate: " + admissibility);
    ClassSpec k;
    k.mode_ = Mode::OrderExpansion;
    k.sig_ = base.signature().with_order_symbol();
    k.admissibility_ = admissibility;
    k.base_ = std::make_shared<const ClassSpec>(std::move(base));
    return k;
}

std::string ClassSpec::describe() const {
    switch (mode_) {
    case Mode::Builtin: return "builtin:" + builtin_name_;
    case Mode::Forbidden: return "forbidden[" + std::to_string(forbidden_.size()) + "]";
    case Mode::OrderExpansion: return base_->describe() + "+order(" + admissibility_ + ")";
    }
    return "?";
}

bool ClassSpec::member(const Structure& A) const {
    if (!(A.signature() == sig_))
        throw SignatureMismatchError("member: structure signature differs from class signature");
    switch (mode_) {
    case Mode::Builtin: {
        const auto& n = builtin_name_;
        if (n == "pure-sets") return true;
        if (n == "even-size-sets") return A.size() % 2 == 0;
        if (n == "graphs") return graph_member(A);
        if (n == "k3-free-graphs") return triangle_free_member(A);
        if (n == "tournaments") return tournament_member(A);
        if (n == "equivalence-relations") return equivalence_member(A);
        if (n == "linear-orders") return true; // order totality enforced by Structure
        if (n == "ordered-graphs") return graph_member(A);
        throw UnknownNameError("unknown builtin class: " + n);
    }
    case Mode::Forbidden:
        for (const auto& f : forbidden_)
            if (embeds(f, A)) return false;
        return true;
    case Mode::OrderExpansion: {
        Structure red = [&] {
            std::vector<std::vector<Tuple>> rels;
            for (int s = 0; s < static_cast<int>(sig_.symbol_count()); ++s)
                if (s != sig_.order_symbol_index()) rels.push_back(A.relation(s));
            return Structure(base_->signature(), A.size(), std::move(rels));
        }();
        if (!base_->member(red)) return false;
        return admissibility_registry().at(admissibility_)(A);
    }
    }
    return false;
}

bool ClassSpec::is_hereditary() const {
    switch (mode_) {
    case Mode::Builtin: return builtin_name_ != "even-size-sets";
    case Mode::Forbidden: return true;
    case Mode::OrderExpansion: return base_->is_hereditary(); // registry predicates restrict
    }
    return false;
}

std::optional<ClassSpec> ClassSpec::expansion_base() const {
    if (mode_ == Mode::OrderExpansion) return *base_;
    if (mode_ == Mode::Builtin) {
        if (builtin_name_ == "linear-orders") return builtin("pure-sets");
        if (builtin_name_ == "ordered-graphs") return builtin("graphs");
    }
    return std::nullopt;
}

std::vector<Structure> ClassSpec::members_of_size(int n) const {
    return enumerate_structures(sig_, n, [this](const Structure& A) { return member(A); },
                                is_hereditary());
}

bool ClassSpec::operator==(const ClassSpec& other) const {
    if (mode_ != other.mode_ || !(sig_ == other.sig_)) return false;
    switch (mode_) {
    case Mode::Builtin: return builtin_name_ == other.builtin_name_;
    case Mode::Forbidden: return forbidden_ == other.forbidden_;
    case Mode::OrderExpansion:
        return admissibility_ == other.admissibility_ && *base_ == *other.base_;
    }
    return false;
}

// --- axiom checks ----------------------------------------------------------

HpResult check_hp(const ClassSpec& K, int n) {
    if (n < 1) throw PreconditionError("check_hp: n must be >= 1");
    HpResult res;
    for (int m = 0; m <= n; ++m) {
        for (const auto& A : K.members_of_size(m)) {
            ++res.structures_checked;
            const std::uint32_t total = 1u << m;
            for (std::uint32_t mask = 0; mask < total; ++mask) {
                std::vector<int> subset;
                for (int i = 0; i < m; ++i)
                    if (mask & (1u << i)) subset.push_back(i);
                if (!K.member(induced_substructure(A, subset))) {
                    res.verdict = Verdict::Fail;
                    res.counterexample = HpCounterexample{A, subset};
                    return res;
                }
            }
        }
    }
    res.verdict = Verdict::Pass;
    return res;
}

namespace {

// Joint-embedding / amalgamation witness searches can only prove absence for
// hereditary classes: any witness restricts to one of bounded size.
bool search_exhaustive(const ClassSpec& K, int cap, int provable_bound) {
    return K.is_hereditary() && cap >= provable_bound;
}

} // namespace

JepResult check_jep(const ClassSpec& K, int n, int cap) {
    if (cap < n) throw PreconditionError("check_jep: cap must be >= n");
    JepResult res;
    std::vector<Structure> members;
    for (int m = 0; m <= n; ++m)
        for (auto& A : K.members_of_size(m)) members.push_back(std::move(A));

    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i; j < members.size(); ++j) {
            const Structure& A = members[i];
            const Structure& B = members[j];
            std::optional<Structure> witness;
            for (int m = std::max(A.size(), B.size()); m <= cap && !witness; ++m) {
                for (const auto& C : K.members_of_size(m)) {
                    if (embeds(A, C) && embeds(B, C)) {
                        witness = C;
                        break;
                    }
                }
            }
            if (witness) {
                res.witnesses.push_back(JepWitness{A, B, *witness});
            } else {
                res.verdict = search_exhaustive(K, cap, A.size() + B.size())
                                  ? Verdict::Fail
                                  : Verdict::Inconclusive;
                res.counterexample = std::make_pair(A, B);
                return res;
            }
        }
    }
    res.verdict = Verdict::Pass;
    return res;
}

namespace {

// Quotient the embeddings A -> B by Aut(B) acting on the left; amalgamation
// over f and sigma.f succeed or fail together, so one representative per
// orbit suffices and the reported counterexample stays deterministic.
std::vector<std::vector<int>> embedding_orbit_reps(const Structure& A, const Structure& B) {
    auto embs = embedding_maps(A, B);
    auto auts = embedding_maps(B, B);
    std::vector<std::vector<int>> reps;
    std::vector<bool> seen(embs.size(), false);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < embs.size(); ++i) index[embs[i]] = i;
    for (std::size_t i = 0; i < embs.size(); ++i) {
        if (seen[i]) continue;
        reps.push_back(embs[i]);
        for (const auto& sigma : auts) {
            std::vector<int> composed(embs[i].size());
            for (std::size_t p = 0; p < composed.size(); ++p)
                composed[p] = sigma[static_cast<std::size_t>(embs[i][p])];
            auto it = index.find(composed);
            if (it != index.end()) seen[it->second] = true;
        }
    }
    return reps;
}

} // namespace

ApResult check_ap(const ClassSpec& K, int n, int cap) {
    if (cap < n) throw PreconditionError("check_ap: cap must be >= n");
    ApResult res;
    std::vector<std::vector<Structure>> by_size(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) by_size[static_cast<std::size_t>(m)] = K.members_of_size(m);

    for (int ma = 0; ma <= n - 1; ++ma) {
        for (const auto& A : by_size[static_cast<std::size_t>(ma)]) {
            for (int mb = ma; mb <= n; ++mb) {
                for (const auto& B : by_size[static_cast<std::size_t>(mb)]) {
                    const auto fs = embedding_orbit_reps(A, B);
                    if (fs.empty()) continue;
                    for (int mc = ma; mc <= n; ++mc) {
                        for (const auto& C : by_size[static_cast<std::size_t>(mc)]) {
                            const auto gs = embedding_orbit_reps(A, C);
                            if (gs.empty()) continue;
                            for (const auto& f : fs) {
                                for (const auto& g : gs) {
                                    ++res.triples_checked;
                                    bool amalgamated = false;
                                    for (int md = std::max(mb, mc); md <= cap && !amalgamated; ++md) {
                                        for (const auto& D : K.members_of_size(md)) {
                                            for (const auto& r : embedding_maps(B, D)) {
                                                std::vector<int> pins(static_cast<std::size_t>(C.size()), -1);
                                                for (int a = 0; a < A.size(); ++a)
                                                    pins[static_cast<std::size_t>(g[static_cast<std::size_t>(a)])] =
                                                        r[static_cast<std::size_t>(f[static_cast<std::size_t>(a)])];
                                                if (exists_embedding_with_pins(C, D, pins)) {
                                                    amalgamated = true;
                                                    break;
                                                }
                                            }
                                            if (amalgamated) break;
                                        }
                                    }
                                    if (!amalgamated) {
                                        res.verdict =
                                            search_exhaustive(K, cap, B.size() + C.size() - A.size())
                                                ? Verdict::Fail
                                                : Verdict::Inconclusive;
                                        res.counterexample = ApCounterexample{A, B, C, f, g};
                                        return res;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    res.verdict = Verdict::Pass;
    return res;
}

// --- limit approximation -----------------------------------------------------

std::vector<Structure> one_point_extensions(const ClassSpec& K, const Structure& A) {
    std::vector<Structure> out;
    const auto& sig = K.signature();
    // reuse the enumeration wiring machinery via a local extension loop
    // (kept separate from enumerate_structures: extensions are NOT taken up
    // to isomorphism, the wiring over A matters)
    const int p = A.size();
    // per-symbol wiring choices, mirroring enumerate_structures
    std::vector<std::vector<std::vector<Tuple>>> choices;
    for (int s = 0; s < static_cast<int>(sig.symbol_count()); ++s) {
        std::vector<std::vector<Tuple>> sym_choices;
        if (s == sig.order_symbol_index()) {
            std::vector<int> asc(static_cast<std::size_t>(p));
            std::iota(asc.begin(), asc.end(), 0);
            std::sort(asc.begin(), asc.end(), [&](int a, int b) { return A.has(s, {a, b}); });
            for (int pos = 0; pos <= p; ++pos) {
                std::vector<Tuple> tuples;
                for (int i = 0; i < pos; ++i) tuples.push_back({asc[static_cast<std::size_t>(i)], p});
                for (int i = pos; i < p; ++i) tuples.push_back({p, asc[static_cast<std::size_t>(i)]});
                sym_choices.push_back(std::move(tuples));
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
                throw CapExceededError("one_point_extensions: wiring space too large");
            for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
                std::vector<Tuple> tuples;
                for (std::size_t i = 0; i < slots.size(); ++i)
                    if (mask & (1u << i)) tuples.push_back(slots[i]);
                sym_choices.push_back(std::move(tuples));
            }
        }
        choices.push_back(std::move(sym_choices));
    }
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
        std::vector<std::vector<Tuple>> rels(sig.symbol_count());
        for (std::size_t s = 0; s < rels.size(); ++s) {
            rels[s] = A.relation(static_cast<int>(s));
            const auto& add = choices[s][idx[s]];
            rels[s].insert(rels[s].end(), add.begin(), add.end());
        }
        Structure cand(sig, p + 1, std::move(rels));
        if (K.member(cand)) out.push_back(std::move(cand));
        std::size_t s = 0;
        for (; s < idx.size(); ++s) {
            if (++idx[s] < choices[s].size()) break;
            idx[s] = 0;
        }
        if (s == idx.size()) break;
    }
    return out;
}

namespace {

// Does embedding e of B's base A extend into F (image of the new point may be
// any point of F outside im(e) whose wiring to im(e) matches B's)?
bool extension_realized(const ClassSpec& K, const Structure& F, const Structure& B,
                        const std::vector<int>& e) {
    const int p = B.size() - 1; // new point index in B
    std::vector<bool> taken(static_cast<std::size_t>(F.size()), false);
    for (int img : e) taken[static_cast<std::size_t>(img)] = true;
    const auto& sig = K.signature();
    for (int q = 0; q < F.size(); ++q) {
        if (taken[static_cast<std::size_t>(q)]) continue;
        bool ok = true;
        for (int s = 0; s < static_cast<int>(sig.symbol_count()) && ok; ++s) {
            const int r = sig.arity(s);
            Tuple t(static_cast<std::size_t>(r), 0);
            std::function<bool(int, bool)> rec = [&](int pos, bool hit) -> bool {
                if (pos == r) {
                    if (!hit) return true;
                    Tuple img(t.size());
                    for (std::size_t i = 0; i < t.size(); ++i)
                        img[i] = t[i] == p ? q : e[static_cast<std::size_t>(t[i])];
                    return B.has(s, t) == F.has(s, img);
                }
                for (int v = 0; v <= p; ++v) {
                    t[static_cast<std::size_t>(pos)] = v;
                    if (!rec(pos + 1, hit || v == p)) return false;
                }
                return true;
            };
            if (!rec(0, false)) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

struct MissingExtension {
    Structure base;
    std::vector<int> embedding;
    Structure extension;
};

std::optional<MissingExtension> first_missing_extension(const ClassSpec& K, const Structure& F,
                                                        int level) {
    for (int m = 0; m <= level - 1; ++m) {
        for (const auto& A : K.members_of_size(m)) {
            const auto exts = one_point_extensions(K, A);
            if (exts.empty()) continue;
            for (const auto& e : embedding_maps(A, F)) {
                for (const auto& B : exts) {
                    if (!extension_realized(K, F, B, e))
                        return MissingExtension{A, e, B};
                }
            }
        }
    }
    return std::nullopt;
}

// Add one point to F realizing extension B over the embedded copy e of its
// base; the wiring to points outside im(e) is searched point by point in
// lexicographic pattern order (arity <= 2 symbols only, which covers every
// builtin and fixture class). Returns the enlarged structure or nullopt when
// no wiring keeps membership.
std::optional<Structure> realize_extension(const ClassSpec& K, const Structure& F,
                                           const Structure& B, const std::vector<int>& e) {
    const auto& sig = K.signature();
    for (const auto& sym : sig.symbols())
        if (sym.arity > 2)
            throw CapExceededError("build_limit_approx: arity > 2 symbols not supported in realization");

    const int p = B.size() - 1;
    const int nf = F.size(); // new point index in the enlarged structure
    std::vector<int> others;
    {
        std::vector<bool> taken(static_cast<std::size_t>(F.size()), false);
        for (int img : e) taken[static_cast<std::size_t>(img)] = true;
        for (int q = 0; q < F.size(); ++q)
            if (!taken[static_cast<std::size_t>(q)]) others.push_back(q);
    }

    // base relations: F's tuples plus the prescribed wiring to im(e)
    std::vector<std::vector<Tuple>> base_rels(sig.symbol_count());
    for (int s = 0; s < static_cast<int>(sig.symbol_count()); ++s) {
        base_rels[static_cast<std::size_t>(s)] = F.relation(s);
        const int r = sig.arity(s);
        Tuple t(static_cast<std::size_t>(r), 0);
        std::function<void(int, bool)> rec = [&](int pos, bool hit) {
            if (pos == r) {
                if (hit && B.has(s, t)) {
                    Tuple img(t.size());
                    for (std::size_t i = 0; i < t.size(); ++i)
                        img[i] = t[i] == p ? nf : e[static_cast<std::size_t>(t[i])];
                    base_rels[static_cast<std::size_t>(s)].push_back(std::move(img));
                }
                return;
            }
            for (int v = 0; v <= p; ++v) {
                t[static_cast<std::size_t>(pos)] = v;
                rec(pos + 1, hit || v == p);
            }
        };
        rec(0, false);
    }

    // per-(other point) wiring patterns across binary symbols: for each binary
    // symbol two bits, (nf,q) and (q,nf), enumerated in lex order
    std::vector<int> binary_syms;
    for (int s = 0; s < static_cast<int>(sig.symbol_count()); ++s)
        if (sig.arity(s) == 2) binary_syms.push_back(s);
    const int patterns_per_point = 1 << (2 * static_cast<int>(binary_syms.size()));

    const bool hereditary = K.is_hereditary();

    // induced structure on `subset` built straight from the tuple lists: the
    // full structure cannot be constructed mid-search (its order relation is
    // not yet total), the restriction to decided points can
    auto induced_from_rels = [&sig](int total, const std::vector<std::vector<Tuple>>& rels,
                                    std::vector<int> subset) -> Structure {
        std::sort(subset.begin(), subset.end());
        std::vector<int> new_index(static_cast<std::size_t>(total), -1);
        for (std::size_t i = 0; i < subset.size(); ++i)
            new_index[static_cast<std::size_t>(subset[i])] = static_cast<int>(i);
        std::vector<std::vector<Tuple>> sub(rels.size());
        for (std::size_t s = 0; s < rels.size(); ++s) {
            for (const auto& t : rels[s]) {
                Tuple mapped;
                mapped.reserve(t.size());
                bool inside = true;
                for (int v : t) {
                    if (new_index[static_cast<std::size_t>(v)] < 0) { inside = false; break; }
                    mapped.push_back(new_index[static_cast<std::size_t>(v)]);
                }
                if (inside) sub[s].push_back(std::move(mapped));
            }
        }
        return Structure(sig, static_cast<int>(subset.size()), std::move(sub));
    };

    std::function<std::optional<Structure>(std::size_t, std::vector<std::vector<Tuple>>&)> rec =
        [&](std::size_t oi, std::vector<std::vector<Tuple>>& rels) -> std::optional<Structure> {
        if (oi == others.size()) {
            try {
                Structure cand(sig, F.size() + 1, rels);
                if (K.member(cand)) return cand;
            } catch (const Error&) {
                // invalid wiring pattern (e.g. order bits violating totality)
            }
            return std::nullopt;
        }
        const int q = others[oi];
        for (int pat = 0; pat < patterns_per_point; ++pat) {
            auto saved = rels;
            int bit = 0;
            for (int s : binary_syms) {
                if (pat & (1 << bit)) rels[static_cast<std::size_t>(s)].push_back({nf, q});
                if (pat & (1 << (bit + 1))) rels[static_cast<std::size_t>(s)].push_back({q, nf});
                bit += 2;
            }
            bool viable = true;
            if (hereditary) {
                std::vector<int> decided;
                for (int img : e) decided.push_back(img);
                for (std::size_t j = 0; j <= oi; ++j) decided.push_back(others[j]);
                decided.push_back(nf);
                try {
                    viable = K.member(induced_from_rels(F.size() + 1, rels, decided));
                } catch (const Error&) {
                    viable = false; // pattern already contradicts the order axioms
                }
            }
            if (viable) {
                auto got = rec(oi + 1, rels);
                if (got) return got;
            }
            rels = std::move(saved);
        }
        return std::nullopt;
    };

    // unary tuples on the new point are already prescribed by B via base_rels
    return rec(0, base_rels);
}

} // namespace

LimitBuildResult build_limit_approx(const ClassSpec& K, int level, int cap) {
    if (level < 1) throw PreconditionError("build_limit_approx: level must be >= 1");
    if (cap < 1) throw PreconditionError("build_limit_approx: cap must be >= 1");
    Structure F = Structure::empty(K.signature());
    while (true) {
        auto missing = first_missing_extension(K, F, level);
        if (!missing) return {Verdict::Closed, {level, F}, ""};
        if (F.size() + 1 > cap)
            return {Verdict::CapExceeded, {level, F},
                    "size cap reached before extension closure"};
        auto enlarged = realize_extension(K, F, missing->extension, missing->embedding);
        if (!enlarged)
            return {Verdict::CapExceeded, {level, F},
                    "missing extension cannot be realized (amalgamation failure)"};
        F = std::move(*enlarged);
    }
}

bool has_extension_property(const ClassSpec& K, const Structure& carrier, int level) {
    return !first_missing_extension(K, carrier, level).has_value();
}

std::vector<Structure> age(const Structure& F, int n) {
    std::map<std::vector<std::uint8_t>, Structure> classes;
    const int bound = std::min(n, F.size());
    for (int k = 0; k <= bound; ++k) {
        std::vector<int> comb(static_cast<std::size_t>(k));
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            Structure sub = canonicalize(induced_substructure(F, comb));
            classes.try_emplace(canonical_form(sub), std::move(sub));
            if (k == 0) break;
            int i = k - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == F.size() - k + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    std::vector<Structure> out;
    for (auto& [key, st] : classes) out.push_back(std::move(st));
    return out;
}

} // namespace ramseykit

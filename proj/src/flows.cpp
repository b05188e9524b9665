#include "ramseykit/flows.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>

namespace ramseykit {

Permutation identity_permutation(int degree) {
    Permutation p(static_cast<std::size_t>(degree));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation compose(const Permutation& g, const Permutation& h) {
    if (g.size() != h.size()) throw Error("compose: degree mismatch");
    Permutation out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        out[i] = g[static_cast<std::size_t>(h[i])];
    return out;
}

Permutation inverse(const Permutation& g) {
    Permutation out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        out[static_cast<std::size_t>(g[i])] = static_cast<int>(i);
    return out;
}

namespace {

void validate_permutation(const Permutation& p, int degree, const char* what) {
    if (static_cast<int>(p.size()) != degree) throw Error(std::string(what) + ": degree mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    for (int v : p) {
        if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
            throw Error(std::string(what) + ": not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

} // namespace

// --- PermGroup -----------------------------------------------------------------

struct PermGroup::Data {
    int degree = 1;
    std::vector<Permutation> generators;
    std::uint64_t element_cap = kDefaultElementCap;

    std::mutex mat_mutex;
    bool materialized = false;
    std::vector<Permutation> elements; // sorted lex
    std::map<Permutation, int> index;
    int identity_idx = -1;
    std::vector<int> inverse_idx;

    void materialize() {
        std::lock_guard<std::mutex> lock(mat_mutex);
        if (materialized) return;
        std::set<Permutation> closed;
        std::queue<Permutation> pending;
        Permutation id = identity_permutation(degree);
        closed.insert(id);
        pending.push(id);
        while (!pending.empty()) {
            Permutation cur = std::move(pending.front());
            pending.pop();
            for (const auto& g : generators) {
                Permutation nxt = compose(g, cur);
                if (closed.insert(nxt).second) {
                    if (closed.size() > element_cap)
                        throw CapExceededError("group element cap exceeded (" +
                                               std::to_string(element_cap) + ")");
                    pending.push(std::move(nxt));
                }
            }
        }
        elements.assign(closed.begin(), closed.end()); // std::set iterates in lex order
        for (std::size_t i = 0; i < elements.size(); ++i)
            index[elements[i]] = static_cast<int>(i);
        identity_idx = index.at(id);
        inverse_idx.resize(elements.size());
        for (std::size_t i = 0; i < elements.size(); ++i)
            inverse_idx[i] = index.at(inverse(elements[i]));
        materialized = true;
    }
};

PermGroup PermGroup::from_generators(int degree, std::vector<Permutation> generators,
                                     std::uint64_t element_cap) {
    if (degree < 1) throw Error("group degree must be >= 1");
    for (const auto& g : generators) validate_permutation(g, degree, "generator");
    PermGroup grp;
    grp.data_ = std::make_shared<Data>();
    grp.data_->degree = degree;
    grp.data_->generators = std::move(generators);
    grp.data_->element_cap = element_cap;
    return grp;
}

namespace {

Permutation cycle(int degree, std::vector<int> pts) {
    Permutation p = identity_permutation(degree);
    for (std::size_t i = 0; i < pts.size(); ++i)
        p[static_cast<std::size_t>(pts[i])] = pts[(i + 1) % pts.size()];
    return p;
}

} // namespace

PermGroup PermGroup::named(const std::string& name) {
    if (name == "t1") return from_generators(1, {});
    if (name.size() == 2 && name[0] == 'c' && name[1] >= '2' && name[1] <= '8') {
        const int n = name[1] - '0';
        std::vector<int> pts(static_cast<std::size_t>(n));
        std::iota(pts.begin(), pts.end(), 0);
        return from_generators(n, {cycle(n, pts)});
    }
    if (name == "s3") return from_generators(3, {cycle(3, {0, 1}), cycle(3, {0, 1, 2})});
    if (name == "d4") return from_generators(4, {cycle(4, {0, 1, 2, 3}), cycle(4, {1, 3})});
    if (name == "a4") return from_generators(4, {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})});
    throw UnknownNameError("unknown group fixture: " + name);
}

const std::vector<std::string>& PermGroup::fixture_names() {
    static const std::vector<std::string> names = {"t1", "c2", "c3", "c4", "c5", "c6",
                                                   "c7", "c8", "s3", "d4", "a4"};
    return names;
}

int PermGroup::degree() const { return data_->degree; }
const std::vector<Permutation>& PermGroup::generators() const { return data_->generators; }
std::uint64_t PermGroup::element_cap() const { return data_->element_cap; }

const std::vector<Permutation>& PermGroup::elements() const {
    data_->materialize();
    return data_->elements;
}

int PermGroup::identity_index() const {
    data_->materialize();
    return data_->identity_idx;
}

int PermGroup::element_index(const Permutation& p) const {
    data_->materialize();
    auto it = data_->index.find(p);
    return it == data_->index.end() ? -1 : it->second;
}

int PermGroup::compose_index(int g, int h) const {
    data_->materialize();
    return data_->index.at(compose(data_->elements[static_cast<std::size_t>(g)],
                                   data_->elements[static_cast<std::size_t>(h)]));
}

int PermGroup::inverse_index(int g) const {
    data_->materialize();
    return data_->inverse_idx[static_cast<std::size_t>(g)];
}

bool PermGroup::same_group(const PermGroup& other) const {
    return data_ == other.data_ ||
           (data_->degree == other.data_->degree && data_->generators == other.data_->generators);
}

// --- FiniteFlow ----------------------------------------------------------------

struct FiniteFlow::Data {
    PermGroup group;
    int points = 0;
    std::vector<std::vector<int>> generator_actions; // per generator, point image
    std::vector<std::string> labels;
    std::vector<LinearOrdering> payloads;

    std::mutex mat_mutex;
    bool materialized = false;
    std::vector<std::vector<int>> element_actions; // aligned with group.elements()

    void materialize() {
        std::lock_guard<std::mutex> lock(mat_mutex);
        if (materialized) return;
        const auto& elems = group.elements();
        // breadth-first closure pairing each element with its point action
        std::map<Permutation, std::vector<int>> act;
        std::queue<Permutation> pending;
        Permutation id = identity_permutation(group.degree());
        std::vector<int> id_act(static_cast<std::size_t>(points));
        std::iota(id_act.begin(), id_act.end(), 0);
        act[id] = id_act;
        pending.push(id);
        while (!pending.empty()) {
            Permutation cur = std::move(pending.front());
            pending.pop();
            const auto cur_act = act.at(cur);
            for (std::size_t gi = 0; gi < group.generators().size(); ++gi) {
                Permutation nxt = compose(group.generators()[gi], cur);
                if (act.count(nxt)) continue;
                std::vector<int> nxt_act(static_cast<std::size_t>(points));
                for (int p = 0; p < points; ++p)
                    nxt_act[static_cast<std::size_t>(p)] =
                        generator_actions[gi][static_cast<std::size_t>(cur_act[static_cast<std::size_t>(p)])];
                act[std::move(nxt)] = std::move(nxt_act);
                pending.push(compose(group.generators()[gi], cur));
            }
        }
        element_actions.reserve(elems.size());
        for (const auto& e : elems) element_actions.push_back(act.at(e));
        materialized = true;
    }
};

FiniteFlow FiniteFlow::from_generator_actions(PermGroup group,
                                              std::vector<std::vector<int>> generator_actions,
                                               std::vector<std::string> point_labels) {
    if (generator_actions.size() != group.generators().size())
        throw Error("flow: one action per generator required");
    FiniteFlow flow;
    flow.data_ = std::make_shared<Data>();
    int pts = point_labels.empty()
                  ? (generator_actions.empty() ? 0 : static_cast<int>(generator_actions[0].size()))
                  : static_cast<int>(point_labels.size());
    for (const auto& a : generator_actions) {
        validate_permutation(a, static_cast<int>(a.size()), "flow action");
        if (static_cast<int>(a.size()) != pts) throw Error("flow: action size mismatch");
    }
    flow.data_->group = std::move(group);
    flow.data_->points = pts;
    flow.data_->generator_actions = std::move(generator_actions);
    if (point_labels.empty()) {
        for (int p = 0; p < pts; ++p) flow.data_->labels.push_back(std::to_string(p));
    } else {
        flow.data_->labels = std::move(point_labels);
    }
    return flow;
}

FiniteFlow FiniteFlow::lo_flow(int n, std::uint64_t point_cap, std::uint64_t element_cap) {
    if (n < 1) throw PreconditionError("lo_flow: n must be >= 1");
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    if (fact > point_cap)
        throw CapExceededError("lo_flow: n! exceeds the point cap (" + std::to_string(point_cap) + ")");

    std::vector<Permutation> gens;
    for (int i = 0; i + 1 < n; ++i) {
        Permutation t = identity_permutation(n);
        std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i + 1)]);
        gens.push_back(std::move(t));
    }
    PermGroup sn = PermGroup::from_generators(n, gens, element_cap);

    const auto all = LinearOrdering::all(n); // lex order of ascending arrays
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < all.size(); ++i) index[all[i].ascending()] = static_cast<int>(i);

    std::vector<std::vector<int>> actions;
    for (const auto& g : gens) {
        std::vector<int> a(all.size());
        for (std::size_t i = 0; i < all.size(); ++i) {
            // sigma.o has ascending array sigma o asc
            std::vector<int> moved(all[i].ascending().size());
            for (std::size_t k = 0; k < moved.size(); ++k)
                moved[k] = g[static_cast<std::size_t>(all[i].ascending()[k])];
            a[i] = index.at(moved);
        }
        actions.push_back(std::move(a));
    }
    std::vector<std::string> labels;
    for (const auto& o : all) {
        std::string s;
        for (std::size_t k = 0; k < o.ascending().size(); ++k) {
            if (k) s += "<";
            s += std::to_string(o.ascending()[k]);
        }
        labels.push_back(std::move(s));
    }
    FiniteFlow flow = from_generator_actions(std::move(sn), std::move(actions), std::move(labels));
    flow.data_->payloads = all;
    return flow;
}

FiniteFlow FiniteFlow::regular(const PermGroup& G) {
    const auto& elems = G.elements();
    std::vector<std::vector<int>> actions;
    for (const auto& g : G.generators()) {
        std::vector<int> a(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i)
            a[i] = G.element_index(compose(g, elems[i]));
        actions.push_back(std::move(a));
    }
    std::vector<std::string> labels;
    for (const auto& e : elems) {
        std::string s = "[";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e[i]);
        }
        s += "]";
        labels.push_back(std::move(s));
    }
    return from_generator_actions(G, std::move(actions), std::move(labels));
}

namespace {

std::vector<int> subgroup_closure(const PermGroup& G, std::vector<int> seed) {
    std::set<int> closed;
    closed.insert(G.identity_index());
    std::queue<int> pending;
    pending.push(G.identity_index());
    for (int s : seed)
        if (closed.insert(s).second) pending.push(s);
    while (!pending.empty()) {
        int cur = pending.front();
        pending.pop();
        for (int s : seed) {
            int nxt = G.compose_index(s, cur);
            if (closed.insert(nxt).second) pending.push(nxt);
        }
    }
    return {closed.begin(), closed.end()};
}

} // namespace

FiniteFlow FiniteFlow::coset(const PermGroup& G, const std::vector<int>& subgroup_elements) {
    std::vector<int> H = subgroup_closure(G, subgroup_elements);
    const std::size_t n = G.order();
    // left cosets gH, keyed by sorted element-index sets
    std::map<std::vector<int>, int> coset_index;
    std::vector<std::vector<int>> cosets;
    std::vector<int> point_of_element(n);
    for (std::size_t g = 0; g < n; ++g) {
        std::vector<int> coset;
        coset.reserve(H.size());
        for (int h : H) coset.push_back(G.compose_index(static_cast<int>(g), h));
        std::sort(coset.begin(), coset.end());
        auto [it, inserted] = coset_index.try_emplace(coset, static_cast<int>(cosets.size()));
        if (inserted) cosets.push_back(coset);
        point_of_element[g] = it->second;
    }
    std::vector<std::vector<int>> actions;
    for (const auto& gen : G.generators()) {
        const int gi = G.element_index(gen);
        std::vector<int> a(cosets.size());
        for (std::size_t c = 0; c < cosets.size(); ++c)
            a[c] = point_of_element[static_cast<std::size_t>(G.compose_index(gi, cosets[c][0]))];
        actions.push_back(std::move(a));
    }
    std::vector<std::string> labels;
    for (const auto& c : cosets) labels.push_back("coset(min=" + std::to_string(c[0]) + ")");
    return from_generator_actions(G, std::move(actions), std::move(labels));
}

FiniteFlow FiniteFlow::one_point(const PermGroup& G) {
    std::vector<std::vector<int>> actions(G.generators().size(), std::vector<int>{0});
    return from_generator_actions(G, std::move(actions), {"*"});
}

FiniteFlow FiniteFlow::disjoint_union(const FiniteFlow& a, const FiniteFlow& b) {
    if (!a.group().same_group(b.group())) throw PreconditionError("disjoint_union: groups differ");
    std::vector<std::vector<int>> actions;
    for (std::size_t g = 0; g < a.group().generators().size(); ++g) {
        std::vector<int> act;
        for (int p = 0; p < a.point_count(); ++p) act.push_back(a.act_generator(static_cast<int>(g), p));
        for (int p = 0; p < b.point_count(); ++p)
            act.push_back(a.point_count() + b.act_generator(static_cast<int>(g), p));
        actions.push_back(std::move(act));
    }
    std::vector<std::string> labels;
    for (const auto& l : a.point_labels()) labels.push_back("L:" + l);
    for (const auto& l : b.point_labels()) labels.push_back("R:" + l);
    return from_generator_actions(a.group(), std::move(actions), std::move(labels));
}

const PermGroup& FiniteFlow::group() const { return data_->group; }
int FiniteFlow::point_count() const { return data_->points; }
const std::vector<std::string>& FiniteFlow::point_labels() const { return data_->labels; }
const std::vector<LinearOrdering>& FiniteFlow::ordering_payloads() const { return data_->payloads; }

int FiniteFlow::act_generator(int gen, int point) const {
    return data_->generator_actions.at(static_cast<std::size_t>(gen)).at(static_cast<std::size_t>(point));
}

const std::vector<std::vector<int>>& FiniteFlow::element_actions() const {
    data_->materialize();
    return data_->element_actions;
}

// --- operations ------------------------------------------------------------------

std::vector<std::vector<int>> orbits(const FiniteFlow& flow) {
    const int n = flow.point_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < n; ++start) {
        if (comp[static_cast<std::size_t>(start)] != -1) continue;
        const int id = static_cast<int>(out.size());
        std::vector<int> orbit;
        std::queue<int> pending;
        comp[static_cast<std::size_t>(start)] = id;
        pending.push(start);
        while (!pending.empty()) {
            int p = pending.front();
            pending.pop();
            orbit.push_back(p);
            for (std::size_t g = 0; g < flow.group().generators().size(); ++g) {
                int q = flow.act_generator(static_cast<int>(g), p);
                if (comp[static_cast<std::size_t>(q)] == -1) {
                    comp[static_cast<std::size_t>(q)] = id;
                    pending.push(q);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

namespace {

std::vector<int> generator_indices_in_group(const FiniteFlow& flow,
                                            const std::vector<Permutation>& gens) {
    std::vector<int> idx;
    for (const auto& g : gens) {
        int i = flow.group().element_index(g);
        if (i < 0) throw PreconditionError("subgroup generator is not an element of the flow's group");
        idx.push_back(i);
    }
    return idx;
}

} // namespace

std::vector<int> fix_set(const FiniteFlow& flow, const std::vector<Permutation>& subgroup_gens) {
    const auto idx = generator_indices_in_group(flow, subgroup_gens);
    const auto& acts = flow.element_actions();
    std::vector<int> fixed;
    for (int p = 0; p < flow.point_count(); ++p) {
        bool ok = true;
        for (int i : idx)
            if (acts[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] != p) { ok = false; break; }
        if (ok) fixed.push_back(p);
    }
    return fixed;
}

std::vector<Permutation> stabilizer(const FiniteFlow& flow, int point) {
    if (point < 0 || point >= flow.point_count()) throw PreconditionError("stabilizer: point out of range");
    const auto& acts = flow.element_actions();
    std::vector<Permutation> out;
    for (std::size_t i = 0; i < acts.size(); ++i)
        if (acts[i][static_cast<std::size_t>(point)] == point)
            out.push_back(flow.group().elements()[i]);
    return out;
}

bool is_minimal(const FiniteFlow& flow) { return orbits(flow).size() == 1; }

bool transitive_wrt(const FiniteFlow& flow, const std::vector<int>& Y) {
    if (Y.empty()) return true;
    const auto parts = orbits(flow);
    std::vector<int> orbit_of(static_cast<std::size_t>(flow.point_count()));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int p : parts[i]) orbit_of[static_cast<std::size_t>(p)] = static_cast<int>(i);
    for (int y : Y) {
        if (y < 0 || y >= flow.point_count()) throw PreconditionError("transitive_wrt: point out of range");
        if (parts[static_cast<std::size_t>(orbit_of[static_cast<std::size_t>(y)])].size() !=
            static_cast<std::size_t>(flow.point_count()))
            return false;
    }
    return true;
}

std::optional<std::vector<int>> is_factor(const FiniteFlow& X, const FiniteFlow& Y) {
    if (!X.group().same_group(Y.group())) throw PreconditionError("is_factor: groups differ");
    const int nx = X.point_count(), ny = Y.point_count();
    const std::size_t gens = X.group().generators().size();
    std::vector<int> phi(static_cast<std::size_t>(nx), -1);

    // assign phi[x] = y, propagate equivariance along generators; false on conflict
    std::function<bool(int, int, std::vector<std::pair<int, int>>&)> assign =
        [&](int x, int y, std::vector<std::pair<int, int>>& trail) -> bool {
        std::queue<std::pair<int, int>> pending;
        pending.emplace(x, y);
        while (!pending.empty()) {
            auto [cx, cy] = pending.front();
            pending.pop();
            if (phi[static_cast<std::size_t>(cx)] != -1) {
                if (phi[static_cast<std::size_t>(cx)] != cy) return false;
                continue;
            }
            phi[static_cast<std::size_t>(cx)] = cy;
            trail.emplace_back(cx, cy);
            for (std::size_t g = 0; g < gens; ++g)
                pending.emplace(X.act_generator(static_cast<int>(g), cx),
                                Y.act_generator(static_cast<int>(g), cy));
        }
        return true;
    };

    std::function<bool(int)> search = [&](int from) -> bool {
        int x = -1;
        for (int i = from; i < nx; ++i)
            if (phi[static_cast<std::size_t>(i)] == -1) { x = i; break; }
        if (x == -1) {
            std::vector<bool> hit(static_cast<std::size_t>(ny), false);
            for (int v : phi) hit[static_cast<std::size_t>(v)] = true;
            return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
        }
        for (int y = 0; y < ny; ++y) {
            std::vector<std::pair<int, int>> trail;
            if (assign(x, y, trail) && search(x + 1)) return true;
            for (auto& [tx, ty] : trail) phi[static_cast<std::size_t>(tx)] = -1;
        }
        return false;
    };

    if (search(0)) return phi;
    return std::nullopt;
}

// --- subgroups -------------------------------------------------------------------

std::vector<SubgroupInfo> subgroups_up_to_conjugacy(const PermGroup& G, std::uint64_t order_cap) {
    if (G.order() > order_cap)
        throw CapExceededError("subgroup enumeration cap exceeded: |G| = " + std::to_string(G.order()));
    const int n = static_cast<int>(G.order());

    std::set<std::vector<int>> all;
    std::queue<std::vector<int>> pending;
    std::vector<int> trivial = {G.identity_index()};
    all.insert(trivial);
    pending.push(trivial);
    while (!pending.empty()) {
        auto sub = std::move(pending.front());
        pending.pop();
        std::set<int> in(sub.begin(), sub.end());
        for (int e = 0; e < n; ++e) {
            if (in.count(e)) continue;
            auto seed = sub;
            seed.push_back(e);
            auto closed = subgroup_closure(G, seed);
            if (all.insert(closed).second) pending.push(closed);
        }
    }

    // conjugacy classes, represented by the lex-least element set
    std::set<std::vector<int>> seen;
    std::vector<SubgroupInfo> reps;
    for (const auto& sub : all) {
        if (seen.count(sub)) continue;
        std::vector<std::vector<int>> orbit;
        for (int g = 0; g < n; ++g) {
            std::vector<int> conj;
            conj.reserve(sub.size());
            const int ginv = G.inverse_index(g);
            for (int h : sub) conj.push_back(G.compose_index(G.compose_index(g, h), ginv));
            std::sort(conj.begin(), conj.end());
            orbit.push_back(std::move(conj));
        }
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        for (const auto& c : orbit) seen.insert(c);
        SubgroupInfo info;
        info.element_indices = orbit.front();
        for (int i : info.element_indices)
            info.elements.push_back(G.elements()[static_cast<std::size_t>(i)]);
        reps.push_back(std::move(info));
    }
    return reps;
}

UniversalityResult is_universal_finite(const FiniteFlow& X, std::uint64_t subgroup_order_cap) {
    UniversalityResult res;
    std::vector<SubgroupInfo> classes;
    try {
        classes = subgroups_up_to_conjugacy(X.group(), subgroup_order_cap);
    } catch (const CapExceededError&) {
        res.verdict = Verdict::Inconclusive;
        return res;
    }
    for (const auto& H : classes) {
        ++res.subgroup_classes_checked;
        FiniteFlow quotient = FiniteFlow::coset(X.group(), H.element_indices);
        if (!is_factor(X, quotient)) {
            res.verdict = Verdict::False;
            res.failing_subgroup = H;
            return res;
        }
    }
    res.verdict = Verdict::True;
    return res;
}

RelEaResult rel_ea_finite(const PermGroup& G, const std::vector<Permutation>& h_gens,
                          std::uint64_t subgroup_order_cap) {
    RelEaResult res;
    FiniteFlow reg = FiniteFlow::regular(G);

    // criterion (a): <H>-fixed point in the regular flow
    const auto fixed = fix_set(reg, h_gens);
    res.regular_criterion = !fixed.empty();
    if (!fixed.empty())
        res.fixed_point = G.elements()[static_cast<std::size_t>(fixed.front())];

    // criterion (b): <H>-fixed point in every transitive flow (coset flows,
    // one per subgroup class), computed independently
    res.coset_criterion = true;
    const auto classes = subgroups_up_to_conjugacy(G, subgroup_order_cap);
    for (const auto& K : classes) {
        ++res.flows_checked;
        FiniteFlow quotient = FiniteFlow::coset(G, K.element_indices);
        if (fix_set(quotient, h_gens).empty()) {
            res.coset_criterion = false;
            res.failing_flow_subgroup = K;
            break;
        }
    }

    if (res.regular_criterion != res.coset_criterion)
        throw AuditMismatchError("rel_ea_finite: regular-flow and coset-flow criteria disagree");

    res.verdict = res.regular_criterion ? Verdict::True : Verdict::False;
    return res;
}

MinimalityAuditResult audit_minimality_equivalence(const FiniteFlow& flow, int point,
                                                   std::uint64_t subgroup_order_cap) {
    MinimalityAuditResult res;
    res.universality = is_universal_finite(flow, subgroup_order_cap).verdict;
    const auto stab = stabilizer(flow, point);
    res.stabilizer_order = static_cast<int>(stab.size());
    const auto fixed = fix_set(flow, stab);
    res.fix_size = static_cast<int>(fixed.size());
    res.minimal = is_minimal(flow);
    res.fix_transitive = transitive_wrt(flow, fixed);
    res.verdict = res.minimal == res.fix_transitive ? Verdict::Pass : Verdict::Fail;
    return res;
}

MaximalFixResult maximal_fixing_extension(const FiniteFlow& flow,
                                          const std::vector<Permutation>& h_gens) {
    MaximalFixResult res;
    const auto base_fix = fix_set(flow, h_gens);
    if (base_fix.empty())
        throw PreconditionError("maximal_fixing_extension: Fix(<H>) is empty");
    res.fix_size = static_cast<int>(base_fix.size());

    const auto h_closure = subgroup_closure(flow.group(), generator_indices_in_group(flow, h_gens));
    std::set<int> in_h(h_closure.begin(), h_closure.end());
    const auto& acts = flow.element_actions();

    for (std::size_t g = 0; g < flow.group().order(); ++g) {
        if (in_h.count(static_cast<int>(g))) continue;
        bool fixes_some = false;
        for (int p : base_fix)
            if (acts[g][static_cast<std::size_t>(p)] == p) { fixes_some = true; break; }
        if (fixes_some) {
            res.verdict = Verdict::Extendable;
            res.extension_element = flow.group().elements()[g];
            return res;
        }
    }
    res.verdict = Verdict::Maximal;
    return res;
}

} // namespace ramseykit

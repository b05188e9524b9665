#include "ramseykit/io.hpp"

#include <fstream>
#include <sstream>

namespace ramseykit {

namespace {

const json& require(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string(what) + ": missing field '" + key + "'");
    return *it;
}

} // namespace

// --- signatures ------------------------------------------------------------------

json signature_to_json(const Signature& sig) {
    json syms = json::array();
    for (const auto& s : sig.symbols()) syms.push_back(json{{"name", s.name}, {"arity", s.arity}});
    json j;
    j["signature"] = std::move(syms);
    if (sig.order_symbol()) j["order_symbol"] = *sig.order_symbol();
    return j;
}

Signature signature_from_json(const json& j) {
    std::vector<SymbolDecl> syms;
    for (const auto& s : require(j, "signature", "signature")) {
        syms.push_back(SymbolDecl{require(s, "name", "signature symbol").get<std::string>(),
                                  require(s, "arity", "signature symbol").get<int>()});
    }
    std::optional<std::string> order;
    if (j.contains("order_symbol") && !j["order_symbol"].is_null())
        order = j["order_symbol"].get<std::string>();
    try {
        return Signature(std::move(syms), std::move(order));
    } catch (const Error& e) {
        throw ParseError(std::string("signature: ") + e.what());
    }
}

// --- structures -------------------------------------------------------------------

json structure_to_json(const Structure& A) {
    json j = signature_to_json(A.signature());
    j["size"] = A.size();
    json rels = json::object();
    for (int s = 0; s < static_cast<int>(A.signature().symbol_count()); ++s) {
        json tuples = json::array();
        for (const auto& t : A.relation(s)) tuples.push_back(t);
        rels[A.signature().name(s)] = std::move(tuples);
    }
    j["relations"] = std::move(rels);
    return j;
}

Structure structure_from_json(const json& j) {
    Signature sig = signature_from_json(j);
    const int size = require(j, "size", "structure").get<int>();
    std::vector<std::vector<Tuple>> rels(sig.symbol_count());
    if (j.contains("relations")) {
        for (const auto& [name, tuples] : j["relations"].items()) {
            auto idx = sig.index_of(name);
            if (!idx) throw ParseError("structure: relation for undeclared symbol '" + name + "'");
            for (const auto& t : tuples) rels[static_cast<std::size_t>(*idx)].push_back(t.get<Tuple>());
        }
    }
    try {
        return Structure(std::move(sig), size, std::move(rels));
    } catch (const Error& e) {
        throw ParseError(std::string("structure: ") + e.what());
    }
}

// --- class specs -------------------------------------------------------------------

json classspec_to_json(const ClassSpec& K) {
    json j;
    switch (K.mode()) {
    case ClassSpec::Mode::Builtin:
        j["mode"] = "builtin";
        j["builtin_name"] = K.builtin_name();
        break;
    case ClassSpec::Mode::Forbidden: {
        j["mode"] = "forbidden";
        json sig = signature_to_json(K.signature());
        j["signature"] = sig["signature"];
        if (sig.contains("order_symbol")) j["order_symbol"] = sig["order_symbol"];
        json forb = json::array();
        for (const auto& f : K.forbidden_list()) forb.push_back(structure_to_json(f));
        j["forbidden"] = std::move(forb);
        break;
    }
    case ClassSpec::Mode::OrderExpansion:
        j["mode"] = "order_expansion";
        j["base"] = classspec_to_json(*K.expansion_base());
        j["admissibility"] = K.admissibility();
        break;
    }
    return j;
}

ClassSpec classspec_from_json(const json& j) {
    const std::string mode = require(j, "mode", "class spec").get<std::string>();
    if (mode == "builtin")
        return ClassSpec::builtin(require(j, "builtin_name", "class spec").get<std::string>());
    if (mode == "forbidden") {
        Signature sig = signature_from_json(j);
        std::vector<Structure> forb;
        for (const auto& f : require(j, "forbidden", "class spec")) forb.push_back(structure_from_json(f));
        try {
            return ClassSpec::forbidden(std::move(sig), std::move(forb));
        } catch (const Error& e) {
            throw ParseError(std::string("class spec: ") + e.what());
        }
    }
    if (mode == "order_expansion") {
        ClassSpec base = classspec_from_json(require(j, "base", "class spec"));
        return ClassSpec::order_expansion(std::move(base),
                                          require(j, "admissibility", "class spec").get<std::string>());
    }
    throw ParseError("class spec: unknown mode '" + mode + "'");
}

// --- orderings ---------------------------------------------------------------------

json ordering_to_json(const LinearOrdering& o) { return json(o.ascending()); }

LinearOrdering ordering_from_json(const json& j) {
    try {
        return LinearOrdering(j.get<std::vector<int>>());
    } catch (const Error& e) {
        throw ParseError(std::string("ordering: ") + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("ordering: ") + e.what());
    }
}

json ordering_set_to_json(const OrderingSet& s) {
    json j;
    j["size"] = s.size;
    j["role"] = s.role;
    json os = json::array();
    for (const auto& o : s.orderings) os.push_back(ordering_to_json(o));
    j["orderings"] = std::move(os);
    return j;
}

OrderingSet ordering_set_from_json(const json& j) {
    OrderingSet s;
    s.size = require(j, "size", "ordering set").get<int>();
    s.role = require(j, "role", "ordering set").get<std::string>();
    for (const auto& o : require(j, "orderings", "ordering set"))
        s.orderings.push_back(ordering_from_json(o));
    return s;
}

// --- permutations / groups / flows -----------------------------------------------------

json permutation_to_json(const Permutation& p) { return json(p); }

Permutation permutation_from_json(const json& j) {
    try {
        return j.get<Permutation>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("permutation: ") + e.what());
    }
}

json group_to_json(const PermGroup& G) {
    json j;
    j["degree"] = G.degree();
    json gens = json::array();
    for (const auto& g : G.generators()) gens.push_back(permutation_to_json(g));
    j["generators"] = std::move(gens);
    j["element_cap"] = G.element_cap();
    return j;
}

PermGroup group_from_json(const json& j) {
    const int degree = require(j, "degree", "group").get<int>();
    std::vector<Permutation> gens;
    for (const auto& g : require(j, "generators", "group")) gens.push_back(permutation_from_json(g));
    const std::uint64_t cap =
        j.contains("element_cap") ? j["element_cap"].get<std::uint64_t>() : kDefaultElementCap;
    try {
        return PermGroup::from_generators(degree, std::move(gens), cap);
    } catch (const Error& e) {
        throw ParseError(std::string("group: ") + e.what());
    }
}

json flow_to_json(const FiniteFlow& flow) {
    json j;
    j["group"] = group_to_json(flow.group());
    j["points"] = json::array();
    for (int p = 0; p < flow.point_count(); ++p) {
        json pt;
        pt["id"] = p;
        pt["label"] = flow.point_labels()[static_cast<std::size_t>(p)];
        if (!flow.ordering_payloads().empty())
            pt["ordering"] = ordering_to_json(flow.ordering_payloads()[static_cast<std::size_t>(p)]);
        j["points"].push_back(std::move(pt));
    }
    json actions = json::array();
    for (std::size_t g = 0; g < flow.group().generators().size(); ++g) {
        std::vector<int> a;
        for (int p = 0; p < flow.point_count(); ++p) a.push_back(flow.act_generator(static_cast<int>(g), p));
        actions.push_back(a);
    }
    j["generator_actions"] = std::move(actions);
    return j;
}

FiniteFlow flow_from_json(const json& j) {
    PermGroup G = group_from_json(require(j, "group", "flow"));
    std::vector<std::string> labels;
    for (const auto& pt : require(j, "points", "flow"))
        labels.push_back(require(pt, "label", "flow point").get<std::string>());
    std::vector<std::vector<int>> actions;
    for (const auto& a : require(j, "generator_actions", "flow"))
        actions.push_back(a.get<std::vector<int>>());
    try {
        return FiniteFlow::from_generator_actions(std::move(G), std::move(actions), std::move(labels));
    } catch (const Error& e) {
        throw ParseError(std::string("flow: ") + e.what());
    }
}

// --- file handling -----------------------------------------------------------------------

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(what + ": " + e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

// --- reports ------------------------------------------------------------------------------

json make_report(const std::string& operation, json instance, json caps, Verdict verdict,
                 json payload, const std::vector<std::string>& notes) {
    json r;
    r["schema_version"] = kReportSchemaVersion;
    r["operation"] = operation;
    r["instance"] = std::move(instance);
    r["caps"] = std::move(caps);
    r["verdict"] = to_string(verdict);
    r["result"] = std::move(payload);
    if (!notes.empty()) r["notes"] = notes;
    return r;
}

namespace {

void render_value(const json& v, const std::string& indent, std::ostream& out);

void render_object(const json& v, const std::string& indent, std::ostream& out) {
    for (const auto& [key, val] : v.items()) {
        out << indent << key << ":";
        if (val.is_object() || (val.is_array() && !val.empty() && val[0].is_structured())) {
            out << "\n";
            render_value(val, indent + "  ", out);
        } else {
            out << " " << val.dump() << "\n";
        }
    }
}

void render_value(const json& v, const std::string& indent, std::ostream& out) {
    if (v.is_object()) {
        render_object(v, indent, out);
    } else if (v.is_array()) {
        int i = 0;
        for (const auto& item : v) {
            out << indent << "- [" << i++ << "]\n";
            render_value(item, indent + "  ", out);
        }
    } else {
        out << indent << v.dump() << "\n";
    }
}

} // namespace

std::string render_human(const json& report) {
    std::ostringstream out;
    out << report.value("operation", std::string("?")) << ": "
        << report.value("verdict", std::string("?")) << "\n";
    if (report.contains("result")) render_value(report["result"], "  ", out);
    if (report.contains("notes"))
        for (const auto& n : report["notes"]) out << "  note: " << n.get<std::string>() << "\n";
    return out.str();
}

} // namespace ramseykit

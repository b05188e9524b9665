#pragma once

#include <string>

#include <json.hpp>

#include "ramseykit/classes.hpp"
#include "ramseykit/expansions.hpp"
#include "ramseykit/flows.hpp"
#include "ramseykit/ramsey.hpp"
#include "ramseykit/structures.hpp"

namespace ramseykit {

// Insertion-ordered JSON keeps machine reports byte-reproducible.
using json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

// --- structure / class / ordering file formats --------------------------------

json signature_to_json(const Signature& sig);
Signature signature_from_json(const json& j);

json structure_to_json(const Structure& A);
Structure structure_from_json(const json& j);

json classspec_to_json(const ClassSpec& K);
ClassSpec classspec_from_json(const json& j);

json ordering_to_json(const LinearOrdering& o);
LinearOrdering ordering_from_json(const json& j);

json ordering_set_to_json(const OrderingSet& s);
OrderingSet ordering_set_from_json(const json& j);

json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

json group_to_json(const PermGroup& G);
PermGroup group_from_json(const json& j);

// Flow dump: points (with labels / ordering payloads), generators, per-element
// action table and the caps in effect.
json flow_to_json(const FiniteFlow& flow);
FiniteFlow flow_from_json(const json& j);

// Parses a file as JSON, mapping errors to ParseError.
json load_json_file(const std::string& path);
json parse_json_text(const std::string& text, const std::string& what);

// --- report envelope ------------------------------------------------------------

// One structured object per run. Human output is rendered from this object
// and never computed separately.
json make_report(const std::string& operation, json instance, json caps, Verdict verdict,
                 json payload, const std::vector<std::string>& notes = {});

std::string render_human(const json& report);

} // namespace ramseykit

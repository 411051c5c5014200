#pragma once

// JSON forms of graphs, certificates, endomorphisms and lab reports. Objects
// keep insertion order so output is stable byte for byte.

#include <string>

#include <json.hpp>

#include "stallings/core_graph.hpp"
#include "stallings/echelon.hpp"
#include "stallings/endo.hpp"
#include "stallings/fix_structure.hpp"
#include "stallings/lab.hpp"
#include "stallings/subgroup_ops.hpp"

namespace stallings {

using Json = nlohmann::ordered_json;

// {"n", "base", "edges": [[origin, label, target], ...]}
Json graph_to_json(const StallingsGraph& g);
// Folds and trims whatever graph the document describes. Throws SyntaxError
// on malformed documents and IndexOutOfRange on bad vertices or labels.
StallingsGraph graph_from_json(const Json& doc);

// {"n", "indices", "words"}; "n" may be omitted on input when `fallback` is
// given.
Json certificate_to_json(const EchelonCertificate& cert);
EchelonCertificate certificate_from_json(const Json& doc,
                                         std::optional<Alphabet> fallback = {});

Json endomorphism_to_json(const Endomorphism& e);
Endomorphism endomorphism_from_json(const Json& doc);

// {"n", "ordering": [...], "ys": [...], "zs": [{"index", "w"}]}
Json fix_certificate_to_json(const FixCertificate& cert);
FixCertificate fix_certificate_from_json(const Json& doc);

Json profile_to_json(const RankProfile& profile);
Json budget_to_json(const EnumBudget& budget);

// Reports carry no timings, so equal inputs give equal documents.
Json inertia_report_to_json(const InertiaReport& report, const EnumBudget& budget);
Json hn_report_to_json(const HnReport& report, const EnumBudget& budget);
Json compression_report_to_json(const CompressionReport& report);

Json parse_json_text(const std::string& text);

// Pretty-printed with a trailing newline.
std::string dump(const Json& doc);

}  // namespace stallings

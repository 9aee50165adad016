#pragma once
#include <string>

#include "json.hpp"
#include "nsep/catalog.hpp"
#include "nsep/septool.hpp"

namespace nsep {

// Insertion-ordered documents keep output byte-identical across runs.
using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "noether-report/1";

// JSON views of the engine's result types, with polynomials rendered as text.
Json json_module(const ModuleSpec& m);
Json json_generating_set(const GeneratingSet& g);
Json json_certificate(const SeparationCertificate& c);
Json json_radical_betasep(const RadicalBetaSep& r);
Json json_betasep_report(const BetaSepReport& r);

// Render a report document: "json" is the document itself (2-space indent,
// newline-terminated); "tsv" flattens the leaves to path<TAB>value lines;
// "human" is an indented outline of the same data.  Throws BadParameter on
// an unknown format name.
std::string render_report(const Json& doc, const std::string& format);

}  // namespace nsep

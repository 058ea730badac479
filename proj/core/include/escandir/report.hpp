#pragma once

#include <set>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "escandir/corpus.hpp"
#include "escandir/poem.hpp"

namespace escandir {

/// "1.6.(7).10": the pattern with extrarrhythmic stresses in parentheses.
std::string format_annotated(const VerseScansion& scansion);

/// Stresses shared with the matched type, dotted; "" without a match.
std::string canonical_pattern(const VerseScansion& scansion);

/// {verse, tagged, syllables, pattern, canonical_pattern, type_name, ratio,
///  resources: [{kind, word, nucleus}], flags}
nlohmann::json row_to_json(const VerseScansion& scansion);

/// "red" when the measure is outside the tendency (or the row failed),
/// else "green" for ratio 1, else "black".
std::string row_color(const VerseScansion& scansion, const std::set<int>& tendency);

nlohmann::json analysis_to_json(const PoemAnalysis& analysis);

/// Header plus one line per row: the seven columns, tab-separated.
std::string analysis_to_tsv(const PoemAnalysis& analysis);

/// Aligned, human-oriented listing with tendency and per-row colors.
std::string analysis_to_pretty(const PoemAnalysis& analysis, const std::set<int>& tendency);

nlohmann::json eval_report_to_json(const EvalReport& report);
std::string eval_report_to_text(const EvalReport& report, std::size_t max_failures = 20);

/// The analysis endpoint. Request: {"poem": string, "window"?: int,
/// "measures"?: [int], "mode"?: "auto"|"fixed"|"mixed"}. Response:
/// {"rows": [row + {"line", "color"}], "tendency", "frequent_measures",
/// "is_fixed"}. Throws std::invalid_argument for a malformed request.
nlohmann::json handle_analyze(const nlohmann::json& request, const PoemOptions& defaults,
                              const LexiconConfig& lexicon, const Catalog& catalog);

}  // namespace escandir

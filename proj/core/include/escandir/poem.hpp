#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "escandir/lexicon.hpp"
#include "escandir/pattern.hpp"
#include "escandir/verse.hpp"

namespace escandir {

enum class PoemMode { automatic, fixed, mixed };

/// "auto", "fixed", "mixed".
std::string_view to_string(PoemMode mode);
std::optional<PoemMode> parse_mode(std::string_view name);

struct PoemOptions {
  /// Preceding rows consulted per verse in mixed mode. At least 1.
  int window = 14;
  PoemMode mode = PoemMode::automatic;
  /// Declared tendency; when non-empty it replaces inference for pass 2.
  std::set<int> forced_measures;
  VerseOptions verse;
  /// Worker threads for per-verse work; 0 uses the hardware concurrency.
  unsigned threads = 0;
};

struct PoemRow {
  /// For an unscannable line: text set, measure 0, flag "unscannable".
  VerseScansion scansion;
  /// 1-based line number in the input text.
  int line = 0;
  /// Measures this verse was held to; empty when it was not checked.
  std::set<int> applicable;
  bool rescanned = false;
  std::string error;

  bool ok() const { return error.empty(); }
};

struct PoemAnalysis {
  /// One per non-blank input line, in order.
  std::vector<PoemRow> rows;
  std::set<int> frequent_measures;
  bool is_fixed = false;
};

/// Measures reaching 25% of the list with at least two occurrences; if none
/// does, the most frequent one (the smallest among equals). Empty input
/// gives an empty set.
std::set<int> frequent_measures(std::span<const int> measures);

/// Two passes: every verse scanned with every synalepha, then verses whose
/// measure falls outside the applicable frequent set rescanned with
/// ambiguity resolution towards that set. Unscannable lines become flagged
/// rows. Blank lines produce no row.
PoemAnalysis analyze_poem(std::span<const std::string> lines, const PoemOptions& options,
                          const LexiconConfig& lexicon, const Catalog& catalog);

/// Splits `text` on newlines (CRLF tolerated) and analyzes the lines.
PoemAnalysis analyze_text(std::string_view text, const PoemOptions& options, const LexiconConfig& lexicon,
                          const Catalog& catalog);

/// forced_measures when given, else the inferred frequent measures.
std::set<int> versal_tendency(const PoemAnalysis& analysis, const PoemOptions& options);

}  // namespace escandir

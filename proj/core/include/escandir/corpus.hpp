#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "escandir/pattern.hpp"
#include "escandir/poem.hpp"

namespace escandir {

/// dotted: `verse<TAB>2.6.10`, optionally `2.6.10|11` to give the measure
/// (otherwise last position + 1). signs: `verse<TAB>-+---+---+-`.
enum class CorpusFormat { dotted, signs };

std::optional<CorpusFormat> parse_corpus_format(std::string_view name);

struct CorpusEntry {
  std::string verse;
  MetricalPattern gold;
  int line = 0;
};

/// Blank and '#' lines are skipped. Throws DataError naming the line for a
/// malformed entry and for a corpus without entries.
std::vector<CorpusEntry> parse_corpus(std::string_view text, CorpusFormat format,
                                      const std::string& source = "<corpus>");
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path, CorpusFormat format);

struct EvalFailure {
  CorpusEntry entry;
  VerseScansion produced;
};

struct EvalReport {
  std::size_t total = 0;
  std::size_t correct = 0;
  Fraction accuracy;
  /// Wall-clock time of the analysis alone, parsing excluded.
  double elapsed_seconds = 0.0;
  std::vector<EvalFailure> failures;

  /// Accuracy rounded half away from zero to two decimals.
  double accuracy_rounded() const;
};

/// Analyzes the corpus verses as one poem and counts verses whose stress
/// positions equal the gold positions exactly.
EvalReport evaluate(std::span<const CorpusEntry> entries, const PoemOptions& options, const LexiconConfig& lexicon,
                    const Catalog& catalog);

}  // namespace escandir

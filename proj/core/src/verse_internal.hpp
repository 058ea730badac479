#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "escandir/verse.hpp"

namespace escandir::detail {

/// A verse tokenized and scanned once, reused for every candidate reading.
struct PreparedVerse {
  std::string text;
  std::vector<VerseToken> tokens;
  std::vector<WordScan> scans;
  /// synalepha_possible[w]: word w may merge with word w + 1.
  std::vector<bool> synalepha_possible;
  /// Metric position of every nucleus in the flat default reading.
  std::vector<std::vector<int>> default_positions;
  bool skipped_tokens = false;
};

PreparedVerse prepare(std::string_view verse, const LexiconConfig& lexicon, const VerseOptions& options);

VerseScansion scan_prepared(const PreparedVerse& prepared, const std::vector<ResourceTag>& applied,
                            bool allow_hemistich, const VerseOptions& options);

std::vector<ResourceTag> sites_of(const PreparedVerse& prepared);

int site_position(const PreparedVerse& prepared, const ResourceTag& site);

}  // namespace escandir::detail

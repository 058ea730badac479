#pragma once

#include <array>
#include <compare>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "escandir/lexicon.hpp"
#include "escandir/pattern.hpp"
#include "escandir/text.hpp"
#include "escandir/word.hpp"

namespace escandir {

enum class ResourceKind { synalepha, dialefa, dieresis, syneresis, hemistich_break, hemistich_dialefa };

std::string_view to_string(ResourceKind kind);

/// A metrical resource and where it applies: the 0-based word index in the
/// verse and the 1-based nucleus of that word. Word-boundary resources
/// (synalepha, dialefa, hemistich marks) sit on the last nucleus of the
/// left-hand word; syneresis sits on the first nucleus of the merged pair.
struct ResourceTag {
  ResourceKind kind = ResourceKind::synalepha;
  int word = 0;
  int nucleus = 0;

  auto operator<=>(const ResourceTag&) const = default;
};

/// One hemistich: the measure it must reach, the nuclei actually counted in
/// it (after synalephas) and the compensation of its last stressed word.
struct HemistichSplit {
  int expected_measure = 0;
  int raw_count = 0;
  int compensation = 0;

  bool operator==(const HemistichSplit&) const = default;
};

struct HemistichPlan {
  std::vector<HemistichSplit> splits;

  bool operator==(const HemistichPlan&) const = default;
};

/// A verse word as it was read: its token and its scan with any dieresis
/// or syneresis applied.
struct ScannedWord {
  VerseToken token;
  WordScan scan;
};

struct VerseScansion {
  std::string text;
  /// Resource notation: "‿" synalepha, "‖" dialefa, "¨" dieresis,
  /// "( )" syneresis, " / " hemistich pause.
  std::string tagged_text;
  /// tagged_text with the stressed nuclei uppercased.
  std::string stressed_text;
  int measure = 0;
  MetricalPattern pattern;
  std::optional<HemistichPlan> hemistichs;
  std::vector<ResourceTag> resources;
  MatchResult match;
  /// Diagnostics: "unscannable", "hemistich_unresolved", "skipped_token",
  /// "no_canonical_match".
  std::vector<std::string> flags;
  std::vector<ScannedWord> words;

  bool has_flag(std::string_view flag) const;
};

/// Hemistich splits to try, keyed by the flat (unsplit) measure.
class SplitTable {
 public:
  SplitTable() = default;
  explicit SplitTable(std::vector<std::pair<int, std::vector<std::vector<int>>>> rows);

  static const SplitTable& bundled();
  /// Lines `flat_measure<TAB>7+7,6+8`, '#' comments.
  static SplitTable parse(std::string_view text, const std::string& source = "<splits>");
  static SplitTable load(const std::filesystem::path& path);

  /// The splits keyed to `flat_measure`, then every other distinct split in
  /// the table ordered by how close its total is to `flat_measure`.
  std::vector<std::vector<int>> splits_for(int flat_measure) const;

  const std::vector<std::pair<int, std::vector<std::vector<int>>>>& rows() const { return rows_; }

 private:
  std::vector<std::pair<int, std::vector<std::vector<int>>>> rows_;
};

struct VerseOptions {
  /// Commas and other punctuation do not block synalepha unless this is off.
  bool synalepha_across_punctuation = true;
  /// Preference among resources when candidates tie on everything else.
  std::array<ResourceKind, 3> resource_order{ResourceKind::dialefa, ResourceKind::dieresis, ResourceKind::syneresis};
  /// Ambiguity sites combined exhaustively; the rest only as single resources.
  int max_combined_sites = 6;
  /// Verses measuring more than this are rescanned by hemistichs.
  int hemistich_threshold = 11;
  SplitTable splits = SplitTable::bundled();
  /// Measures the candidates should reach; orders sites beyond the cap.
  std::vector<int> target_measures;
};

/// Scans a verse taking every synalepha. Verses over the hemistich threshold
/// are rescanned by hemistichs when `allow_hemistich`; if no split fits, the
/// flat reading is returned with the "hemistich_unresolved" flag. `match` is
/// left empty. Throws UnscannableError when no word can be counted or none
/// is stressed.
VerseScansion scan_verse(std::string_view verse, const LexiconConfig& lexicon, bool allow_hemistich,
                         const VerseOptions& options = {});

/// Scans a verse with the given dialefa, dieresis and syneresis tags applied
/// on top of the default reading. Throws std::invalid_argument for a tag
/// that does not name an ambiguity site of the verse.
VerseScansion scan_with_resources(std::string_view verse, const LexiconConfig& lexicon,
                                  const std::vector<ResourceTag>& applied, bool allow_hemistich,
                                  const VerseOptions& options = {});

struct CandidateScore {
  bool measure_conformity = false;
  Fraction coincidence_ratio;
  int resource_penalty = 0;

  bool operator==(const CandidateScore&) const = default;
};

struct Candidate {
  VerseScansion scansion;
  /// Dialefas, diereses and synereses applied on top of the default reading.
  std::vector<ResourceTag> applied;
  /// Metric position of each applied site in the default reading, ascending.
  std::vector<int> site_positions;
  CandidateScore score;
};

/// Every place a dialefa, dieresis or syneresis could apply, ordered by
/// position in the default reading.
std::vector<ResourceTag> ambiguity_sites(std::string_view verse, const LexiconConfig& lexicon,
                                         const VerseOptions& options = {});

/// True when two resources cannot be applied together (they touch the same
/// nucleus of the same word).
bool resources_conflict(const ResourceTag& a, const ResourceTag& b);

/// The default reading followed by every compatible combination of
/// ambiguity sites (exhaustive up to options.max_combined_sites sites).
std::vector<Candidate> generate_candidates(std::string_view verse, const LexiconConfig& lexicon,
                                           const VerseOptions& options = {});

/// Scores each candidate as (measure in targets, coincidence ratio, fewer
/// resources) and returns the best one with its match filled. Remaining
/// ties go to the candidate whose resources come earliest in the verse,
/// then to options.resource_order. Empty targets admit every measure.
VerseScansion resolve_ambiguity(std::vector<Candidate> candidates, const std::vector<int>& target_measures,
                                const Catalog& catalog, const VerseOptions& options = {});

/// generate_candidates followed by resolve_ambiguity towards `target_measures`.
VerseScansion analyze_verse(std::string_view verse, const LexiconConfig& lexicon, const Catalog& catalog,
                            const std::vector<int>& target_measures, const VerseOptions& options = {});

}  // namespace escandir

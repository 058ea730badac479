#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace escandir {

/// Exact non-negative ratio, so equal similarities compare equal.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend bool operator==(const Fraction& a, const Fraction& b) { return a.num * b.den == b.num * a.den; }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

/// Stressed metric positions of a verse (1-based, strictly increasing).
struct MetricalPattern {
  std::vector<int> positions;
  int measure = 0;

  /// Strictly increasing, positive, within the measure.
  bool is_valid() const;
  /// Valid and stressed on the penultimate metric position.
  bool is_well_formed() const;

  bool operator==(const MetricalPattern&) const = default;
};

struct PatternType {
  int measure = 0;
  std::string family;
  std::string variant;
  std::vector<int> stresses;

  /// "family variant", or just the family when there is no variant.
  std::string name() const;

  bool operator==(const PatternType&) const = default;
};

struct MatchResult {
  std::optional<PatternType> matched_type;
  Fraction coincidence_ratio;
  std::vector<int> extrarrhythmic;

  bool operator==(const MatchResult&) const = default;
};

/// Canonical verse types, grouped by measure. Immutable after construction.
class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<PatternType> entries);

  /// Types shipped with the library (the hendecasyllable typology plus the
  /// heptasyllable, octosyllable and alexandrine extensions).
  static const Catalog& bundled();

  /// Lines `measure<TAB>family<TAB>variant<TAB>d.o.t.t.e.d`, '#' comments.
  /// Throws DataError on malformed lines.
  static Catalog parse(std::string_view text, const std::string& source = "<catalog>");
  static Catalog load(const std::filesystem::path& path);

  /// Entries for `measure` in file order. Measures without entries get the
  /// single fallback type "genérico" stressed on measure - 1.
  std::vector<PatternType> lookup(int measure) const;

  const std::vector<PatternType>& entries() const { return entries_; }

 private:
  std::vector<PatternType> entries_;
};

/// Picks the candidate type with the highest Jaccard similarity to the
/// pattern's stress set, among types sharing the stress on measure - 1.
/// Ties prefer types contained in the pattern, then larger types, then
/// earlier entries. Without any eligible type the result has no
/// matched_type, ratio 0 and every stress extrarrhythmic.
MatchResult match_pattern(const MetricalPattern& pattern, std::span<const PatternType> candidates);

/// "2.6.10"
std::string format_dotted(std::span<const int> positions);
/// Parses "2.6.10"; throws std::invalid_argument unless strictly increasing
/// positive integers.
std::vector<int> parse_dotted(std::string_view dotted);

/// "-+---+---+-": one character per metric position, '+' when stressed.
std::string format_signs(const MetricalPattern& pattern);
MetricalPattern parse_signs(std::string_view signs);

}  // namespace escandir

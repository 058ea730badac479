#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "escandir/lexicon.hpp"

namespace escandir {

/// A vowel nucleus: the code-point range [begin, end) of the word it spans,
/// and the offsets of the vowels it merges (one for a simple vowel, two for
/// a diphthong, three for a triphthong). An intervocalic "h" may sit inside.
struct Nucleus {
  int begin = 0;
  int end = 0;
  std::vector<int> vowels;

  bool operator==(const Nucleus&) const = default;
};

/// Metric analysis of a single word. Nucleus numbers (stress indices and
/// sites) are 1-based; character offsets index `text`.
struct WordScan {
  std::u32string text;
  int syllable_count = 0;
  std::optional<int> stress_index;
  /// The "men" nucleus of an adverb in -mente.
  std::optional<int> secondary_stress_index;
  /// End-of-verse adjustment: last stress minus the penultimate nucleus.
  /// +1 oxytone, 0 paroxytone, -1 proparoxytone (-2 for the rare
  /// stress on the fourth-to-last nucleus). Always 0 for atonic words.
  int compensation = 0;
  std::vector<Nucleus> nuclei;
  /// k such that nuclei k and k+1 are adjacent vowels realized as hiatus.
  std::vector<int> hiatus_sites;
  /// Nuclei that merge two or more vowels.
  std::vector<int> diphthong_sites;
  bool starts_with_vowel_sound = false;
  bool ends_with_vowel_sound = false;
  bool is_atonic = false;
  /// Offsets of the vowels carrying the stresses; they stay fixed when
  /// nuclei are split or merged, so stress follows the vowel.
  std::optional<int> stressed_char;
  std::optional<int> secondary_char;

  /// Stress index of the last stress (the one that decides compensation).
  std::optional<int> final_stress_index() const;
  bool is_stressed(int nucleus) const;

  bool operator==(const WordScan&) const = default;
};

/// True when the two vowels form one of the fourteen Spanish diphthongs:
/// ai au ei eu oi ou ui iu ia ua ie ue io uo, compared without accents.
/// An accented closed vowel (í, ú) or a diaeresis (ü, ï) forces hiatus.
/// "y" is read as "i".
bool is_diphthong(char32_t first, char32_t second);
bool is_diphthong(std::string_view first, std::string_view second);

/// Counts vowel nuclei and locates stress without syllabifying.
/// Throws UnscannableError for a token without vowels.
WordScan scan_word(std::string_view normalized_word, const LexiconConfig& lexicon);

/// Reading with nucleus `nucleus` split in two (dieresis). The nucleus must
/// be one of the diphthong sites.
WordScan with_dieresis(const WordScan& scan, int nucleus);

/// Reading with nuclei `pair` and `pair + 1` merged (syneresis). `pair` must
/// be one of the hiatus sites.
WordScan with_syneresis(const WordScan& scan, int pair);

/// Offset of the vowel that takes a diaeresis mark when `nucleus` is split:
/// the closed vowel at the split, or the first one when both are closed.
int dieresis_mark_offset(const WordScan& scan, int nucleus);

}  // namespace escandir

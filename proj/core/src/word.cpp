#include "escandir/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "escandir/errors.hpp"
#include "escandir/text.hpp"

namespace escandir {

namespace {

// Unaccented base of a vowel letter, or 0. "y" is not handled here.
char32_t base_vowel(char32_t c) {
  switch (c) {
    case U'a': case U'á': case U'à': case U'â': case U'ä': case U'ã':
      return U'a';
    case U'e': case U'é': case U'è': case U'ê': case U'ë':
      return U'e';
    case U'i': case U'í': case U'ì': case U'î': case U'ï':
      return U'i';
    case U'o': case U'ó': case U'ò': case U'ô': case U'ö': case U'õ':
      return U'o';
    case U'u': case U'ú': case U'ù': case U'û': case U'ü':
      return U'u';
    default:
      return 0;
  }
}

bool is_y(char32_t c) { return c == U'y' || c == U'ý' || c == U'ÿ'; }

char32_t base_or_y(char32_t c) { return is_y(c) ? U'i' : base_vowel(c); }

bool has_stress_mark(char32_t c) {
  switch (c) {
    case U'á': case U'é': case U'í': case U'ó': case U'ú': case U'ý':
    case U'à': case U'è': case U'ì': case U'ò': case U'ù':
      return true;
    default:
      return false;
  }
}

bool has_diaeresis(char32_t c) {
  return c == U'ü' || c == U'ï' || c == U'ä' || c == U'ë' || c == U'ö' || c == U'ÿ';
}

bool is_closed(char32_t base) { return base == U'i' || base == U'u'; }
bool is_open(char32_t base) { return base == U'a' || base == U'e' || base == U'o'; }

bool front_vowel_at(std::u32string_view text, std::size_t pos) {
  if (pos >= text.size()) return false;
  const auto b = base_vowel(text[pos]);
  return b == U'e' || b == U'i';
}

// Whether the letter at `pos` is a pronounced vowel. The "u" of "qu" and of
// "gue/gui" is silent; "y" is a vowel when it stands alone or is not
// followed by a vowel ("hay", "muy", "reyna"), a consonant otherwise.
bool is_vowel_at(std::u32string_view text, std::size_t pos) {
  const char32_t c = text[pos];
  if (is_y(c)) {
    return text.size() == 1 || pos + 1 == text.size() || base_vowel(text[pos + 1]) == 0;
  }
  if (base_vowel(c) == 0) return false;
  if (c == U'u' && pos > 0) {
    if (text[pos - 1] == U'q') return false;
    if (text[pos - 1] == U'g' && front_vowel_at(text, pos + 1)) return false;
  }
  return true;
}

// Grapheme used for the diphthong test: "y" reads as "i" (keeping its
// accent), and the orthographic "ü" of "güe/güi" as a plain "u".
char32_t effective_vowel(std::u32string_view text, std::size_t pos) {
  const char32_t c = text[pos];
  if (c == U'y') return U'i';
  if (c == U'ÿ') return U'ï';
  if (c == U'ý') return U'í';
  if (c == U'ü' && pos > 0 && text[pos - 1] == U'g' && front_vowel_at(text, pos + 1)) return U'u';
  return c;
}

// Vowels at `a` < `b` touch: nothing but "h" between them.
bool adjacent(std::u32string_view text, int a, int b) {
  for (int k = a + 1; k < b; ++k) {
    if (text[k] != U'h') return false;
  }
  return true;
}

bool ends_with(std::u32string_view text, std::u32string_view suffix) {
  return text.size() >= suffix.size() && text.substr(text.size() - suffix.size()) == suffix;
}

// Index of the vowel that carries stress when none is written: the open
// vowel of the nucleus, or its last vowel when all are closed.
int peak_vowel(std::u32string_view text, const std::vector<int>& vowels) {
  for (int v : vowels) {
    if (is_open(base_vowel(effective_vowel(text, v)))) return v;
  }
  return vowels.back();
}

std::vector<std::vector<int>> group_vowels(std::u32string_view text) {
  std::vector<std::vector<int>> groups;
  for (std::size_t p = 0; p < text.size(); ++p) {
    if (!is_vowel_at(text, p)) continue;
    const int pos = static_cast<int>(p);
    if (!groups.empty()) {
      auto& last = groups.back();
      const int prev = last.back();
      if (last.size() < 3 && adjacent(text, prev, pos) &&
          is_diphthong(effective_vowel(text, prev), effective_vowel(text, pos))) {
        last.push_back(pos);
        continue;
      }
    }
    groups.push_back({pos});
  }
  return groups;
}

bool starts_with_vowel_sound(std::u32string_view text) {
  if (text.empty()) return false;
  if (is_vowel_at(text, 0)) return true;
  if (text[0] != U'h' || text.size() < 2 || !is_vowel_at(text, 1)) return false;
  // "hie-", "hue-" open with a consonantal glide.
  if (text.size() >= 3 && text[1] != U'ü' && is_closed(base_vowel(text[1])) && !has_stress_mark(text[1]) &&
      is_open(base_vowel(text[2]))) {
    return false;
  }
  return true;
}

bool ends_with_vowel_sound(std::u32string_view text) {
  if (text.empty()) return false;
  const auto last = text.size() - 1;
  if (is_vowel_at(text, last)) return true;
  return text[last] == U'h' && last > 0 && is_vowel_at(text, last - 1);
}

int nucleus_of(const std::vector<Nucleus>& nuclei, int offset) {
  for (std::size_t k = 0; k < nuclei.size(); ++k) {
    const auto& v = nuclei[k].vowels;
    if (std::find(v.begin(), v.end(), offset) != v.end()) return static_cast<int>(k) + 1;
  }
  return 0;
}

WordScan assemble(std::u32string text, const std::vector<std::vector<int>>& groups,
                  std::optional<int> stressed_char, std::optional<int> secondary_char, bool atonic) {
  WordScan scan;
  scan.text = std::move(text);
  const std::u32string_view view = scan.text;
  scan.syllable_count = static_cast<int>(groups.size());
  scan.nuclei.reserve(groups.size());
  for (const auto& g : groups) {
    scan.nuclei.push_back(Nucleus{g.front(), g.back() + 1, g});
  }
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (groups[k].size() >= 2) scan.diphthong_sites.push_back(static_cast<int>(k) + 1);
    if (k + 1 < groups.size()) {
      const int a = groups[k].back();
      const int b = groups[k + 1].front();
      if (adjacent(view, a, b) && !has_diaeresis(effective_vowel(view, a)) &&
          !has_diaeresis(effective_vowel(view, b))) {
        scan.hiatus_sites.push_back(static_cast<int>(k) + 1);
      }
    }
  }
  scan.starts_with_vowel_sound = starts_with_vowel_sound(view);
  scan.ends_with_vowel_sound = ends_with_vowel_sound(view);
  scan.is_atonic = atonic;
  if (!atonic) {
    scan.stressed_char = stressed_char;
    scan.secondary_char = secondary_char;
    if (stressed_char) scan.stress_index = nucleus_of(scan.nuclei, *stressed_char);
    if (secondary_char) scan.secondary_stress_index = nucleus_of(scan.nuclei, *secondary_char);
    if (const auto last = scan.final_stress_index()) {
      scan.compensation = *last - (scan.syllable_count - 1);
    }
  }
  return scan;
}

// Stressed vowel offset from written accents or the default rules.
int locate_stress(std::u32string_view text, const std::vector<std::vector<int>>& groups) {
  for (const auto& g : groups) {
    for (int v : g) {
      if (has_stress_mark(text[v])) return v;
    }
  }
  const auto n = groups.size();
  const char32_t last = text.back();
  const bool paroxytone = (base_vowel(last) != 0 || last == U'n' || last == U's') && n >= 2;
  const auto& target = paroxytone ? groups[n - 2] : groups[n - 1];
  return peak_vowel(text, target);
}

bool has_written_accent(std::u32string_view text, const std::vector<std::vector<int>>& groups) {
  for (const auto& g : groups) {
    for (int v : g) {
      if (has_stress_mark(text[v])) return true;
    }
  }
  return false;
}

}  // namespace

std::optional<int> WordScan::final_stress_index() const {
  return secondary_stress_index ? secondary_stress_index : stress_index;
}

bool WordScan::is_stressed(int nucleus) const {
  return (stress_index && *stress_index == nucleus) || (secondary_stress_index && *secondary_stress_index == nucleus);
}

bool is_diphthong(char32_t first, char32_t second) {
  if (has_diaeresis(first) || has_diaeresis(second)) return false;
  const char32_t a = base_or_y(first);
  const char32_t b = base_or_y(second);
  if (a == 0 || b == 0 || a == b) return false;
  if ((is_closed(a) && has_stress_mark(first)) || (is_closed(b) && has_stress_mark(second))) return false;
  return is_closed(a) || is_closed(b);
}

bool is_diphthong(std::string_view first, std::string_view second) {
  const auto a = compose(utf8_decode(first));
  const auto b = compose(utf8_decode(second));
  if (a.size() != 1 || b.size() != 1) return false;
  return is_diphthong(to_lower(a[0]), to_lower(b[0]));
}

WordScan scan_word(std::string_view normalized_word, const LexiconConfig& lexicon) {
  auto text = utf8_decode(normalized_word);
  const auto groups = group_vowels(text);
  if (groups.empty()) {
    throw UnscannableError("no vowel nucleus in \"" + std::string(normalized_word) + "\"");
  }
  if (lexicon.is_atonic(normalized_word)) {
    return assemble(std::move(text), groups, std::nullopt, std::nullopt, true);
  }

  // Adverbs in -mente keep the stem's stress and add one on "men".
  constexpr std::u32string_view kMente = U"mente";
  if (ends_with(text, kMente) && text.size() > kMente.size() && !lexicon.is_mente_exception(normalized_word)) {
    const std::u32string_view stem = std::u32string_view(text).substr(0, text.size() - kMente.size());
    const auto stem_groups = group_vowels(stem);
    if (!stem_groups.empty() && (stem_groups.size() >= 2 || has_written_accent(stem, stem_groups))) {
      const int primary = locate_stress(stem, stem_groups);
      const int secondary = static_cast<int>(text.size()) - 4;
      return assemble(std::move(text), groups, primary, secondary, false);
    }
  }

  const int stressed = locate_stress(text, groups);
  return assemble(std::move(text), groups, stressed, std::nullopt, false);
}

namespace {

std::vector<std::vector<int>> groups_of(const WordScan& scan) {
  std::vector<std::vector<int>> groups;
  groups.reserve(scan.nuclei.size());
  for (const auto& n : scan.nuclei) groups.push_back(n.vowels);
  return groups;
}

}  // namespace

WordScan with_dieresis(const WordScan& scan, int nucleus) {
  if (nucleus < 1 || nucleus > scan.syllable_count || scan.nuclei[nucleus - 1].vowels.size() < 2) {
    throw std::invalid_argument("dieresis requires a nucleus with a merged vowel pair");
  }
  auto groups = groups_of(scan);
  auto& target = groups[nucleus - 1];
  std::vector<int> rest(target.begin() + 1, target.end());
  target.resize(1);
  groups.insert(groups.begin() + nucleus, std::move(rest));
  return assemble(scan.text, groups, scan.stressed_char, scan.secondary_char, scan.is_atonic);
}

WordScan with_syneresis(const WordScan& scan, int pair) {
  if (std::find(scan.hiatus_sites.begin(), scan.hiatus_sites.end(), pair) == scan.hiatus_sites.end()) {
    throw std::invalid_argument("syneresis requires a hiatus site");
  }
  auto groups = groups_of(scan);
  auto& first = groups[pair - 1];
  first.insert(first.end(), groups[pair].begin(), groups[pair].end());
  groups.erase(groups.begin() + pair);
  return assemble(scan.text, groups, scan.stressed_char, scan.secondary_char, scan.is_atonic);
}

int dieresis_mark_offset(const WordScan& scan, int nucleus) {
  const auto& v = scan.nuclei.at(nucleus - 1).vowels;
  if (v.size() < 2) throw std::invalid_argument("dieresis requires a nucleus with a merged vowel pair");
  const char32_t first = base_or_y(effective_vowel(scan.text, v[0]));
  return is_closed(first) ? v[0] : v[1];
}

}  // namespace escandir

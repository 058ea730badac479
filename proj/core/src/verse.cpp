#include "escandir/verse.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "escandir/bundled_data.hpp"
#include "escandir/errors.hpp"
#include "verse_internal.hpp"

namespace escandir {

std::string_view to_string(ResourceKind kind) {
  switch (kind) {
    case ResourceKind::synalepha: return "synalepha";
    case ResourceKind::dialefa: return "dialefa";
    case ResourceKind::dieresis: return "dieresis";
    case ResourceKind::syneresis: return "syneresis";
    case ResourceKind::hemistich_break: return "hemistich_break";
    case ResourceKind::hemistich_dialefa: return "hemistich_dialefa";
  }
  return "unknown";
}

bool VerseScansion::has_flag(std::string_view flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

// ---------------------------------------------------------------------------
// Split table

SplitTable::SplitTable(std::vector<std::pair<int, std::vector<std::vector<int>>>> rows) : rows_(std::move(rows)) {}

const SplitTable& SplitTable::bundled() {
  static const SplitTable table = parse(data::hemistich_splits(), "bundled hemistich_splits.tsv");
  return table;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int to_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("empty number");
  int value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a number: \"" + std::string(s) + "\"");
    value = value * 10 + (c - '0');
  }
  return value;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

SplitTable SplitTable::parse(std::string_view text, const std::string& source) {
  std::vector<std::pair<int, std::vector<std::vector<int>>>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto fields = split_on(line, '\t');
    if (fields.size() != 2) throw DataError(source, number, "expected flat measure and splits separated by a tab");
    try {
      const int flat = to_int(fields[0]);
      std::vector<std::vector<int>> splits;
      for (auto part : split_on(fields[1], ',')) {
        std::vector<int> split;
        for (auto piece : split_on(trim(part), '+')) {
          const int m = to_int(piece);
          if (m < 2) throw std::invalid_argument("hemistich measure must be at least 2");
          split.push_back(m);
        }
        if (split.size() < 2) throw std::invalid_argument("a split needs at least two hemistichs");
        splits.push_back(std::move(split));
      }
      rows.emplace_back(flat, std::move(splits));
    } catch (const std::invalid_argument& e) {
      throw DataError(source, number, e.what());
    }
  }
  return SplitTable(std::move(rows));
}

SplitTable SplitTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string(), 0, "cannot open split table");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path.string());
}

std::vector<std::vector<int>> SplitTable::splits_for(int flat_measure) const {
  std::vector<std::vector<int>> keyed;
  std::vector<std::vector<int>> others;
  for (const auto& [flat, splits] : rows_) {
    for (const auto& s : splits) {
      auto& bucket = flat == flat_measure ? keyed : others;
      if (std::find(keyed.begin(), keyed.end(), s) == keyed.end() &&
          std::find(others.begin(), others.end(), s) == others.end()) {
        bucket.push_back(s);
      }
    }
  }
  std::erase_if(others, [&](const auto& s) { return std::find(keyed.begin(), keyed.end(), s) != keyed.end(); });
  auto total = [](const std::vector<int>& s) {
    int sum = 0;
    for (int m : s) sum += m;
    return sum;
  };
  std::stable_sort(others.begin(), others.end(), [&](const auto& a, const auto& b) {
    return std::abs(total(a) - flat_measure) < std::abs(total(b) - flat_measure);
  });
  keyed.insert(keyed.end(), others.begin(), others.end());
  return keyed;
}

// ---------------------------------------------------------------------------
// Scanning

namespace detail {

namespace {

bool has_punctuation(std::u32string_view s) {
  return std::any_of(s.begin(), s.end(), [](char32_t c) { return c != U' '; });
}

struct Walk {
  bool ok = false;
  std::vector<int> stresses;
  int measure = 0;
  std::vector<HemistichSplit> splits;
  std::vector<int> breaks;
};

void add_stresses(const WordScan& word, int first_position, int offset, std::vector<int>& out, int& last_local) {
  for (int k : {word.stress_index.value_or(0), word.secondary_stress_index.value_or(0)}) {
    if (k == 0) continue;
    const int local = first_position + k - 1;
    out.push_back(offset + local);
    last_local = std::max(last_local, local);
  }
}

void finish(std::vector<int>& stresses) {
  std::sort(stresses.begin(), stresses.end());
  stresses.erase(std::unique(stresses.begin(), stresses.end()), stresses.end());
}

Walk walk_flat(const std::vector<WordScan>& words, const std::vector<bool>& active) {
  Walk walk;
  int running = 0;
  int last_stress = 0;
  for (std::size_t w = 0; w < words.size(); ++w) {
    const bool merged = w > 0 && active[w - 1];
    const int start = merged ? running : running + 1;
    add_stresses(words[w], start, 0, walk.stresses, last_stress);
    running = start + words[w].syllable_count - 1;
  }
  finish(walk.stresses);
  walk.ok = !walk.stresses.empty();
  walk.measure = last_stress + 1;
  return walk;
}

// A word closes a hemistich when the hemistich measured up to its last
// stress (nuclei so far plus its compensation) equals the expected measure.
Walk walk_hemistichs(const std::vector<WordScan>& words, const std::vector<bool>& active,
                     const std::vector<int>& expected) {
  Walk walk;
  const auto n = words.size();
  std::size_t h = 0;
  int offset = 0;
  int running = 0;
  int last_local = 0;
  bool broke_before = false;
  for (std::size_t w = 0; w < n; ++w) {
    const bool merged = w > 0 && active[w - 1] && !broke_before;
    broke_before = false;
    const int start = merged ? running : running + 1;
    add_stresses(words[w], start, offset, walk.stresses, last_local);
    running = start + words[w].syllable_count - 1;

    const auto final_stress = words[w].final_stress_index();
    if (h + 1 < expected.size() && w + 1 < n && final_stress) {
      const int local_measure = start + *final_stress - 1 + 1;
      if (local_measure == expected[h]) {
        walk.splits.push_back({expected[h], running, local_measure - running});
        walk.breaks.push_back(static_cast<int>(w));
        offset += expected[h];
        ++h;
        running = 0;
        last_local = 0;
        broke_before = true;
      }
    }
  }
  if (h + 1 != expected.size() || last_local == 0 || last_local + 1 != expected[h]) return walk;
  walk.splits.push_back({expected[h], running, expected[h] - running});
  finish(walk.stresses);
  walk.measure = offset + expected[h];
  walk.ok = true;
  return walk;
}

char32_t with_diaeresis(char32_t c) {
  switch (c) {
    case U'u': return U'ü';
    case U'U': return U'Ü';
    case U'i': return U'ï';
    case U'I': return U'Ï';
    case U'a': return U'ä';
    case U'A': return U'Ä';
    case U'e': return U'ë';
    case U'E': return U'Ë';
    case U'o': return U'ö';
    case U'O': return U'Ö';
    case U'y': return U'ÿ';
    default: return c;
  }
}

struct WordMarks {
  std::set<int> diaeresis;
  std::set<int> open_before;
  std::set<int> close_after;
};

std::string render(const PreparedVerse& prep, const std::vector<WordScan>& words, const std::vector<WordMarks>& marks,
                   const std::vector<bool>& active, const std::vector<bool>& dialefa,
                   const std::vector<int>& breaks, bool uppercase_stress) {
  std::u32string out;
  const auto n = words.size();
  for (std::size_t w = 0; w < n; ++w) {
    const auto& token = prep.tokens[w];
    std::vector<bool> upper(token.core.size(), false);
    if (uppercase_stress) {
      for (int k = 1; k <= words[w].syllable_count; ++k) {
        if (!words[w].is_stressed(k)) continue;
        const auto& nucleus = words[w].nuclei[k - 1];
        for (int i = nucleus.begin; i < nucleus.end; ++i) upper[i] = true;
      }
    }
    out += token.prefix;
    for (std::size_t i = 0; i < token.core.size(); ++i) {
      const int at = static_cast<int>(i);
      if (marks[w].open_before.contains(at)) out += U'(';
      char32_t c = token.core[i];
      if (marks[w].diaeresis.contains(at)) c = with_diaeresis(c);
      if (upper[i]) c = to_upper(c);
      out += c;
      if (marks[w].close_after.contains(at)) out += U')';
    }
    out += token.suffix;
    if (w + 1 == n) break;
    if (std::find(breaks.begin(), breaks.end(), static_cast<int>(w)) != breaks.end()) {
      out += U" / ";
    } else if (active[w]) {
      out += U'‿';
    } else if (dialefa[w]) {
      out += U'‖';
    } else {
      out += U' ';
    }
  }
  return utf8_encode(out);
}

}  // namespace

PreparedVerse prepare(std::string_view verse, const LexiconConfig& lexicon, const VerseOptions& options) {
  PreparedVerse prep;
  prep.text = std::string(verse);
  std::vector<bool> gap_before;
  bool gap = false;
  for (auto& token : tokenize_verse(verse)) {
    try {
      auto scan = scan_word(token.normalized, lexicon);
      prep.tokens.push_back(std::move(token));
      prep.scans.push_back(std::move(scan));
      gap_before.push_back(gap);
      gap = false;
    } catch (const UnscannableError&) {
      prep.skipped_tokens = true;
      gap = true;
      if (!prep.tokens.empty()) {
        auto& suffix = prep.tokens.back().suffix;
        suffix += U' ';
        suffix += token.prefix + token.core + token.suffix;
      }
    }
  }
  if (prep.scans.empty()) throw UnscannableError("no scannable word in verse \"" + prep.text + "\"");
  if (std::all_of(prep.scans.begin(), prep.scans.end(), [](const WordScan& s) { return s.is_atonic; })) {
    throw UnscannableError("no stressed word in verse \"" + prep.text + "\"");
  }

  const auto n = prep.scans.size();
  prep.synalepha_possible.assign(n - 1, false);
  for (std::size_t w = 0; w + 1 < n; ++w) {
    const bool vowels_meet = prep.scans[w].ends_with_vowel_sound && prep.scans[w + 1].starts_with_vowel_sound;
    const bool punctuation =
        has_punctuation(prep.tokens[w].suffix) || has_punctuation(prep.tokens[w + 1].prefix);
    prep.synalepha_possible[w] =
        vowels_meet && !gap_before[w + 1] && (options.synalepha_across_punctuation || !punctuation);
  }

  prep.default_positions.resize(n);
  int running = 0;
  for (std::size_t w = 0; w < n; ++w) {
    const bool merged = w > 0 && prep.synalepha_possible[w - 1];
    const int start = merged ? running : running + 1;
    for (int k = 0; k < prep.scans[w].syllable_count; ++k) prep.default_positions[w].push_back(start + k);
    running = start + prep.scans[w].syllable_count - 1;
  }
  return prep;
}

VerseScansion scan_prepared(const PreparedVerse& prep, const std::vector<ResourceTag>& applied, bool allow_hemistich,
                            const VerseOptions& options) {
  const auto n = prep.scans.size();
  std::vector<WordScan> words = prep.scans;
  std::vector<bool> dialefa(n - 1, false);
  std::vector<std::vector<ResourceTag>> per_word(n);
  std::vector<WordMarks> marks(n);

  for (std::size_t i = 0; i < applied.size(); ++i) {
    for (std::size_t j = i + 1; j < applied.size(); ++j) {
      if (applied[i] == applied[j] || resources_conflict(applied[i], applied[j])) {
        throw std::invalid_argument("conflicting or repeated resources");
      }
    }
  }
  for (const auto& tag : applied) {
    if (tag.word < 0 || static_cast<std::size_t>(tag.word) >= n) throw std::invalid_argument("resource word out of range");
    const auto& scan = prep.scans[tag.word];
    auto contains = [](const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); };
    switch (tag.kind) {
      case ResourceKind::dialefa:
        if (static_cast<std::size_t>(tag.word) + 1 >= n || !prep.synalepha_possible[tag.word]) {
          throw std::invalid_argument("dialefa needs a synalepha site");
        }
        dialefa[tag.word] = true;
        break;
      case ResourceKind::dieresis:
        if (!contains(scan.diphthong_sites, tag.nucleus)) throw std::invalid_argument("dieresis needs a diphthong site");
        per_word[tag.word].push_back(tag);
        marks[tag.word].diaeresis.insert(dieresis_mark_offset(scan, tag.nucleus));
        break;
      case ResourceKind::syneresis:
        if (!contains(scan.hiatus_sites, tag.nucleus)) throw std::invalid_argument("syneresis needs a hiatus site");
        per_word[tag.word].push_back(tag);
        marks[tag.word].open_before.insert(scan.nuclei[tag.nucleus - 1].vowels.back());
        marks[tag.word].close_after.insert(scan.nuclei[tag.nucleus].vowels.front());
        break;
      default:
        throw std::invalid_argument("only dialefa, dieresis and syneresis can be applied");
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    auto& tags = per_word[w];
    std::sort(tags.begin(), tags.end(), [](const auto& a, const auto& b) { return a.nucleus > b.nucleus; });
    for (const auto& tag : tags) {
      words[w] = tag.kind == ResourceKind::dieresis ? with_dieresis(words[w], tag.nucleus)
                                                    : with_syneresis(words[w], tag.nucleus);
    }
  }

  std::vector<bool> active(n - 1, false);
  for (std::size_t w = 0; w + 1 < n; ++w) active[w] = prep.synalepha_possible[w] && !dialefa[w];

  VerseScansion result;
  result.text = prep.text;
  if (prep.skipped_tokens) result.flags.emplace_back("skipped_token");

  Walk walk = walk_flat(words, active);
  if (allow_hemistich && walk.measure > options.hemistich_threshold) {
    bool found = false;
    for (const auto& split : options.splits.splits_for(walk.measure)) {
      Walk attempt = walk_hemistichs(words, active, split);
      if (attempt.ok) {
        walk = std::move(attempt);
        found = true;
        break;
      }
    }
    if (!found) result.flags.emplace_back("hemistich_unresolved");
  }

  result.measure = walk.measure;
  result.pattern = MetricalPattern{walk.stresses, walk.measure};
  if (!walk.splits.empty()) result.hemistichs = HemistichPlan{walk.splits};

  const auto is_break = [&](std::size_t w) {
    return std::find(walk.breaks.begin(), walk.breaks.end(), static_cast<int>(w)) != walk.breaks.end();
  };
  for (std::size_t w = 0; w + 1 < n; ++w) {
    const int last = prep.scans[w].syllable_count;
    const int word = static_cast<int>(w);
    if (is_break(w)) {
      result.resources.push_back({ResourceKind::hemistich_break, word, last});
      if (active[w]) result.resources.push_back({ResourceKind::hemistich_dialefa, word, last});
    } else if (active[w]) {
      result.resources.push_back({ResourceKind::synalepha, word, last});
    }
  }
  result.resources.insert(result.resources.end(), applied.begin(), applied.end());
  std::sort(result.resources.begin(), result.resources.end(), [](const ResourceTag& a, const ResourceTag& b) {
    return std::tie(a.word, a.nucleus, a.kind) < std::tie(b.word, b.nucleus, b.kind);
  });

  std::vector<bool> rendered_active = active;
  for (int b : walk.breaks) rendered_active[b] = false;
  result.tagged_text = render(prep, words, marks, rendered_active, dialefa, walk.breaks, false);
  result.stressed_text = render(prep, words, marks, rendered_active, dialefa, walk.breaks, true);

  result.words.reserve(n);
  for (std::size_t w = 0; w < n; ++w) result.words.push_back(ScannedWord{prep.tokens[w], std::move(words[w])});
  return result;
}

}  // namespace detail

VerseScansion scan_verse(std::string_view verse, const LexiconConfig& lexicon, bool allow_hemistich,
                         const VerseOptions& options) {
  const auto prep = detail::prepare(verse, lexicon, options);
  return detail::scan_prepared(prep, {}, allow_hemistich, options);
}

VerseScansion scan_with_resources(std::string_view verse, const LexiconConfig& lexicon,
                                  const std::vector<ResourceTag>& applied, bool allow_hemistich,
                                  const VerseOptions& options) {
  const auto prep = detail::prepare(verse, lexicon, options);
  return detail::scan_prepared(prep, applied, allow_hemistich, options);
}

}  // namespace escandir

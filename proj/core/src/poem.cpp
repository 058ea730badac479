#include "escandir/poem.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include "escandir/errors.hpp"

namespace escandir {

std::string_view to_string(PoemMode mode) {
  switch (mode) {
    case PoemMode::automatic: return "auto";
    case PoemMode::fixed: return "fixed";
    case PoemMode::mixed: return "mixed";
  }
  return "auto";
}

std::optional<PoemMode> parse_mode(std::string_view name) {
  if (name == "auto") return PoemMode::automatic;
  if (name == "fixed") return PoemMode::fixed;
  if (name == "mixed") return PoemMode::mixed;
  return std::nullopt;
}

std::set<int> frequent_measures(std::span<const int> measures) {
  std::map<int, int> counts;
  for (int m : measures) ++counts[m];
  std::set<int> out;
  const auto total = static_cast<long>(measures.size());
  for (const auto& [m, c] : counts) {
    if (c >= 2 && 4L * c >= total) out.insert(m);
  }
  if (out.empty() && !counts.empty()) {
    const auto mode = std::max_element(counts.begin(), counts.end(),
                                       [](const auto& a, const auto& b) { return a.second < b.second; });
    out.insert(mode->first);
  }
  return out;
}

namespace {

// Runs f(0..n-1) on a small pool; f must not throw.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

void mark_unscannable(PoemRow& row, const std::string& text, const std::string& why) {
  row.scansion = VerseScansion{};
  row.scansion.text = text;
  row.scansion.flags = {"unscannable"};
  row.error = why.empty() ? "unscannable" : why;
}

std::set<int> measures_between(const std::vector<PoemRow>& rows, std::size_t first, std::size_t last) {
  std::vector<int> measures;
  for (std::size_t i = first; i < last; ++i) {
    if (rows[i].ok()) measures.push_back(rows[i].scansion.measure);
  }
  return frequent_measures(measures);
}

}  // namespace

PoemAnalysis analyze_poem(std::span<const std::string> lines, const PoemOptions& options,
                          const LexiconConfig& lexicon, const Catalog& catalog) {
  if (options.window < 1) throw std::invalid_argument("window must be at least 1");

  PoemAnalysis analysis;
  std::vector<std::string> texts;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_blank(lines[i])) continue;
    PoemRow row;
    row.line = static_cast<int>(i) + 1;
    analysis.rows.push_back(std::move(row));
    texts.push_back(lines[i]);
  }
  auto& rows = analysis.rows;

  parallel_for(rows.size(), options.threads, [&](std::size_t i) {
    try {
      auto s = scan_verse(texts[i], lexicon, true, options.verse);
      s.match = match_pattern(s.pattern, catalog.lookup(s.measure));
      if (!s.match.matched_type) s.flags.emplace_back("no_canonical_match");
      rows[i].scansion = std::move(s);
    } catch (const std::exception& e) {
      mark_unscannable(rows[i], texts[i], e.what());
    }
  });

  analysis.frequent_measures = measures_between(rows, 0, rows.size());
  const bool forced = !options.forced_measures.empty();
  const auto& global = forced ? options.forced_measures : analysis.frequent_measures;
  bool fixed = options.mode == PoemMode::fixed;
  if (options.mode == PoemMode::automatic) fixed = global.size() == 1;
  analysis.is_fixed = fixed;

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (forced || fixed) {
      rows[i].applicable = global;
    } else {
      const auto window = static_cast<std::size_t>(options.window);
      rows[i].applicable = measures_between(rows, i > window ? i - window : 0, i);
    }
  }

  parallel_for(rows.size(), options.threads, [&](std::size_t i) {
    auto& row = rows[i];
    if (!row.ok() || row.applicable.empty() || row.applicable.contains(row.scansion.measure)) return;
    try {
      const std::vector<int> targets(row.applicable.begin(), row.applicable.end());
      row.scansion = analyze_verse(texts[i], lexicon, catalog, targets, options.verse);
      row.rescanned = true;
    } catch (const std::exception& e) {
      mark_unscannable(row, texts[i], e.what());
    }
  });
  return analysis;
}

PoemAnalysis analyze_text(std::string_view text, const PoemOptions& options, const LexiconConfig& lexicon,
                          const Catalog& catalog) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = end + 1;
  }
  return analyze_poem(lines, options, lexicon, catalog);
}

std::set<int> versal_tendency(const PoemAnalysis& analysis, const PoemOptions& options) {
  return options.forced_measures.empty() ? analysis.frequent_measures : options.forced_measures;
}

}  // namespace escandir

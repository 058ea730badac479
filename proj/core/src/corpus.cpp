#include "escandir/corpus.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "escandir/errors.hpp"

namespace escandir {

std::optional<CorpusFormat> parse_corpus_format(std::string_view name) {
  if (name == "dotted") return CorpusFormat::dotted;
  if (name == "signs") return CorpusFormat::signs;
  return std::nullopt;
}

namespace {

MetricalPattern parse_dotted_gold(std::string_view field) {
  MetricalPattern gold;
  const auto bar = field.find('|');
  gold.positions = parse_dotted(field.substr(0, bar));
  if (bar == std::string_view::npos) {
    gold.measure = gold.positions.back() + 1;
  } else {
    const auto measure = parse_dotted(field.substr(bar + 1));
    if (measure.size() != 1) throw std::invalid_argument("measure after '|' must be a single number");
    gold.measure = measure.front();
  }
  return gold;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text, CorpusFormat format, const std::string& source) {
  std::vector<CorpusEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line) || line.front() == '#') continue;
    const auto tab = line.rfind('\t');
    if (tab == std::string::npos) throw DataError(source, number, "expected verse and pattern separated by a tab");
    CorpusEntry entry;
    entry.verse = line.substr(0, tab);
    entry.line = number;
    if (is_blank(entry.verse)) throw DataError(source, number, "empty verse");
    try {
      const std::string_view field = std::string_view(line).substr(tab + 1);
      entry.gold = format == CorpusFormat::dotted ? parse_dotted_gold(field) : parse_signs(field);
    } catch (const std::invalid_argument& e) {
      throw DataError(source, number, e.what());
    }
    if (!entry.gold.is_valid()) throw DataError(source, number, "pattern positions exceed the measure");
    entries.push_back(std::move(entry));
  }
  if (entries.empty()) throw DataError(source, number, "corpus has no entries");
  return entries;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path.string(), 0, "cannot open corpus");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus(buffer.str(), format, path.string());
}

double EvalReport::accuracy_rounded() const { return std::round(accuracy.value() * 100.0) / 100.0; }

EvalReport evaluate(std::span<const CorpusEntry> entries, const PoemOptions& options, const LexiconConfig& lexicon,
                    const Catalog& catalog) {
  if (entries.empty()) throw std::invalid_argument("evaluation needs at least one entry");
  std::vector<std::string> verses;
  verses.reserve(entries.size());
  for (const auto& e : entries) verses.push_back(e.verse);

  const auto start = std::chrono::steady_clock::now();
  const auto analysis = analyze_poem(verses, options, lexicon, catalog);
  const auto stop = std::chrono::steady_clock::now();

  EvalReport report;
  report.total = entries.size();
  report.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& row = analysis.rows[i];
    if (row.ok() && row.scansion.pattern.positions == entries[i].gold.positions) {
      ++report.correct;
    } else {
      report.failures.push_back({entries[i], row.scansion});
    }
  }
  report.accuracy = Fraction{static_cast<std::int64_t>(report.correct), static_cast<std::int64_t>(report.total)};
  return report;
}

}  // namespace escandir

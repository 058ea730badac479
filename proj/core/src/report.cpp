#include "escandir/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "escandir/text.hpp"

namespace escandir {

namespace {

std::string number_text(double value) { return nlohmann::json(value).dump(); }

std::string join_set(const std::set<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out.empty() ? "-" : out;
}

std::string pad(const std::string& s, std::size_t width) {
  const auto length = utf8_decode(s).size();
  return length >= width ? s + ' ' : s + std::string(width - length, ' ');
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::string type_name(const VerseScansion& s) { return s.match.matched_type ? s.match.matched_type->name() : ""; }

}  // namespace

std::string format_annotated(const VerseScansion& scansion) {
  std::string out;
  const auto& extra = scansion.match.extrarrhythmic;
  const bool matched = scansion.match.matched_type.has_value();
  for (int p : scansion.pattern.positions) {
    if (!out.empty()) out += '.';
    const bool marked = matched && std::find(extra.begin(), extra.end(), p) != extra.end();
    out += marked ? "(" + std::to_string(p) + ")" : std::to_string(p);
  }
  return out;
}

std::string canonical_pattern(const VerseScansion& scansion) {
  if (!scansion.match.matched_type) return "";
  std::vector<int> kept;
  for (int p : scansion.pattern.positions) {
    const auto& extra = scansion.match.extrarrhythmic;
    if (std::find(extra.begin(), extra.end(), p) == extra.end()) kept.push_back(p);
  }
  return format_dotted(kept);
}

nlohmann::json row_to_json(const VerseScansion& s) {
  nlohmann::json resources = nlohmann::json::array();
  for (const auto& r : s.resources) {
    resources.push_back({{"kind", std::string(to_string(r.kind))}, {"word", r.word}, {"nucleus", r.nucleus}});
  }
  return {
      {"verse", s.text},
      {"tagged", s.tagged_text},
      {"syllables", s.measure},
      {"pattern", format_dotted(s.pattern.positions)},
      {"canonical_pattern", canonical_pattern(s)},
      {"type_name", type_name(s)},
      {"ratio", s.match.coincidence_ratio.value()},
      {"resources", std::move(resources)},
      {"flags", s.flags},
  };
}

std::string row_color(const VerseScansion& s, const std::set<int>& tendency) {
  if (s.has_flag("unscannable") || !tendency.contains(s.measure)) return "red";
  return s.match.matched_type && s.match.coincidence_ratio == Fraction{1, 1} ? "green" : "black";
}

nlohmann::json analysis_to_json(const PoemAnalysis& analysis) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : analysis.rows) rows.push_back(row_to_json(row.scansion));
  return rows;
}

std::string analysis_to_tsv(const PoemAnalysis& analysis) {
  std::ostringstream out;
  out << "verse\ttagged\tsyllables\tpattern\tcanonical_pattern\ttype_name\tratio\n";
  for (const auto& row : analysis.rows) {
    const auto& s = row.scansion;
    out << one_line(s.text) << '\t' << one_line(s.tagged_text) << '\t' << s.measure << '\t'
        << format_dotted(s.pattern.positions) << '\t' << canonical_pattern(s) << '\t' << type_name(s) << '\t'
        << number_text(s.match.coincidence_ratio.value()) << '\n';
  }
  return out.str();
}

std::string analysis_to_pretty(const PoemAnalysis& analysis, const std::set<int>& tendency) {
  std::ostringstream out;
  out << "tendency " << join_set(tendency) << "  frequent " << join_set(analysis.frequent_measures)
      << "  " << (analysis.is_fixed ? "fixed" : "polymetric") << "\n";
  for (const auto& row : analysis.rows) {
    const auto& s = row.scansion;
    out << pad(std::to_string(row.line), 5) << pad(row_color(s, tendency), 6);
    if (!row.ok()) {
      out << "unscannable  " << s.text << "\n";
      continue;
    }
    out << pad(std::to_string(s.measure), 4) << pad(format_annotated(s), 22) << pad(type_name(s), 24)
        << pad(s.match.coincidence_ratio.str(), 6) << s.stressed_text;
    if (!s.flags.empty()) {
      out << "  [";
      for (std::size_t i = 0; i < s.flags.size(); ++i) out << (i ? " " : "") << s.flags[i];
      out << "]";
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::json eval_report_to_json(const EvalReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({
        {"line", f.entry.line},
        {"verse", f.entry.verse},
        {"gold", format_dotted(f.entry.gold.positions)},
        {"produced", format_dotted(f.produced.pattern.positions)},
        {"tagged", f.produced.tagged_text},
        {"flags", f.produced.flags},
    });
  }
  return {
      {"total", report.total},
      {"correct", report.correct},
      {"accuracy", report.accuracy.value()},
      {"accuracy_rounded", report.accuracy_rounded()},
      {"elapsed_seconds", report.elapsed_seconds},
      {"failures", std::move(failures)},
  };
}

std::string eval_report_to_text(const EvalReport& report, std::size_t max_failures) {
  std::ostringstream out;
  out << "verses    " << report.total << "\n"
      << "correct   " << report.correct << "\n"
      << "accuracy  " << number_text(report.accuracy_rounded()) << " (" << number_text(report.accuracy.value())
      << ")\n"
      << "elapsed   " << number_text(report.elapsed_seconds) << " s\n";
  const auto shown = std::min(max_failures, report.failures.size());
  if (shown > 0) out << "first " << shown << " of " << report.failures.size() << " failures:\n";
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& f = report.failures[i];
    out << "  line " << f.entry.line << ": gold " << format_dotted(f.entry.gold.positions) << ", got "
        << format_dotted(f.produced.pattern.positions) << "  " << f.produced.tagged_text << "\n";
  }
  return out.str();
}

nlohmann::json handle_analyze(const nlohmann::json& request, const PoemOptions& defaults,
                              const LexiconConfig& lexicon, const Catalog& catalog) {
  if (!request.is_object()) throw std::invalid_argument("request must be a JSON object");
  if (!request.contains("poem") || !request["poem"].is_string()) {
    throw std::invalid_argument("\"poem\" must be a string");
  }
  PoemOptions options = defaults;
  if (request.contains("window")) {
    const auto& w = request["window"];
    if (!w.is_number_integer() || w.get<long long>() < 1) {
      throw std::invalid_argument("\"window\" must be a positive integer");
    }
    options.window = w.get<int>();
  }
  if (request.contains("measures") && !request["measures"].is_null()) {
    const auto& m = request["measures"];
    if (!m.is_array()) throw std::invalid_argument("\"measures\" must be an array of positive integers");
    options.forced_measures.clear();
    for (const auto& v : m) {
      if (!v.is_number_integer() || v.get<long long>() < 2) {
        throw std::invalid_argument("\"measures\" must be an array of integers of at least 2");
      }
      options.forced_measures.insert(v.get<int>());
    }
  }
  if (request.contains("mode")) {
    const auto& m = request["mode"];
    const auto mode = m.is_string() ? parse_mode(m.get<std::string>()) : std::nullopt;
    if (!mode) throw std::invalid_argument("\"mode\" must be one of auto, fixed, mixed");
    options.mode = *mode;
  }

  const auto analysis = analyze_text(request["poem"].get<std::string>(), options, lexicon, catalog);
  const auto tendency = versal_tendency(analysis, options);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : analysis.rows) {
    auto j = row_to_json(row.scansion);
    j["line"] = row.line;
    j["color"] = row_color(row.scansion, tendency);
    rows.push_back(std::move(j));
  }
  return {
      {"rows", std::move(rows)},
      {"tendency", tendency},
      {"frequent_measures", analysis.frequent_measures},
      {"is_fixed", analysis.is_fixed},
  };
}

}  // namespace escandir

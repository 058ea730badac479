#include "escandir/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "escandir/bundled_data.hpp"
#include "escandir/errors.hpp"

namespace escandir {

std::string Fraction::str() const {
  const auto g = std::gcd(num, den);
  const auto n = g == 0 ? num : num / g;
  const auto d = g == 0 ? den : den / g;
  return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d);
}

bool MetricalPattern::is_valid() const {
  if (measure < 1) return false;
  int prev = 0;
  for (int p : positions) {
    if (p <= prev || p > measure) return false;
    prev = p;
  }
  return true;
}

bool MetricalPattern::is_well_formed() const {
  return is_valid() && std::find(positions.begin(), positions.end(), measure - 1) != positions.end();
}

std::string PatternType::name() const { return variant.empty() ? family : family + " " + variant; }

Catalog::Catalog(std::vector<PatternType> entries) : entries_(std::move(entries)) {}

const Catalog& Catalog::bundled() {
  static const Catalog catalog = parse(data::catalog(), "bundled catalog.tsv");
  return catalog;
}

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    parts.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: \"" + std::string(s) + "\"");
  }
  return value;
}

}  // namespace

Catalog Catalog::parse(std::string_view text, const std::string& source) {
  std::vector<PatternType> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 4) throw DataError(source, number, "expected 4 tab-separated fields");
    PatternType type;
    try {
      type.measure = parse_int(fields[0]);
      type.stresses = parse_dotted(trim(fields[3]));
    } catch (const std::invalid_argument& e) {
      throw DataError(source, number, e.what());
    }
    type.family = std::string(trim(fields[1]));
    type.variant = std::string(trim(fields[2]));
    if (type.measure < 2) throw DataError(source, number, "measure must be at least 2");
    if (type.stresses.back() > type.measure ||
        std::find(type.stresses.begin(), type.stresses.end(), type.measure - 1) == type.stresses.end()) {
      throw DataError(source, number, "stresses must lie within the measure and include measure - 1");
    }
    entries.push_back(std::move(type));
  }
  return Catalog(std::move(entries));
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string(), 0, "cannot open catalog");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path.string());
}

std::vector<PatternType> Catalog::lookup(int measure) const {
  if (measure < 2) throw std::invalid_argument("catalog lookup needs a measure of at least 2");
  std::vector<PatternType> out;
  for (const auto& e : entries_) {
    if (e.measure == measure) out.push_back(e);
  }
  if (out.empty()) out.push_back(PatternType{measure, "genérico", "", {measure - 1}});
  return out;
}

MatchResult match_pattern(const MetricalPattern& pattern, std::span<const PatternType> candidates) {
  const auto& p = pattern.positions;
  const int final_stress = pattern.measure - 1;
  const bool has_final = std::binary_search(p.begin(), p.end(), final_stress);

  const PatternType* best = nullptr;
  Fraction best_ratio;
  bool best_subset = false;
  for (const auto& type : candidates) {
    const auto& t = type.stresses;
    if (!has_final || !std::binary_search(t.begin(), t.end(), final_stress)) continue;
    std::vector<int> common;
    std::set_intersection(p.begin(), p.end(), t.begin(), t.end(), std::back_inserter(common));
    const auto inter = static_cast<std::int64_t>(common.size());
    const auto uni = static_cast<std::int64_t>(p.size() + t.size()) - inter;
    const Fraction ratio{inter, uni};
    const bool subset = common.size() == t.size();
    bool better = best == nullptr || ratio > best_ratio;
    if (!better && ratio == best_ratio) {
      if (subset != best_subset) {
        better = subset;
      } else {
        better = t.size() > best->stresses.size();
      }
    }
    if (better) {
      best = &type;
      best_ratio = ratio;
      best_subset = subset;
    }
  }

  MatchResult result;
  if (best == nullptr) {
    result.coincidence_ratio = Fraction{0, 1};
    result.extrarrhythmic = p;
    return result;
  }
  result.matched_type = *best;
  result.coincidence_ratio = best_ratio;
  std::set_difference(p.begin(), p.end(), best->stresses.begin(), best->stresses.end(),
                      std::back_inserter(result.extrarrhythmic));
  return result;
}

std::string format_dotted(std::span<const int> positions) {
  std::string out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(positions[i]);
  }
  return out;
}

std::vector<int> parse_dotted(std::string_view dotted) {
  dotted = trim(dotted);
  if (dotted.empty()) throw std::invalid_argument("empty pattern");
  std::vector<int> positions;
  for (const auto& part : split(dotted, '.')) {
    const int value = parse_int(part);
    if (value < 1) throw std::invalid_argument("pattern positions must be positive");
    if (!positions.empty() && value <= positions.back()) {
      throw std::invalid_argument("pattern positions must be strictly increasing");
    }
    positions.push_back(value);
  }
  return positions;
}

std::string format_signs(const MetricalPattern& pattern) {
  std::string out(static_cast<std::size_t>(std::max(pattern.measure, 0)), '-');
  for (int p : pattern.positions) {
    if (p >= 1 && p <= pattern.measure) out[static_cast<std::size_t>(p - 1)] = '+';
  }
  return out;
}

MetricalPattern parse_signs(std::string_view signs) {
  signs = trim(signs);
  if (signs.empty()) throw std::invalid_argument("empty pattern");
  MetricalPattern pattern;
  pattern.measure = static_cast<int>(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == '+') {
      pattern.positions.push_back(static_cast<int>(i) + 1);
    } else if (signs[i] != '-') {
      throw std::invalid_argument(std::string("unexpected character '") + signs[i] + "' in stress signs");
    }
  }
  if (pattern.positions.empty()) throw std::invalid_argument("pattern has no stressed position");
  return pattern;
}

}  // namespace escandir

#include "escandir/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "escandir/bundled_data.hpp"
#include "escandir/errors.hpp"
#include "escandir/text.hpp"

namespace escandir {

LexiconConfig::LexiconConfig(std::set<std::string> atonic, std::set<std::string> forced_tonic, bool oh_is_tonic,
                             std::set<std::string> mente_exceptions)
    : oh_is_tonic_(oh_is_tonic) {
  for (const auto& w : forced_tonic) forced_tonic_.insert(normalize_word(w));
  if (!oh_is_tonic) atonic.insert("oh");
  for (const auto& w : atonic) {
    auto n = normalize_word(w);
    if (!n.empty() && !forced_tonic_.contains(n)) atonic_.insert(std::move(n));
  }
  for (const auto& w : mente_exceptions) mente_exceptions_.insert(normalize_word(w));
}

LexiconConfig LexiconConfig::standard(bool oh_is_tonic) {
  return LexiconConfig(parse_word_list(data::atonic_words()), {}, oh_is_tonic,
                       parse_word_list(data::mente_exceptions()));
}

bool LexiconConfig::is_atonic(std::string_view normalized_word) const {
  return atonic_.find(normalized_word) != atonic_.end();
}

bool LexiconConfig::is_mente_exception(std::string_view normalized_word) const {
  return mente_exceptions_.find(normalized_word) != mente_exceptions_.end();
}

std::set<std::string> parse_word_list(std::string_view text) {
  std::set<std::string> words;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto word = normalize_word(line);
    if (!word.empty()) words.insert(std::move(word));
  }
  return words;
}

std::set<std::string> load_word_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string(), 0, "cannot open word list");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_word_list(buffer.str());
}

}  // namespace escandir

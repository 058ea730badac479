#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

namespace escandir {

/// Which words carry no metric stress. Immutable once built; safe to share
/// across threads.
class LexiconConfig {
 public:
  /// Empty lexicon: every word is tonic.
  LexiconConfig() = default;

  /// Words in `forced_tonic` are removed from `atonic`. With `oh_is_tonic`
  /// false, "oh" joins the atonic set unless forced tonic.
  LexiconConfig(std::set<std::string> atonic, std::set<std::string> forced_tonic, bool oh_is_tonic = true,
                std::set<std::string> mente_exceptions = {});

  /// Bundled atonic list and "-mente" exceptions.
  static LexiconConfig standard(bool oh_is_tonic = true);

  bool is_atonic(std::string_view normalized_word) const;
  bool is_mente_exception(std::string_view normalized_word) const;

  const std::set<std::string, std::less<>>& atonic_words() const { return atonic_; }
  const std::set<std::string, std::less<>>& forced_tonic_words() const { return forced_tonic_; }
  bool oh_is_tonic() const { return oh_is_tonic_; }

 private:
  std::set<std::string, std::less<>> atonic_;
  std::set<std::string, std::less<>> forced_tonic_;
  std::set<std::string, std::less<>> mente_exceptions_;
  bool oh_is_tonic_ = true;
};

/// One normalized word per line, UTF-8, '#' starts a comment.
std::set<std::string> parse_word_list(std::string_view text);
std::set<std::string> load_word_list(const std::filesystem::path& path);

}  // namespace escandir

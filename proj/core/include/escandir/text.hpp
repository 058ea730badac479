#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace escandir {

/// UTF-8 <-> UTF-32 conversion. Invalid sequences decode to U+FFFD.
std::u32string utf8_decode(std::string_view text);
std::string utf8_encode(std::u32string_view text);
std::string utf8_encode(char32_t c);

/// Folds combining grave, acute, circumflex, tilde and diaeresis marks into
/// the precomposed Latin-1 letter when one exists (NFC for the Spanish subset).
std::u32string compose(std::u32string_view text);

char32_t to_lower(char32_t c);
char32_t to_upper(char32_t c);
std::u32string to_lower(std::u32string_view text);

bool is_apostrophe(char32_t c);
/// Letters, digits and combining marks. Apostrophes are handled separately.
bool is_word_char(char32_t c);

/// Lowercase, composed, with leading and trailing punctuation stripped.
/// Internal apostrophes survive. Returns "" for punctuation-only tokens.
std::string normalize_word(std::string_view raw);

/// One word of a verse, split into the punctuation around it and its core.
/// `core` keeps the original case; `normalized` is its lowercase form and has
/// the same length in code points, so offsets into one are offsets into the other.
struct VerseToken {
  std::u32string prefix;
  std::u32string core;
  std::u32string suffix;
  std::string normalized;
};

/// Splits a verse into word tokens. Whitespace separates tokens; punctuation
/// inside a run (other than apostrophes between letters) also splits it.
/// Punctuation-only runs attach to the neighbouring tokens.
std::vector<VerseToken> tokenize_verse(std::string_view verse);

/// True when `text` is empty or whitespace only.
bool is_blank(std::string_view text);

}  // namespace escandir

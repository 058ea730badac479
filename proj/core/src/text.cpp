#include "escandir/text.hpp"

#include <array>
#include <cstdint>

namespace escandir {

std::u32string utf8_decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    int extra = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      cp = lead & 0x1F;
      extra = 1;
    } else if ((lead & 0xF0) == 0xE0) {
      cp = lead & 0x0F;
      extra = 2;
    } else if ((lead & 0xF8) == 0xF0) {
      cp = lead & 0x07;
      extra = 3;
    } else {
      out.push_back(U'�');
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      if (i + k >= text.size()) {
        ok = false;
        break;
      }
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (!ok) {
      out.push_back(U'�');
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string utf8_encode(char32_t c) {
  std::string out;
  const auto cp = static_cast<std::uint32_t>(c);
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string utf8_encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) out += utf8_encode(c);
  return out;
}

namespace {

struct Composition {
  char32_t base;
  char32_t mark;
  char32_t composed;
};

constexpr std::array kCompositions = {
    // acute
    Composition{U'a', 0x301, U'á'}, Composition{U'e', 0x301, U'é'},
    Composition{U'i', 0x301, U'í'}, Composition{U'o', 0x301, U'ó'},
    Composition{U'u', 0x301, U'ú'}, Composition{U'y', 0x301, U'ý'},
    Composition{U'A', 0x301, U'Á'}, Composition{U'E', 0x301, U'É'},
    Composition{U'I', 0x301, U'Í'}, Composition{U'O', 0x301, U'Ó'},
    Composition{U'U', 0x301, U'Ú'}, Composition{U'Y', 0x301, U'Ý'},
    // grave
    Composition{U'a', 0x300, U'à'}, Composition{U'e', 0x300, U'è'},
    Composition{U'i', 0x300, U'ì'}, Composition{U'o', 0x300, U'ò'},
    Composition{U'u', 0x300, U'ù'}, Composition{U'A', 0x300, U'À'},
    Composition{U'E', 0x300, U'È'}, Composition{U'I', 0x300, U'Ì'},
    Composition{U'O', 0x300, U'Ò'}, Composition{U'U', 0x300, U'Ù'},
    // circumflex
    Composition{U'a', 0x302, U'â'}, Composition{U'e', 0x302, U'ê'},
    Composition{U'i', 0x302, U'î'}, Composition{U'o', 0x302, U'ô'},
    Composition{U'u', 0x302, U'û'}, Composition{U'A', 0x302, U'Â'},
    Composition{U'E', 0x302, U'Ê'}, Composition{U'I', 0x302, U'Î'},
    Composition{U'O', 0x302, U'Ô'}, Composition{U'U', 0x302, U'Û'},
    // tilde
    Composition{U'n', 0x303, U'ñ'}, Composition{U'N', 0x303, U'Ñ'},
    Composition{U'a', 0x303, U'ã'}, Composition{U'o', 0x303, U'õ'},
    Composition{U'A', 0x303, U'Ã'}, Composition{U'O', 0x303, U'Õ'},
    // diaeresis
    Composition{U'a', 0x308, U'ä'}, Composition{U'e', 0x308, U'ë'},
    Composition{U'i', 0x308, U'ï'}, Composition{U'o', 0x308, U'ö'},
    Composition{U'u', 0x308, U'ü'}, Composition{U'y', 0x308, U'ÿ'},
    Composition{U'A', 0x308, U'Ä'}, Composition{U'E', 0x308, U'Ë'},
    Composition{U'I', 0x308, U'Ï'}, Composition{U'O', 0x308, U'Ö'},
    Composition{U'U', 0x308, U'Ü'},
};

bool is_combining_mark(char32_t c) { return c >= 0x300 && c <= 0x36F; }

}  // namespace

std::u32string compose(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    if (is_combining_mark(c) && !out.empty()) {
      bool merged = false;
      for (const auto& entry : kCompositions) {
        if (entry.base == out.back() && entry.mark == c) {
          out.back() = entry.composed;
          merged = true;
          break;
        }
      }
      if (merged) continue;
    }
    out.push_back(c);
  }
  return out;
}

char32_t to_lower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  // Latin Extended-A pairs upper/lower on even/odd code points.
  if (c >= 0x100 && c <= 0x17F && c % 2 == 0 && c != 0x130 && c != 0x138) return c + 1;
  return c;
}

char32_t to_upper(char32_t c) {
  if (c >= U'a' && c <= U'z') return c - 32;
  if (c >= 0xE0 && c <= 0xFE && c != 0xF7) return c - 32;
  if (c >= 0x101 && c <= 0x17F && c % 2 == 1 && c != 0x131 && c != 0x138) return c - 1;
  return c;
}

std::u32string to_lower(std::u32string_view text) {
  std::u32string out(text);
  for (auto& c : out) c = to_lower(c);
  return out;
}

bool is_apostrophe(char32_t c) { return c == U'\'' || c == 0x2019; }

bool is_word_char(char32_t c) {
  if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') || (c >= U'0' && c <= U'9')) return true;
  if (c >= 0xC0 && c <= 0x24F && c != 0xD7 && c != 0xF7) return true;
  return is_combining_mark(c);
}

namespace {

bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' || c == U'\v' ||
         c == 0xA0 || c == 0x2009 || c == 0x200A || c == 0x202F || c == 0x3000;
}

// Start and end offsets of the word-character runs in `chunk`. Apostrophes
// count as word characters only when flanked by word characters.
std::vector<std::pair<std::size_t, std::size_t>> word_runs(std::u32string_view chunk) {
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  std::size_t i = 0;
  while (i < chunk.size()) {
    if (!is_word_char(chunk[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < chunk.size()) {
      if (is_word_char(chunk[j])) {
        ++j;
      } else if (is_apostrophe(chunk[j]) && j + 1 < chunk.size() && is_word_char(chunk[j + 1])) {
        ++j;
      } else {
        break;
      }
    }
    runs.emplace_back(i, j);
    i = j;
  }
  return runs;
}

}  // namespace

std::string normalize_word(std::string_view raw) {
  const auto chars = compose(utf8_decode(raw));
  const auto runs = word_runs(chars);
  if (runs.empty()) return {};
  // Everything between the first and last word character, so internal
  // apostrophes (and any internal punctuation) stay.
  const auto begin = runs.front().first;
  const auto end = runs.back().second;
  return utf8_encode(to_lower(std::u32string_view(chars).substr(begin, end - begin)));
}

std::vector<VerseToken> tokenize_verse(std::string_view verse) {
  const auto chars = compose(utf8_decode(verse));
  std::vector<VerseToken> tokens;
  std::u32string pending_prefix;

  std::size_t i = 0;
  while (i < chars.size()) {
    while (i < chars.size() && is_space(chars[i])) ++i;
    std::size_t j = i;
    while (j < chars.size() && !is_space(chars[j])) ++j;
    if (j == i) break;
    const std::u32string_view chunk(chars.data() + i, j - i);
    i = j;

    const auto runs = word_runs(chunk);
    if (runs.empty()) {
      // A stand-alone "/" or "|" marks a hemistich in edited texts; the
      // scansion renders its own pause, so the mark itself is dropped.
      if (chunk == U"/" || chunk == U"|" || chunk == U"//") continue;
      if (!tokens.empty()) {
        tokens.back().suffix += U' ';
        tokens.back().suffix += chunk;
      } else {
        pending_prefix += chunk;
        pending_prefix += U' ';
      }
      continue;
    }
    std::size_t cursor = 0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
      VerseToken token;
      token.prefix = std::u32string(chunk.substr(cursor, runs[r].first - cursor));
      if (r == 0 && !pending_prefix.empty()) {
        token.prefix = pending_prefix + token.prefix;
        pending_prefix.clear();
      }
      token.core = std::u32string(chunk.substr(runs[r].first, runs[r].second - runs[r].first));
      const auto suffix_end = r + 1 < runs.size() ? runs[r + 1].first : chunk.size();
      token.suffix = std::u32string(chunk.substr(runs[r].second, suffix_end - runs[r].second));
      cursor = suffix_end;
      token.normalized = utf8_encode(to_lower(token.core));
      tokens.push_back(std::move(token));
    }
  }
  return tokens;
}

bool is_blank(std::string_view text) {
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n' && c != '\f' && c != '\v') return false;
  }
  return true;
}

}  // namespace escandir

#pragma once

#include <stdexcept>
#include <string>

namespace escandir {

/// A word or verse with nothing the engine can count (no vowel nucleus, or
/// a verse without any stressed word).
class UnscannableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed data file: catalog, lexicon, split table or corpus.
class DataError : public std::runtime_error {
 public:
  DataError(const std::string& source, int line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace escandir

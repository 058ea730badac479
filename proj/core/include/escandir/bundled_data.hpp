#pragma once

#include <string_view>

// Text of the data files under core/data, compiled into the library so the
// engine works without any files on disk. Each can be overridden at runtime.
namespace escandir::data {

std::string_view atonic_words();
std::string_view mente_exceptions();
std::string_view catalog();
std::string_view hemistich_splits();

}  // namespace escandir::data

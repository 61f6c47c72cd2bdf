#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace clir::utf8 {

// One decoded code point together with the bytes it came from. Malformed
// input decodes byte-by-byte to U+FFFD so that `bytes` always tiles the
// original string.
struct CodePoint {
  char32_t value;
  std::string_view bytes;
};

std::vector<CodePoint> decode(std::string_view text);

std::string encode(char32_t cp);

// Number of code points.
std::size_t length(std::string_view text);

}  // namespace clir::utf8

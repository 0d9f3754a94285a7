#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace stylo::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes the codepoint starting at s[i]; advances i past it. Invalid bytes
// decode as U+FFFD and consume one byte.
char32_t decode(std::string_view s, std::size_t& i);

void append(std::string& out, char32_t cp);

// Number of Unicode scalar values in the string.
std::size_t length(std::string_view s);

}  // namespace stylo::utf8

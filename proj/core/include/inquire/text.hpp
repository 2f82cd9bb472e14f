#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// UTF-8 text helpers shared by the prompt, validation and export layers.
namespace inquire::text {

inline constexpr char32_t kReplacementChar = 0xFFFD;

/// Decodes one code point starting at `pos` and advances `pos` past it.
/// Malformed sequences yield U+FFFD and advance by one byte.
char32_t decode_utf8(std::string_view s, std::size_t& pos);

void append_utf8(std::string& out, char32_t cp);

/// Whitespace, control characters, and invisible formatting marks
/// (zero-width spaces, bidi controls, BOM).
bool is_invisible(char32_t cp);

/// True when `s` holds nothing a reader could see.
bool is_blank(std::string_view s);

std::string_view trim_ascii(std::string_view s);

std::size_t codepoint_count(std::string_view s);

/// Longest prefix of `s` holding at most `max_codepoints` code points.
std::string_view utf8_prefix(std::string_view s, std::size_t max_codepoints);

/// Splits on `.`, `?` or `!` followed by whitespace or end of text.
/// Pieces are trimmed; empty pieces are dropped.
std::vector<std::string_view> split_sentences(std::string_view s);

std::size_t count_occurrences(std::string_view haystack, std::string_view needle);

}  // namespace inquire::text

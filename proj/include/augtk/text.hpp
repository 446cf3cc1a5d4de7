#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace augtk {

// Writing-system category assigned by Unicode code-point block. Every code
// point maps to exactly one category; Latin covers ASCII letters only.
enum class Script {
    Devanagari,
    Gujarati,
    Telugu,
    Arabic,
    Latin,
    Other,
};

const char* script_name(Script script);
std::optional<Script> script_from_name(std::string_view name);

// Category of the single code point `cp`.
Script script_of(char32_t cp);

// True when `cp` counts toward the letter denominator of dominant_script:
// whitespace, digits (ASCII and in-block), and punctuation are excluded.
bool is_letter(char32_t cp);

// Unicode whitespace (the token separator set).
bool is_space(char32_t cp);

// Decodes one UTF-8 sequence starting at text[pos]. Returns the code point
// and advances pos. Invalid bytes decode as U+FFFD and consume one byte.
char32_t decode_utf8(std::string_view text, std::size_t& pos);

// All code points of `text` in order.
std::vector<char32_t> code_points(std::string_view text);

// Splits on runs of Unicode whitespace. Tokens keep their original bytes, so
// grapheme clusters and attached punctuation stay intact. No empty tokens.
std::vector<std::string> tokenize(std::string_view text);

// Joins with single spaces. tokenize(detokenize(t)) == t for any token list
// whose tokens contain no internal whitespace.
std::string detokenize(const std::vector<std::string>& tokens);

// Strips leading and trailing Unicode whitespace.
std::string trim(std::string_view text);

// The most frequent script among letter code points, and its share of all
// letter code points. Input with no letters yields (Other, 0). Count ties
// resolve to the smaller enum value.
std::pair<Script, double> dominant_script(std::string_view text);

// True iff dominant_script(text) == (expected, r) with r >= min_ratio.
// min_ratio must lie in (0, 1].
bool validate_language(std::string_view text, Script expected, double min_ratio);

}  // namespace augtk

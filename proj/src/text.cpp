#include "augtk/text.hpp"

#include <array>
#include <stdexcept>

namespace augtk {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool in_range(char32_t cp, char32_t lo, char32_t hi) {
    return cp >= lo && cp <= hi;
}

// Digits and punctuation inside the Indic/Arabic blocks; these belong to the
// script visually but do not count as letters.
bool is_block_non_letter(char32_t cp) {
    return in_range(cp, 0x0964, 0x0965) ||  // dandas
           in_range(cp, 0x0966, 0x096F) ||  // Devanagari digits
           cp == 0x0970 ||                  // Devanagari abbreviation sign
           in_range(cp, 0x0AE6, 0x0AEF) ||  // Gujarati digits
           cp == 0x0AF0 ||                  // Gujarati abbreviation sign
           in_range(cp, 0x0C66, 0x0C6F) ||  // Telugu digits
           in_range(cp, 0x0660, 0x0669) ||  // Arabic-Indic digits
           in_range(cp, 0x06F0, 0x06F9) ||  // extended Arabic-Indic digits
           cp == 0x060C || cp == 0x061B || cp == 0x061F ||  // , ; ?
           in_range(cp, 0x066A, 0x066D);    // %, decimal/thousands, star
}

}  // namespace

const char* script_name(Script script) {
    switch (script) {
        case Script::Devanagari: return "devanagari";
        case Script::Gujarati: return "gujarati";
        case Script::Telugu: return "telugu";
        case Script::Arabic: return "arabic";
        case Script::Latin: return "latin";
        case Script::Other: return "other";
    }
    return "other";
}

std::optional<Script> script_from_name(std::string_view name) {
    if (name == "devanagari") return Script::Devanagari;
    if (name == "gujarati") return Script::Gujarati;
    if (name == "telugu") return Script::Telugu;
    if (name == "arabic") return Script::Arabic;
    if (name == "latin") return Script::Latin;
    if (name == "other") return Script::Other;
    return std::nullopt;
}

Script script_of(char32_t cp) {
    if (in_range(cp, 0x0900, 0x097F)) return Script::Devanagari;
    if (in_range(cp, 0x0A80, 0x0AFF)) return Script::Gujarati;
    if (in_range(cp, 0x0C00, 0x0C7F)) return Script::Telugu;
    if (in_range(cp, 0x0600, 0x06FF) || in_range(cp, 0x0750, 0x077F))
        return Script::Arabic;
    if (in_range(cp, 'A', 'Z') || in_range(cp, 'a', 'z')) return Script::Latin;
    return Script::Other;
}

bool is_space(char32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
        case 0x20: case 0x85: case 0xA0:
        case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F:
        case 0x3000:
            return true;
        default:
            return in_range(cp, 0x2000, 0x200A);
    }
}

bool is_letter(char32_t cp) {
    if (is_space(cp)) return false;
    switch (script_of(cp)) {
        case Script::Latin:
            return true;  // restricted to ASCII letters already
        case Script::Devanagari:
        case Script::Gujarati:
        case Script::Telugu:
        case Script::Arabic:
            return !is_block_non_letter(cp);
        case Script::Other:
            break;
    }
    // Outside the named blocks only non-ASCII code points can be letters.
    // ASCII digits/punctuation, general punctuation, and the replacement
    // character are excluded; other foreign-script code points count so that
    // e.g. Cyrillic text still produces a denominator.
    if (cp < 0x80) return false;
    if (in_range(cp, 0x2000, 0x206F)) return false;  // general punctuation
    if (cp == kReplacement) return false;
    return true;
}

char32_t decode_utf8(std::string_view text, std::size_t& pos) {
    const auto byte = [&](std::size_t i) {
        return static_cast<unsigned char>(text[i]);
    };
    const unsigned char b0 = byte(pos);
    if (b0 < 0x80) {
        ++pos;
        return b0;
    }
    std::size_t len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) { len = 2; cp = b0 & 0x1F; }
    else if ((b0 & 0xF0) == 0xE0) { len = 3; cp = b0 & 0x0F; }
    else if ((b0 & 0xF8) == 0xF0) { len = 4; cp = b0 & 0x07; }
    else { ++pos; return kReplacement; }

    if (pos + len > text.size()) { ++pos; return kReplacement; }
    for (std::size_t i = 1; i < len; ++i) {
        const unsigned char b = byte(pos + i);
        if ((b & 0xC0) != 0x80) { ++pos; return kReplacement; }
        cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong encodings and surrogates.
    static constexpr std::array<char32_t, 5> min_cp{0, 0, 0x80, 0x800, 0x10000};
    if (cp < min_cp[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        ++pos;
        return kReplacement;
    }
    pos += len;
    return cp;
}

std::vector<char32_t> code_points(std::string_view text) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) out.push_back(decode_utf8(text, pos));
    return out;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    std::size_t token_start = 0;
    bool in_token = false;
    while (pos < text.size()) {
        const std::size_t cp_start = pos;
        const char32_t cp = decode_utf8(text, pos);
        if (is_space(cp)) {
            if (in_token) {
                tokens.emplace_back(text.substr(token_start, cp_start - token_start));
                in_token = false;
            }
        } else if (!in_token) {
            token_start = cp_start;
            in_token = true;
        }
    }
    if (in_token) tokens.emplace_back(text.substr(token_start));
    return tokens;
}

std::string detokenize(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) out += ' ';
        out += tokens[i];
    }
    return out;
}

std::string trim(std::string_view text) {
    std::size_t begin = 0;
    std::size_t first_non_space = text.size();
    std::size_t end_of_last_non_space = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        begin = pos;
        const char32_t cp = decode_utf8(text, pos);
        if (!is_space(cp)) {
            if (first_non_space == text.size()) first_non_space = begin;
            end_of_last_non_space = pos;
        }
    }
    if (first_non_space == text.size()) return {};
    return std::string(text.substr(first_non_space,
                                   end_of_last_non_space - first_non_space));
}

std::pair<Script, double> dominant_script(std::string_view text) {
    std::array<std::size_t, 6> counts{};
    std::size_t total = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char32_t cp = decode_utf8(text, pos);
        if (!is_letter(cp)) continue;
        ++counts[static_cast<std::size_t>(script_of(cp))];
        ++total;
    }
    if (total == 0) return {Script::Other, 0.0};
    std::size_t best = 0;
    for (std::size_t i = 1; i < counts.size(); ++i) {
        if (counts[i] > counts[best]) best = i;
    }
    return {static_cast<Script>(best),
            static_cast<double>(counts[best]) / static_cast<double>(total)};
}

bool validate_language(std::string_view text, Script expected, double min_ratio) {
    if (min_ratio <= 0.0 || min_ratio > 1.0)
        throw std::invalid_argument("validate_language: min_ratio must be in (0, 1]");
    const auto [script, ratio] = dominant_script(text);
    return script == expected && ratio >= min_ratio;
}

}  // namespace augtk

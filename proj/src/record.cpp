#include "augtk/record.hpp"

#include <array>
#include <cstdio>

namespace augtk {

namespace {
constexpr std::array<const char*, kTechniqueCount> kNames = {
    "sr", "ri", "rs", "rd", "backtranslate", "paraphrase", "expand", "generate",
};
}

const char* technique_name(Technique technique) {
    return kNames[static_cast<std::size_t>(technique)];
}

std::optional<Technique> technique_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (name == kNames[i]) return static_cast<Technique>(i);
    }
    return std::nullopt;
}

std::vector<Technique> all_techniques() {
    std::vector<Technique> out;
    out.reserve(kTechniqueCount);
    for (std::size_t i = 0; i < kTechniqueCount; ++i)
        out.push_back(static_cast<Technique>(i));
    return out;
}

std::string digest(std::string_view canonical_params) {
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (const char c : canonical_params) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace augtk

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace augtk {

// The eight augmentation techniques. CLI names match the comparison-table
// row labels.
enum class Technique {
    SynonymReplacement,
    RandomInsertion,
    RandomSwap,
    RandomDeletion,
    BackTranslate,
    Paraphrase,
    Expand,
    Generate,
};

inline constexpr std::size_t kTechniqueCount = 8;

const char* technique_name(Technique technique);
std::optional<Technique> technique_from_name(std::string_view name);
std::vector<Technique> all_techniques();

inline bool is_eda(Technique t) {
    return t == Technique::SynonymReplacement || t == Technique::RandomInsertion ||
           t == Technique::RandomSwap || t == Technique::RandomDeletion;
}

// Provenance-carrying augmented sample. Skipped records carry a reason and
// no text; the label always equals the source sample's label.
struct AugmentationRecord {
    std::uint64_t source_id = 0;
    Technique technique = Technique::SynonymReplacement;
    std::string text;
    std::string label;
    std::string params_digest;
    bool skipped = false;
    std::string skip_reason;
};

// Stable 16-hex-digit FNV-1a digest of a canonical parameter string.
std::string digest(std::string_view canonical_params);

}  // namespace augtk

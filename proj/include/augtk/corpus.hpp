#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

namespace augtk {

// One labeled text instance. id is stable within its corpus.
struct Sample {
    std::uint64_t id = 0;
    std::string text;
    std::string label;
};

// Ordered collection of samples with a language tag. Immutable after
// construction; the label set is derived from the samples.
class Corpus {
public:
    Corpus() = default;
    // Assigns ids 0..N-1 in the given order. Texts must be non-empty after
    // trimming and labels non-empty.
    Corpus(std::string language, std::vector<std::string> texts,
           std::vector<std::string> labels);
    // Takes samples as-is; ids must already be unique.
    Corpus(std::string language, std::vector<Sample> samples);

    const std::string& language() const { return language_; }
    const std::vector<Sample>& samples() const { return samples_; }
    const std::set<std::string>& labels() const { return labels_; }
    std::size_t size() const { return samples_.size(); }
    bool empty() const { return samples_.empty(); }

private:
    std::string language_;
    std::vector<Sample> samples_;
    std::set<std::string> labels_;
};

// Reads a JSONL corpus: one JSON object per line with string fields "text"
// and "label"; unknown keys are ignored. ids are assigned 0..N-1 in file
// order. Errors name the offending 1-based line number.
Corpus load_jsonl(const std::filesystem::path& path, const std::string& language);

// Writes one JSON object per line with fields "text" and "label" in sample
// order. load_jsonl(write_jsonl(c)) reproduces texts, labels, and order.
void write_jsonl(const Corpus& corpus, const std::filesystem::path& path);

// Draws min(n, |corpus|) samples uniformly without replacement; order is the
// draw order and is deterministic for a fixed seed. ids reassigned 0..k-1.
// n larger than the corpus returns the whole corpus and logs a warning.
Corpus sample_train(const Corpus& corpus, std::size_t n, std::uint64_t seed);

// Keeps only samples labeled label_a or label_b, then downsamples the
// majority class (uniform, seeded) so both classes have equal count. The
// survivors keep their original relative order; ids reassigned.
Corpus binarize(const Corpus& corpus, const std::string& label_a,
                const std::string& label_b, std::uint64_t seed);

// Originals first, augmented after, ids reassigned sequentially. Both inputs
// must carry the same language tag.
Corpus concat(const Corpus& original, const Corpus& augmented);

}  // namespace augtk

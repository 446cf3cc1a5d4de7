#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "augtk/backends.hpp"
#include "augtk/corpus.hpp"
#include "augtk/eda.hpp"
#include "augtk/eval.hpp"
#include "augtk/lexicon.hpp"
#include "augtk/record.hpp"

namespace augtk {

// Script gate target: one fixed script, or the sample's own dominant script
// ("auto", useful for corpora mixing scripts across classes).
struct ScriptExpectation {
    bool auto_detect = true;
    Script script = Script::Other;

    static ScriptExpectation auto_per_sample() { return {}; }
    static ScriptExpectation fixed(Script s) { return {false, s}; }
    Script resolve(const std::string& sample_text) const;
    std::string to_string() const;
};

struct ExperimentConfig {
    Technique technique = Technique::RandomDeletion;
    std::uint64_t seed = 42;
    std::size_t train_size = 100;
    EdaParams eda;
    double test_fraction = 0.3;
    std::string language = "hi";        // ISO 639-1, used as corpus tag
    std::string language_name;          // prompt-facing name; defaults from code
    std::string pivot = "en";           // back-translation pivot
    ScriptExpectation expected_script;  // default: auto
    double smoothing = 1.0;
    int workers = 1;  // parallel per-sample augmentation (bounded in-flight)

    void validate() const;
    std::string resolved_language_name() const;
};

// Everything augmentation needs from outside: synonym source, stopwords,
// service backends, prompts. Null lexicon/stopwords degrade to empty.
struct PipelineDeps {
    const EmbeddingTable* lexicon = nullptr;
    const StopwordSet* stopwords = nullptr;
    TranslationBackend* translator = nullptr;
    CompletionBackend* completer = nullptr;
    PromptTemplates templates = PromptTemplates::builtin_defaults();
    LlmOptions llm;
    Sleeper sleep = real_sleeper();
};

// Produces exactly one AugmentationRecord per sample (possibly skipped) and
// assembles the non-skipped ones into a corpus in source order. Deterministic
// for a fixed seed and fixed backend responses, regardless of worker count.
std::pair<Corpus, std::vector<AugmentationRecord>> augment_corpus(
    const Corpus& corpus, const ExperimentConfig& config, const PipelineDeps& deps);

// Seeded stratified hold-out, taken before train sampling so augmented text
// can never leak into evaluation. Returns (train pool, test). Every class
// needs at least 2 samples.
std::pair<Corpus, Corpus> stratified_split(const Corpus& corpus, double test_fraction,
                                           std::uint64_t seed);

struct ComparisonReport {
    EvalReport pre;
    EvalReport post;
    EvalReport deltas;  // post - pre per field
    std::size_t skip_count = 0;
    std::optional<LengthRatio> length_ratio;  // absent when nothing was augmented
    std::size_t train_size = 0;
    std::size_t post_train_size = 0;
    std::size_t test_size = 0;
    // original dataset ids, so pre/post arms can be audited to share one test set
    std::vector<std::uint64_t> test_source_ids;
};

// The full protocol: split, sample the train set, evaluate the baseline,
// augment once per sample, concatenate, evaluate again on the same test set.
ComparisonReport run_experiment(const Corpus& dataset, const ExperimentConfig& config,
                                const PipelineDeps& deps);

struct TechniqueRow {
    Technique technique = Technique::RandomDeletion;
    std::string params_digest;
    bool failed = false;
    std::string error;
    EvalReport report;
    EvalReport deltas;
    std::size_t skips = 0;
    std::optional<LengthRatio> length_ratio;
};

struct ComparisonTable {
    std::string dataset_name;
    std::string language;
    std::uint64_t seed = 0;
    EvalReport baseline;
    std::size_t train_size = 0;
    std::size_t test_size = 0;
    std::vector<TechniqueRow> rows;

    nlohmann::ordered_json to_json() const;
    std::string render_text() const;
    std::size_t failed_rows() const;
};

// One row per technique against a baseline computed once from a shared
// split/sample. A failing technique yields an error row; the run continues.
ComparisonTable compare_all(const Corpus& dataset, const ExperimentConfig& base_config,
                            const std::vector<Technique>& techniques,
                            const PipelineDeps& deps);

}  // namespace augtk

#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "augtk/backends.hpp"
#include "augtk/lexicon.hpp"
#include "augtk/pipeline.hpp"

namespace augtk {

struct TranslationSettings {
    std::string kind = "identity";  // http | identity | reverse | sim | fixture
    std::string url;                // http endpoint (kind=http)
    std::optional<std::filesystem::path> fixtures;  // kind=fixture
    std::string pivot = "en";
};

struct CompletionSettings {
    std::string kind = "echo";  // http | echo | sim | fixture
    std::string url;            // base URL (kind=http)
    std::string model = "gpt-3.5-turbo";
    std::optional<std::filesystem::path> fixtures;  // kind=fixture
    int max_tokens = 256;
    double temperature = 0.7;
};

struct BackendSettings {
    TranslationSettings translation;
    CompletionSettings completion;
    RetryPolicy retry;
    int workers = 4;  // bounded in-flight limit for per-sample augmentation
};

// The experiment config file: UTF-8 JSON, unknown keys rejected with an
// error naming the key, every field defaulted when absent. Relative paths
// resolve against the config file's directory.
struct Config {
    std::filesystem::path base_dir;

    std::optional<std::filesystem::path> dataset_path;
    std::string language = "hi";
    std::string language_name;  // prompt-facing; defaults from the code
    ScriptExpectation expected_script = ScriptExpectation::auto_per_sample();

    std::size_t train_size = 100;
    std::uint64_t seed = 42;
    double test_fraction = 0.3;

    EdaParams eda;
    BackendSettings backends;

    double min_script_ratio = 0.8;
    double length_low = 0.5;
    double length_high = 2.0;

    std::optional<std::filesystem::path> stopwords;
    std::optional<std::filesystem::path> vectors;
    std::optional<std::filesystem::path> templates_dir;
    double smoothing = 1.0;

    static Config load(const std::filesystem::path& path);
    static Config parse(const std::string& json_text,
                        const std::filesystem::path& base_dir);

    ExperimentConfig to_experiment(Technique technique) const;
    LlmOptions llm_options() const;
};

// Owns everything a PipelineDeps points at: loaded lexicon, stopwords,
// templates, and the constructed backends.
class Runtime {
public:
    explicit Runtime(const Config& config);

    PipelineDeps deps() const;
    const EmbeddingTable& lexicon() const { return lexicon_; }
    const StopwordSet& stopwords() const { return stopwords_; }

private:
    EmbeddingTable lexicon_;
    StopwordSet stopwords_;
    PromptTemplates templates_;
    LlmOptions llm_;
    std::unique_ptr<TranslationBackend> translator_;
    std::unique_ptr<CompletionBackend> completer_;
};

}  // namespace augtk

#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <string>

#include "augtk/corpus.hpp"
#include "augtk/text.hpp"

namespace augtk {

// Machine-translation service: translate `text` from `source` to `target`
// (ISO 639-1 codes). Returns non-empty text or throws BackendError.
class TranslationBackend {
public:
    virtual ~TranslationBackend() = default;
    virtual std::string translate(const std::string& text, const std::string& source,
                                  const std::string& target) = 0;
};

// Chat-completion service. Responses are capped at max_tokens by the
// provider; failures throw BackendError.
class CompletionBackend {
public:
    virtual ~CompletionBackend() = default;
    virtual std::string complete(const std::string& prompt, int max_tokens,
                                 double temperature) = 0;
};

struct RetryPolicy {
    int max_attempts = 3;
    std::chrono::milliseconds base_delay{1000};
    double backoff = 2.0;

    void validate() const;
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;
Sleeper real_sleeper();

// Runs `call` under the policy, sleeping base_delay * backoff^i between
// attempts. Only retryable BackendErrors (rate limit, timeout, transport)
// are retried; the last error propagates.
std::string with_retry(const RetryPolicy& policy, const std::function<std::string()>& call,
                       const Sleeper& sleep = real_sleeper());

// Round trip lang -> pivot -> lang. Both hops run under the retry policy;
// a failure carries the hop that failed ("forward" or "backward").
std::string back_translate(const std::string& text, const std::string& lang,
                           const std::string& pivot, TranslationBackend& backend,
                           const RetryPolicy& policy = {},
                           const Sleeper& sleep = real_sleeper());

// Prompt template with {language}, {label}, {text} placeholders.
class PromptTemplate {
public:
    PromptTemplate() = default;
    explicit PromptTemplate(std::string body) : body_(std::move(body)) {}
    static PromptTemplate from_file(const std::filesystem::path& path);

    const std::string& body() const { return body_; }
    std::string render(const std::string& language, const std::string& label,
                       const std::string& text) const;

private:
    std::string body_;
};

struct PromptTemplates {
    PromptTemplate paraphrase;
    PromptTemplate expand;
    PromptTemplate generate;

    static PromptTemplates builtin_defaults();
    static PromptTemplates from_dir(const std::filesystem::path& dir);
};

struct LlmOptions {
    int max_tokens = 256;
    double temperature = 0.7;
    RetryPolicy retry;
    double min_script_ratio = 0.8;
    // Paraphrase length gate: accept token counts in [len_lo, len_hi] x source.
    double len_lo = 0.5;
    double len_hi = 2.0;
};

// The three completion-backed augmentation operations. Every successful
// result passed the script gate (and the applicable length gate); rejected
// generations raise ValidationError carrying the offending text.
class LlmAugmenter {
public:
    LlmAugmenter(CompletionBackend& backend, PromptTemplates templates,
                 LlmOptions options, Sleeper sleep = real_sleeper());

    // Rephrases the sample; output must match `expected` script and fall in
    // the [len_lo, len_hi] token-count band of the source.
    std::string paraphrase(const Sample& sample, const std::string& language_name,
                           Script expected) const;

    // Extends the sample; output must match `expected` script and contain at
    // least as many tokens as the source.
    std::string expand(const Sample& sample, const std::string& language_name,
                       Script expected) const;

    // Generates a new same-label text from the sample as exemplar; output
    // must be non-empty and match `expected` script.
    std::string generate(const Sample& sample, const std::string& language_name,
                         Script expected) const;

private:
    std::string call(const PromptTemplate& tpl, const Sample& sample,
                     const std::string& language_name) const;
    void check_script(const std::string& text, Script expected) const;

    CompletionBackend& backend_;
    PromptTemplates templates_;
    LlmOptions options_;
    Sleeper sleep_;
};

struct LengthRatio {
    double mean_original = 0.0;
    double mean_augmented = 0.0;
    double ratio = 0.0;  // mean_augmented / mean_original
};

// Mean token counts of both corpora and their ratio; diagnoses
// truncation-style degradation in generated text. Both corpora must be
// non-empty.
LengthRatio length_ratio_report(const Corpus& original, const Corpus& augmented);

// HTTP chat-completion client. POSTs {"model", "messages":[{"role":"user",
// "content"}], "max_tokens", "temperature"} to <base_url>/v1/chat/completions
// and reads choices[0].message.content. Auth comes from the AUGMENT_LLM_KEY
// environment variable as a bearer token.
class HttpCompletionClient final : public CompletionBackend {
public:
    HttpCompletionClient(std::string base_url, std::string model,
                         std::chrono::milliseconds timeout = std::chrono::seconds(30));

    std::string complete(const std::string& prompt, int max_tokens,
                         double temperature) override;

private:
    std::string base_url_;
    std::string model_;
    std::chrono::milliseconds timeout_;
};

// Generic HTTP translation client. POSTs {"q", "source", "target"} to the
// endpoint and reads {"translatedText"}.
class HttpTranslationClient final : public TranslationBackend {
public:
    explicit HttpTranslationClient(
        std::string endpoint_url,
        std::chrono::milliseconds timeout = std::chrono::seconds(30));

    std::string translate(const std::string& text, const std::string& source,
                          const std::string& target) override;

private:
    std::string endpoint_url_;
    std::chrono::milliseconds timeout_;
};

}  // namespace augtk

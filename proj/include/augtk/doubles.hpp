#pragma once

#include <filesystem>
#include <mutex>
#include <string>
#include <unordered_map>

#include "augtk/backends.hpp"

namespace augtk {

// Stable keys for fixture recording/playback. Completion requests fold in
// max_tokens and temperature; translation requests fold in both codes.
std::string translation_request_hash(const std::string& text, const std::string& source,
                                     const std::string& target);
std::string completion_request_hash(const std::string& prompt, int max_tokens,
                                    double temperature);

// Returns the input verbatim.
class IdentityTranslation final : public TranslationBackend {
public:
    std::string translate(const std::string& text, const std::string&,
                          const std::string&) override;
};

// Reverses token order on every call, so two hops restore the original order.
class ReversingTranslation final : public TranslationBackend {
public:
    std::string translate(const std::string& text, const std::string&,
                          const std::string&) override;
};

// Deterministic offline stand-in for a real translator. The forward hop
// hex-encodes each token (a plausible Latin-script pivot text) and reverses
// token order; the backward hop decodes and rotates the sentence by one
// token, imitating round-trip lexical drift. Direction is inferred from
// whether the input is sim-encoded.
class SimTranslation final : public TranslationBackend {
public:
    std::string translate(const std::string& text, const std::string& source,
                          const std::string& target) override;
};

// Returns the prompt verbatim (truncated to max_tokens tokens).
class EchoCompletion final : public CompletionBackend {
public:
    std::string complete(const std::string& prompt, int max_tokens,
                         double temperature) override;
};

// Returns one fixed response regardless of the prompt.
class StaticCompletion final : public CompletionBackend {
public:
    explicit StaticCompletion(std::string response) : response_(std::move(response)) {}
    std::string complete(const std::string&, int, double) override { return response_; }

private:
    std::string response_;
};

// Deterministic offline stand-in for a chat model. Assumes the bundled
// template shape (payload after the last "\nText: " marker, directive as the
// first prompt word) and answers with a same-script transformation of the
// payload: rotation for paraphrase, payload plus a continuation for extend,
// a seeded shuffle for generate. Responses are capped at max_tokens tokens.
class SimCompletion final : public CompletionBackend {
public:
    std::string complete(const std::string& prompt, int max_tokens,
                         double temperature) override;
};

// Replays recorded responses from a JSONL file of
// {"request_hash": string, "response": string}. A request with no recorded
// response is a protocol error.
class FixtureTranslation final : public TranslationBackend {
public:
    explicit FixtureTranslation(const std::filesystem::path& path);
    std::string translate(const std::string& text, const std::string& source,
                          const std::string& target) override;

private:
    std::unordered_map<std::string, std::string> responses_;
};

class FixtureCompletion final : public CompletionBackend {
public:
    explicit FixtureCompletion(const std::filesystem::path& path);
    std::string complete(const std::string& prompt, int max_tokens,
                         double temperature) override;

private:
    std::unordered_map<std::string, std::string> responses_;
};

// Delegating wrappers that capture (request_hash, response) pairs so a live
// or simulated session can be saved and replayed as fixtures.
class RecordingTranslation final : public TranslationBackend {
public:
    explicit RecordingTranslation(TranslationBackend& inner) : inner_(inner) {}
    std::string translate(const std::string& text, const std::string& source,
                          const std::string& target) override;
    void save(const std::filesystem::path& path) const;

private:
    TranslationBackend& inner_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, std::string> recorded_;
};

class RecordingCompletion final : public CompletionBackend {
public:
    explicit RecordingCompletion(CompletionBackend& inner) : inner_(inner) {}
    std::string complete(const std::string& prompt, int max_tokens,
                         double temperature) override;
    void save(const std::filesystem::path& path) const;

private:
    CompletionBackend& inner_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, std::string> recorded_;
};

}  // namespace augtk

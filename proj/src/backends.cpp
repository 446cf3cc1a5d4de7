#include "augtk/backends.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "augtk/errors.hpp"

namespace augtk {

const char* backend_error_kind_name(BackendErrorKind kind) {
    switch (kind) {
        case BackendErrorKind::RateLimited: return "rate-limited";
        case BackendErrorKind::Timeout: return "timeout";
        case BackendErrorKind::Refusal: return "refusal";
        case BackendErrorKind::Transport: return "transport";
        case BackendErrorKind::Protocol: return "protocol";
        case BackendErrorKind::EmptyResponse: return "empty-response";
    }
    return "unknown";
}

void RetryPolicy::validate() const {
    if (max_attempts < 1)
        throw std::invalid_argument("RetryPolicy: max_attempts must be >= 1");
    if (base_delay.count() < 0)
        throw std::invalid_argument("RetryPolicy: base_delay must be >= 0");
    if (backoff < 1.0)
        throw std::invalid_argument("RetryPolicy: backoff must be >= 1");
}

Sleeper real_sleeper() {
    return [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
}

std::string with_retry(const RetryPolicy& policy,
                       const std::function<std::string()>& call,
                       const Sleeper& sleep) {
    policy.validate();
    auto delay = policy.base_delay;
    for (int attempt = 1;; ++attempt) {
        try {
            return call();
        } catch (const BackendError& e) {
            if (!e.retryable() || attempt >= policy.max_attempts) throw;
            sleep(delay);
            delay = std::chrono::milliseconds(static_cast<long long>(
                static_cast<double>(delay.count()) * policy.backoff));
        }
    }
}

std::string back_translate(const std::string& text, const std::string& lang,
                           const std::string& pivot, TranslationBackend& backend,
                           const RetryPolicy& policy, const Sleeper& sleep) {
    if (lang == pivot)
        throw std::invalid_argument("back_translate: pivot must differ from lang (" +
                                    lang + ")");
    auto hop = [&](const std::string& input, const std::string& src,
                   const std::string& tgt, const char* name) {
        try {
            return with_retry(policy, [&] { return backend.translate(input, src, tgt); },
                              sleep);
        } catch (const BackendError& e) {
            throw BackendError(e.kind(),
                               std::string("back_translate ") + name + " hop (" + src +
                                   "->" + tgt + "): " + e.what(),
                               name);
        }
    };
    const std::string pivot_text = hop(text, lang, pivot, "forward");
    return hop(pivot_text, pivot, lang, "backward");
}

PromptTemplate PromptTemplate::from_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open prompt template: " + path.string());
    std::ostringstream body;
    body << in.rdbuf();
    std::string text = body.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.pop_back();
    if (text.empty()) throw DataError("empty prompt template: " + path.string());
    return PromptTemplate(std::move(text));
}

std::string PromptTemplate::render(const std::string& language,
                                   const std::string& label,
                                   const std::string& text) const {
    std::string out = body_;
    const auto replace_all = [&out](std::string_view key, const std::string& value) {
        std::size_t pos = 0;
        while ((pos = out.find(key, pos)) != std::string::npos) {
            out.replace(pos, key.size(), value);
            pos += value.size();
        }
    };
    replace_all("{language}", language);
    replace_all("{label}", label);
    replace_all("{text}", text);
    return out;
}

PromptTemplates PromptTemplates::builtin_defaults() {
    PromptTemplates t;
    t.paraphrase = PromptTemplate(
        "Paraphrase the following {language} text, preserving its meaning and its "
        "'{label}' label. Respond only in {language}.\nText: {text}");
    t.expand = PromptTemplate(
        "Extend the following {language} text with additional sentences, preserving "
        "its context, sentiment and '{label}' label. Respond only in {language}, "
        "repeating the original text followed by the continuation.\nText: {text}");
    t.generate = PromptTemplate(
        "Generate one new {language} text sample similar to the following example, "
        "suitable for the label '{label}'. Respond only in {language}.\nText: {text}");
    return t;
}

PromptTemplates PromptTemplates::from_dir(const std::filesystem::path& dir) {
    PromptTemplates t;
    t.paraphrase = PromptTemplate::from_file(dir / "paraphrase.txt");
    t.expand = PromptTemplate::from_file(dir / "expand.txt");
    t.generate = PromptTemplate::from_file(dir / "generate.txt");
    return t;
}

LlmAugmenter::LlmAugmenter(CompletionBackend& backend, PromptTemplates templates,
                           LlmOptions options, Sleeper sleep)
    : backend_(backend), templates_(std::move(templates)), options_(options),
      sleep_(std::move(sleep)) {
    options_.retry.validate();
    if (options_.max_tokens < 1)
        throw std::invalid_argument("LlmOptions: max_tokens must be >= 1");
    if (!(options_.len_lo > 0.0 && options_.len_hi >= options_.len_lo))
        throw std::invalid_argument("LlmOptions: invalid length band");
}

std::string LlmAugmenter::call(const PromptTemplate& tpl, const Sample& sample,
                               const std::string& language_name) const {
    const std::string prompt = tpl.render(language_name, sample.label, sample.text);
    const std::string raw = with_retry(
        options_.retry,
        [&] { return backend_.complete(prompt, options_.max_tokens, options_.temperature); },
        sleep_);
    const std::string out = trim(raw);
    if (out.empty())
        throw ValidationError("backend returned empty output for sample " +
                                  std::to_string(sample.id),
                              raw);
    return out;
}

void LlmAugmenter::check_script(const std::string& text, Script expected) const {
    if (!validate_language(text, expected, options_.min_script_ratio)) {
        const auto [actual, ratio] = dominant_script(text);
        std::ostringstream msg;
        msg << "language compliance failed: expected " << script_name(expected)
            << " >= " << options_.min_script_ratio << ", got " << script_name(actual)
            << " at ratio " << ratio;
        throw ValidationError(msg.str(), text);
    }
}

std::string LlmAugmenter::paraphrase(const Sample& sample,
                                     const std::string& language_name,
                                     Script expected) const {
    const std::string out = call(templates_.paraphrase, sample, language_name);
    check_script(out, expected);
    const auto source_len = static_cast<double>(tokenize(sample.text).size());
    const auto out_len = static_cast<double>(tokenize(out).size());
    if (out_len < options_.len_lo * source_len || out_len > options_.len_hi * source_len) {
        std::ostringstream msg;
        msg << "length compliance failed: " << out_len << " tokens vs source "
            << source_len << " (accepted band [" << options_.len_lo << "x, "
            << options_.len_hi << "x])";
        throw ValidationError(msg.str(), out);
    }
    return out;
}

std::string LlmAugmenter::expand(const Sample& sample, const std::string& language_name,
                                 Script expected) const {
    const std::string out = call(templates_.expand, sample, language_name);
    check_script(out, expected);
    const std::size_t source_len = tokenize(sample.text).size();
    const std::size_t out_len = tokenize(out).size();
    if (out_len < source_len) {
        std::ostringstream msg;
        msg << "expansion shorter than input: " << out_len << " tokens vs source "
            << source_len;
        throw ValidationError(msg.str(), out);
    }
    return out;
}

std::string LlmAugmenter::generate(const Sample& sample,
                                   const std::string& language_name,
                                   Script expected) const {
    const std::string out = call(templates_.generate, sample, language_name);
    check_script(out, expected);
    return out;
}

LengthRatio length_ratio_report(const Corpus& original, const Corpus& augmented) {
    if (original.empty() || augmented.empty())
        throw std::invalid_argument("length_ratio_report: corpora must be non-empty");
    const auto mean_tokens = [](const Corpus& corpus) {
        std::size_t total = 0;
        for (const auto& s : corpus.samples()) total += tokenize(s.text).size();
        return static_cast<double>(total) / static_cast<double>(corpus.size());
    };
    LengthRatio r;
    r.mean_original = mean_tokens(original);
    r.mean_augmented = mean_tokens(augmented);
    r.ratio = r.mean_augmented / r.mean_original;
    return r;
}

namespace {

struct SplitUrl {
    std::string host;  // scheme://authority
    std::string path;  // leading '/', possibly "/"
};

SplitUrl split_url(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw ConfigError("backend URL must include a scheme: " + url);
    const auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

[[noreturn]] void throw_transport(const httplib::Result& res, const std::string& what) {
    const auto err = res.error();
    const auto kind = (err == httplib::Error::ConnectionTimeout ||
                       err == httplib::Error::Read || err == httplib::Error::Write)
                          ? BackendErrorKind::Timeout
                          : BackendErrorKind::Transport;
    throw BackendError(kind, what + ": " + httplib::to_string(err));
}

[[noreturn]] void throw_http_status(int status, const std::string& body,
                                    const std::string& what) {
    const std::string detail =
        what + ": HTTP " + std::to_string(status) +
        (body.empty() ? "" : (" body: " + body.substr(0, 200)));
    if (status == 429) throw BackendError(BackendErrorKind::RateLimited, detail);
    if (status == 408 || status == 504)
        throw BackendError(BackendErrorKind::Timeout, detail);
    if (status == 502 || status == 503)
        throw BackendError(BackendErrorKind::Transport, detail);
    throw BackendError(BackendErrorKind::Protocol, detail);
}

}  // namespace

HttpCompletionClient::HttpCompletionClient(std::string base_url, std::string model,
                                           std::chrono::milliseconds timeout)
    : base_url_(std::move(base_url)), model_(std::move(model)), timeout_(timeout) {}

std::string HttpCompletionClient::complete(const std::string& prompt, int max_tokens,
                                           double temperature) {
    const auto url = split_url(base_url_);
    httplib::Client client(url.host);
    client.set_connection_timeout(timeout_);
    client.set_read_timeout(timeout_);

    httplib::Headers headers;
    if (const char* key = std::getenv("AUGMENT_LLM_KEY"); key && *key)
        headers.emplace("Authorization", std::string("Bearer ") + key);

    nlohmann::json body{
        {"model", model_},
        {"messages", nlohmann::json::array({{{"role", "user"}, {"content", prompt}}})},
        {"max_tokens", max_tokens},
        {"temperature", temperature},
    };
    std::string path = url.path == "/" ? "" : url.path;
    path += "/v1/chat/completions";

    const auto res = client.Post(path, headers, body.dump(), "application/json");
    if (!res) throw_transport(res, "chat completion request failed");
    if (res->status != 200)
        throw_http_status(res->status, res->body, "chat completion request failed");

    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::parse_error& e) {
        throw BackendError(BackendErrorKind::Protocol,
                           std::string("chat completion response is not JSON: ") +
                               e.what());
    }
    if (!parsed.contains("choices") || !parsed["choices"].is_array() ||
        parsed["choices"].empty())
        throw BackendError(BackendErrorKind::Protocol,
                           "chat completion response has no choices");
    const auto& choice = parsed["choices"][0];
    if (choice.value("finish_reason", "") == "content_filter")
        throw BackendError(BackendErrorKind::Refusal,
                           "chat completion refused by content filter");
    if (!choice.contains("message") || !choice["message"].contains("content") ||
        !choice["message"]["content"].is_string())
        throw BackendError(BackendErrorKind::Protocol,
                           "chat completion response missing message content");
    const std::string content = choice["message"]["content"].get<std::string>();
    if (trim(content).empty())
        throw BackendError(BackendErrorKind::EmptyResponse,
                           "chat completion returned empty content");
    return content;
}

HttpTranslationClient::HttpTranslationClient(std::string endpoint_url,
                                             std::chrono::milliseconds timeout)
    : endpoint_url_(std::move(endpoint_url)), timeout_(timeout) {}

std::string HttpTranslationClient::translate(const std::string& text,
                                             const std::string& source,
                                             const std::string& target) {
    const auto url = split_url(endpoint_url_);
    httplib::Client client(url.host);
    client.set_connection_timeout(timeout_);
    client.set_read_timeout(timeout_);

    const nlohmann::json body{{"q", text}, {"source", source}, {"target", target}};
    const auto res = client.Post(url.path, body.dump(), "application/json");
    if (!res) throw_transport(res, "translation request failed");
    if (res->status != 200)
        throw_http_status(res->status, res->body, "translation request failed");

    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::parse_error& e) {
        throw BackendError(BackendErrorKind::Protocol,
                           std::string("translation response is not JSON: ") + e.what());
    }
    if (!parsed.contains("translatedText") || !parsed["translatedText"].is_string())
        throw BackendError(BackendErrorKind::Protocol,
                           "translation response missing translatedText");
    const std::string out = parsed["translatedText"].get<std::string>();
    if (out.empty())
        throw BackendError(BackendErrorKind::EmptyResponse,
                           "translation returned empty text");
    return out;
}

}  // namespace augtk

#include "augtk/doubles.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>

#include <json.hpp>

#include "augtk/errors.hpp"
#include "augtk/record.hpp"
#include "augtk/rng.hpp"
#include "augtk/text.hpp"

namespace augtk {

std::string translation_request_hash(const std::string& text, const std::string& source,
                                     const std::string& target) {
    return digest("translate\x1F" + source + "\x1F" + target + "\x1F" + text);
}

std::string completion_request_hash(const std::string& prompt, int max_tokens,
                                    double temperature) {
    char temp[32];
    std::snprintf(temp, sizeof(temp), "%.6g", temperature);
    return digest("complete\x1F" + prompt + "\x1F" + std::to_string(max_tokens) +
                  "\x1F" + temp);
}

std::string IdentityTranslation::translate(const std::string& text, const std::string&,
                                           const std::string&) {
    return text;
}

std::string ReversingTranslation::translate(const std::string& text, const std::string&,
                                            const std::string&) {
    auto tokens = tokenize(text);
    std::reverse(tokens.begin(), tokens.end());
    return detokenize(tokens);
}

namespace {

std::string hex_encode_token(const std::string& token) {
    static const char* digits = "0123456789abcdef";
    std::string out = "x";
    out.reserve(1 + token.size() * 2);
    for (const unsigned char c : token) {
        out += digits[c >> 4];
        out += digits[c & 0xF];
    }
    return out;
}

bool hex_decode_token(const std::string& token, std::string& out) {
    if (token.size() < 3 || token[0] != 'x' || token.size() % 2 == 0) return false;
    const auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        return -1;
    };
    out.clear();
    for (std::size_t i = 1; i + 2 <= token.size(); i += 2) {
        const int hi = nibble(token[i]);
        const int lo = nibble(token[i + 1]);
        if (hi < 0 || lo < 0) return false;
        out += static_cast<char>((hi << 4) | lo);
    }
    return !out.empty();
}

}  // namespace

std::string SimTranslation::translate(const std::string& text, const std::string&,
                                      const std::string&) {
    auto tokens = tokenize(text);
    if (tokens.empty())
        throw BackendError(BackendErrorKind::EmptyResponse,
                           "sim translator got empty input");

    std::vector<std::string> decoded(tokens.size());
    bool all_encoded = true;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (!hex_decode_token(tokens[i], decoded[i])) {
            all_encoded = false;
            break;
        }
    }

    if (!all_encoded) {
        // forward hop: encode and reverse
        std::vector<std::string> encoded;
        encoded.reserve(tokens.size());
        for (const auto& t : tokens) encoded.push_back(hex_encode_token(t));
        std::reverse(encoded.begin(), encoded.end());
        return detokenize(encoded);
    }

    // backward hop: undo the reversal, then drift by one rotation
    std::reverse(decoded.begin(), decoded.end());
    if (decoded.size() >= 3)
        std::rotate(decoded.begin(), decoded.begin() + 1, decoded.end());
    return detokenize(decoded);
}

namespace {

std::vector<std::string> cap_tokens(std::vector<std::string> tokens, int max_tokens) {
    if (max_tokens >= 0 && tokens.size() > static_cast<std::size_t>(max_tokens))
        tokens.resize(static_cast<std::size_t>(max_tokens));
    return tokens;
}

}  // namespace

std::string EchoCompletion::complete(const std::string& prompt, int max_tokens,
                                     double) {
    return detokenize(cap_tokens(tokenize(prompt), max_tokens));
}

std::string SimCompletion::complete(const std::string& prompt, int max_tokens,
                                    double) {
    static constexpr std::string_view kMarker = "\nText: ";
    const auto marker_pos = prompt.rfind(kMarker);
    const std::string payload = marker_pos == std::string::npos
                                    ? prompt
                                    : prompt.substr(marker_pos + kMarker.size());
    auto tokens = tokenize(payload);
    if (tokens.empty())
        throw BackendError(BackendErrorKind::EmptyResponse,
                           "sim completion got empty payload");

    const std::string directive = tokenize(prompt).empty() ? "" : tokenize(prompt)[0];
    std::vector<std::string> out = tokens;
    if (directive == "Paraphrase") {
        if (out.size() >= 2) std::rotate(out.begin(), out.begin() + 1, out.end());
    } else if (directive == "Extend") {
        const std::size_t extra = std::min<std::size_t>(3, tokens.size());
        out.insert(out.end(), tokens.begin(),
                   tokens.begin() + static_cast<std::ptrdiff_t>(extra));
    } else if (directive == "Generate") {
        Mt19937Rng rng(std::stoull(digest(payload), nullptr, 16));
        for (std::size_t i = out.size(); i > 1; --i)
            std::swap(out[i - 1], out[rng.below(i)]);
    }
    return detokenize(cap_tokens(std::move(out), max_tokens));
}

namespace {

std::unordered_map<std::string, std::string> load_fixtures(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open fixture file: " + path.string());
    std::unordered_map<std::string, std::string> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::string where = path.string() + ":" + std::to_string(line_no);
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw DataError(where + ": malformed JSON: " + e.what());
        }
        if (!obj.contains("request_hash") || !obj["request_hash"].is_string() ||
            !obj.contains("response") || !obj["response"].is_string())
            throw DataError(where + ": expected {\"request_hash\", \"response\"}");
        out[obj["request_hash"].get<std::string>()] =
            obj["response"].get<std::string>();
    }
    return out;
}

void save_fixtures(const std::unordered_map<std::string, std::string>& recorded,
                   const std::filesystem::path& path) {
    // sorted by hash so re-recording a session produces identical bytes
    std::map<std::string, std::string> sorted(recorded.begin(), recorded.end());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write fixture file: " + path.string());
    for (const auto& [hash, response] : sorted) {
        nlohmann::ordered_json obj;
        obj["request_hash"] = hash;
        obj["response"] = response;
        out << obj.dump() << "\n";
    }
}

}  // namespace

FixtureTranslation::FixtureTranslation(const std::filesystem::path& path)
    : responses_(load_fixtures(path)) {}

std::string FixtureTranslation::translate(const std::string& text,
                                          const std::string& source,
                                          const std::string& target) {
    const auto key = translation_request_hash(text, source, target);
    const auto it = responses_.find(key);
    if (it == responses_.end())
        throw BackendError(BackendErrorKind::Protocol,
                           "no recorded translation for request hash " + key);
    return it->second;
}

FixtureCompletion::FixtureCompletion(const std::filesystem::path& path)
    : responses_(load_fixtures(path)) {}

std::string FixtureCompletion::complete(const std::string& prompt, int max_tokens,
                                        double temperature) {
    const auto key = completion_request_hash(prompt, max_tokens, temperature);
    const auto it = responses_.find(key);
    if (it == responses_.end())
        throw BackendError(BackendErrorKind::Protocol,
                           "no recorded completion for request hash " + key);
    return it->second;
}

std::string RecordingTranslation::translate(const std::string& text,
                                            const std::string& source,
                                            const std::string& target) {
    const std::string response = inner_.translate(text, source, target);
    std::lock_guard<std::mutex> lock(mutex_);
    recorded_[translation_request_hash(text, source, target)] = response;
    return response;
}

void RecordingTranslation::save(const std::filesystem::path& path) const {
    std::lock_guard<std::mutex> lock(mutex_);
    save_fixtures(recorded_, path);
}

std::string RecordingCompletion::complete(const std::string& prompt, int max_tokens,
                                          double temperature) {
    const std::string response = inner_.complete(prompt, max_tokens, temperature);
    std::lock_guard<std::mutex> lock(mutex_);
    recorded_[completion_request_hash(prompt, max_tokens, temperature)] = response;
    return response;
}

void RecordingCompletion::save(const std::filesystem::path& path) const {
    std::lock_guard<std::mutex> lock(mutex_);
    save_fixtures(recorded_, path);
}

}  // namespace augtk

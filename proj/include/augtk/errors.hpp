#pragma once

#include <stdexcept>
#include <string>

namespace augtk {

// File or data-content problem: missing file, malformed line, contract
// violation in an input artifact. CLI maps these to exit code 2.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Problem in a config document (unknown key, bad value). Exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class BackendErrorKind {
    RateLimited,
    Timeout,
    Refusal,
    Transport,
    Protocol,
    EmptyResponse,
};

const char* backend_error_kind_name(BackendErrorKind kind);

// Failure from an external translation/completion service. `hop` identifies
// which leg of a multi-call operation failed (e.g. back-translation forward
// vs backward). CLI maps these to exit code 3.
class BackendError : public std::runtime_error {
public:
    BackendError(BackendErrorKind kind, const std::string& message,
                 std::string hop = {})
        : std::runtime_error(message), kind_(kind), hop_(std::move(hop)) {}

    BackendErrorKind kind() const { return kind_; }
    const std::string& hop() const { return hop_; }
    bool retryable() const {
        return kind_ == BackendErrorKind::RateLimited ||
               kind_ == BackendErrorKind::Timeout ||
               kind_ == BackendErrorKind::Transport;
    }

private:
    BackendErrorKind kind_;
    std::string hop_;
};

// Backend output that failed a post-generation gate (script or length).
// Carries the rejected text so skip logs can show what was thrown away.
class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& message, std::string rejected_text)
        : std::runtime_error(message), rejected_(std::move(rejected_text)) {}

    const std::string& rejected_text() const { return rejected_; }

private:
    std::string rejected_;
};

}  // namespace augtk

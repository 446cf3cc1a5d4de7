#include "augtk/log.hpp"

#include <atomic>

namespace augtk::log {

namespace {
std::atomic<Level> g_threshold{Level::Warn};
std::mutex g_mutex;

const char* level_tag(Level level) {
    switch (level) {
        case Level::Debug: return "debug";
        case Level::Info: return "info";
        case Level::Warn: return "warn";
        case Level::Error: return "error";
    }
    return "?";
}
}  // namespace

Level threshold() { return g_threshold.load(std::memory_order_relaxed); }

void set_threshold(Level level) {
    g_threshold.store(level, std::memory_order_relaxed);
}

namespace detail {
void emit(Level level, const std::string& message) {
    std::lock_guard<std::mutex> lock(g_mutex);
    std::cerr << "[augtk " << level_tag(level) << "] " << message << "\n";
}
}  // namespace detail

}  // namespace augtk::log

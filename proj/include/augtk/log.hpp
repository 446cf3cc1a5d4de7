#pragma once

#include <iostream>
#include <mutex>
#include <sstream>
#include <string>

namespace augtk::log {

enum class Level { Debug = 0, Info = 1, Warn = 2, Error = 3 };

Level threshold();
void set_threshold(Level level);

namespace detail {
void emit(Level level, const std::string& message);
}

template <typename... Args>
void write(Level level, Args&&... args) {
    if (level < threshold()) return;
    std::ostringstream out;
    (out << ... << args);
    detail::emit(level, out.str());
}

template <typename... Args>
void warn(Args&&... args) {
    write(Level::Warn, std::forward<Args>(args)...);
}

template <typename... Args>
void info(Args&&... args) {
    write(Level::Info, std::forward<Args>(args)...);
}

template <typename... Args>
void error(Args&&... args) {
    write(Level::Error, std::forward<Args>(args)...);
}

}  // namespace augtk::log

#pragma once

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>

namespace sdrt {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

inline LogLevel log_threshold() {
  static const LogLevel threshold = [] {
    const char* env = std::getenv("SDRT_LOG");
    if (!env) return LogLevel::Warn;
    std::string v(env);
    for (auto& c : v) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (v == "error") return LogLevel::Error;
    if (v == "warn" || v == "warning") return LogLevel::Warn;
    if (v == "info") return LogLevel::Info;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
  }();
  return threshold;
}

inline void log(LogLevel level, std::string_view msg) {
  if (level > log_threshold()) return;
  const char* tag = level == LogLevel::Error  ? "error"
                    : level == LogLevel::Warn ? "warn"
                    : level == LogLevel::Info ? "info"
                                              : "debug";
  std::cerr << "[sdrt:" << tag << "] " << msg << "\n";
}

inline void log_error(std::string_view msg) { log(LogLevel::Error, msg); }
inline void log_warn(std::string_view msg) { log(LogLevel::Warn, msg); }
inline void log_info(std::string_view msg) { log(LogLevel::Info, msg); }
inline void log_debug(std::string_view msg) { log(LogLevel::Debug, msg); }

}  // namespace sdrt

#pragma once

// Minimal stderr logger controlled by DOMSET_LOG (error|info|debug).

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace domset {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

inline LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("DOMSET_LOG");
    if (env == nullptr) return LogLevel::Error;
    if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
    if (std::strcmp(env, "info") == 0) return LogLevel::Info;
    return LogLevel::Error;
  }();
  return level;
}

inline bool log_enabled(LogLevel lvl) { return (int)lvl <= (int)log_level(); }

inline void log_msg(LogLevel lvl, const char* tag, const std::string& msg) {
  if (log_enabled(lvl)) std::fprintf(stderr, "[%s] %s\n", tag, msg.c_str());
}

inline void log_error(const std::string& msg) { log_msg(LogLevel::Error, "error", msg); }
inline void log_info(const std::string& msg) { log_msg(LogLevel::Info, "info", msg); }
inline void log_debug(const std::string& msg) { log_msg(LogLevel::Debug, "debug", msg); }

}  // namespace domset

#pragma once

#include <cstdio>

namespace reachmap {

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

// Process-wide threshold; init_log_level_from_env reads REACHMAP_LOG
// (error|warn|info|debug, default warn).
LogLevel log_level();
void set_log_level(LogLevel level);
void init_log_level_from_env();

void log_message(LogLevel level, const char* fmt, ...)
#if defined(__GNUC__)
    __attribute__((format(printf, 2, 3)))
#endif
    ;

#define REACHMAP_LOG_AT(level, ...)                                   \
    do {                                                              \
        if (static_cast<int>(level) <= static_cast<int>(::reachmap::log_level())) \
            ::reachmap::log_message(level, __VA_ARGS__);              \
    } while (0)

#define LOG_ERROR(...) REACHMAP_LOG_AT(::reachmap::LogLevel::kError, __VA_ARGS__)
#define LOG_WARN(...) REACHMAP_LOG_AT(::reachmap::LogLevel::kWarn, __VA_ARGS__)
#define LOG_INFO(...) REACHMAP_LOG_AT(::reachmap::LogLevel::kInfo, __VA_ARGS__)
#define LOG_DEBUG(...) REACHMAP_LOG_AT(::reachmap::LogLevel::kDebug, __VA_ARGS__)

}  // namespace reachmap

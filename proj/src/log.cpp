#include "reachmap/log.hpp"

#include <atomic>
#include <cstdarg>
#include <cstdlib>
#include <cstring>

namespace reachmap {

namespace {
std::atomic<int> g_level{static_cast<int>(LogLevel::kWarn)};

const char* level_tag(LogLevel level) {
    switch (level) {
        case LogLevel::kError: return "error";
        case LogLevel::kWarn: return "warn";
        case LogLevel::kInfo: return "info";
        case LogLevel::kDebug: return "debug";
    }
    return "?";
}
}  // namespace

LogLevel log_level() { return static_cast<LogLevel>(g_level.load(std::memory_order_relaxed)); }

void set_log_level(LogLevel level) {
    g_level.store(static_cast<int>(level), std::memory_order_relaxed);
}

void init_log_level_from_env() {
    const char* env = std::getenv("REACHMAP_LOG");
    if (!env) return;
    if (std::strcmp(env, "error") == 0) set_log_level(LogLevel::kError);
    else if (std::strcmp(env, "warn") == 0) set_log_level(LogLevel::kWarn);
    else if (std::strcmp(env, "info") == 0) set_log_level(LogLevel::kInfo);
    else if (std::strcmp(env, "debug") == 0) set_log_level(LogLevel::kDebug);
    else std::fprintf(stderr, "[warn] REACHMAP_LOG=%s not recognized, keeping default\n", env);
}

void log_message(LogLevel level, const char* fmt, ...) {
    std::fprintf(stderr, "[%s] ", level_tag(level));
    va_list args;
    va_start(args, fmt);
    std::vfprintf(stderr, fmt, args);
    va_end(args);
    std::fputc('\n', stderr);
}

}  // namespace reachmap

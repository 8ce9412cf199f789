#include "ccbench/log.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <string>

namespace ccbench {

void configure_logging() {
    auto logger = spdlog::stderr_color_mt("ccbench");
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("COCHANGE_BENCH_LOG")) {
        const auto level = spdlog::level::from_str(env);
        // from_str maps unknown names to off; only accept an explicit "off".
        if (level != spdlog::level::off || std::string(env) == "off") {
            spdlog::set_level(level);
        } else {
            spdlog::warn("COCHANGE_BENCH_LOG='{}' is not a log level; using warn", env);
        }
    }
}

}  // namespace ccbench

#pragma once

namespace ccbench {

/// Sends spdlog output to stderr at the level named by COCHANGE_BENCH_LOG
/// (trace, debug, info, warn, error, critical, off; default warn).
void configure_logging();

}  // namespace ccbench

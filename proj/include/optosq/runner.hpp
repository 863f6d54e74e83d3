#pragma once

// Command execution. execute() is pure apart from threading and returns the
// bytes to emit; run() adds file output, the metadata sidecar and exit codes.

#include <ostream>
#include <string>

#include <json.hpp>

#include "optosq/config.hpp"
#include "optosq/emit.hpp"

namespace optosq {

struct RunResult {
  std::string body;         // CSV or JSON in the configured format
  nlohmann::json report;    // parameter echo and diagnostics for the sidecar
  std::string summary;      // one human-readable line
};

/// Throws optosq::Error subclasses; the category determines the exit code.
RunResult execute(const RunConfig& cfg, unsigned threads = 0);

/// Variance sweep over the configured axes. Points are evaluated on a worker
/// pool; rows come back in axis order (axis1 outer, axis2 inner).
SweepTable run_sweep(const RunConfig& cfg, unsigned threads = 0);

/// Sidecar path for an output file: `<path>.meta.json`.
std::string sidecar_path(const std::string& output_path);

/// Executes `cfg`, writes the artifact and sidecar when output.path is set
/// (otherwise the body goes to `out`), and returns the process exit code:
/// 0 success, 2 config, 3 instability, 4 non-convergence, 5 I/O, 1 internal.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err, unsigned threads = 0);

}  // namespace optosq

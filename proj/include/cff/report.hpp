
#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "cff/error.hpp"

namespace cff {

using Json = nlohmann::ordered_json;

/// Inputs shared by every CLI command.
struct RunConfig {
    std::uint64_t q = 0;
    std::string modulus;
    std::string gamma = "1";
    /// construct | genus | count | zeta | aut | lspaces | verify
    std::string command;
    /// For verify: genus | count | zeta | aut | lspaces | all
    std::string which = "all";
    std::uint32_t k = 1;
    unsigned threads = 1;
};

/// Largest q accepted by the pipelines.
inline constexpr std::uint64_t kMaxQ = 9;

struct RunResult {
    Json report;
    /// Every paper_claims entry is true.
    bool ok = false;
};

/// Runs the selected pipelines. Throws Error for invalid input and for
/// out-of-scope requests (zeta beyond q = 5 raises TooLarge).
RunResult run(const RunConfig& cfg);

Json error_report(const RunConfig& cfg, const Error& e);

}  // namespace cff

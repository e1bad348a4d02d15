// Command dispatch and machine-readable reports. Reports are canonical JSON:
// keys sorted, rationals and big integers as strings, complex numbers as
// [re, im] pairs; byte-identical across runs for a fixed input, version and
// seed.
#pragma once

#include <cstdint>
#include <iosfwd>

#include <json.hpp>

#include "workbench/specfile.hpp"

namespace workbench {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 20230811;

struct Report {
    nlohmann::json payload;
    // 0 = success, 2 = analysis-level negative verdict; tool errors throw.
    int exit_code = 0;
};

// command: validate | rigidity | grading | strata | census | lnd-check |
//          lnd-search | exp | transport | example-hypersurface
Report run_command(const std::string& command, const SpecFile& spec, std::uint64_t seed);

std::string render_report(const Report& report);  // canonical text, newline-terminated
void emit_report(const Report& report, const std::string& out_path);  // "" = stdout

}  // namespace workbench

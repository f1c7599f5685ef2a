#pragma once

#include <string>
#include <vector>

namespace gw {

// One experiment = one JSON config document.  Common fields:
//   kind:   "spectral" | "assemble-rate" | "norms" | "kernel" | "counterexample"
//   seed:   integer (default 1)
//   output: file prefix; run() writes <output>.csv and <output>.json
// plus kind-specific parameters and an optional "checks" object whose entries
// become pass/fail verdicts in the summary.  Identical config + seed produce
// byte-identical outputs.
struct ExperimentConfig {
    std::string json_text;
    static ExperimentConfig from_file(const std::string& path);
    static ExperimentConfig from_string(const std::string& text);
};

struct ExperimentReport {
    std::string kind;
    std::string csv_text;
    std::string summary_json; // includes per-check verdicts
    bool all_passed = true;
    std::vector<std::string> check_lines; // "pass|fail name detail"
};

ExperimentReport run(const ExperimentConfig& cfg);

// Runs and writes <output>.csv / <output>.json if the config names an output.
ExperimentReport run_and_write(const ExperimentConfig& cfg);

} // namespace gw

#pragma once

#include <map>
#include <optional>
#include <string>

#include "symalg/corpus.hpp"
#include "symalg/parser.hpp"

namespace symalg {

struct ExecOptions {
    uint64_t seed = 1;
    double timeout_s = 30;
    int parallelism = 1;
    std::map<std::string, int> random_counts; // extra random verify cases per kind
    std::optional<std::string> corpus_path;   // replaces the builtin corpus
};

struct ExecResult {
    int exit_code = 0;   // 0 ok, 1 verification failure, 2 usage, 3 resource limit
    std::string output;  // human-readable text
    std::string json;    // machine-readable mirror (JSON array of command records)
};

ExecResult execute_script(const Script& script, const ExecOptions& opts);
ExecResult execute_text(const std::string& text, const ExecOptions& opts);

} // namespace symalg

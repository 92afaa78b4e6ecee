#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symalg/error.hpp"

namespace symalg {

// One replayable verification case. Inputs are carried as text fields and
// parsed by the runner, so cases round-trip through the corpus file format.
struct CorpusCase {
    std::string id;
    std::string kind; // snc-property | monomial-multiplier | main-theorem | blowup | asymptotic
    std::map<std::string, std::string> fields;
    std::string expected = "pass"; // pass | fail-with-witness
};

struct CaseResult {
    std::string id;
    std::string kind;
    bool ok = false;           // verdict matched the expectation
    std::string verdict;       // pass | fail | error | resource-limit
    std::string witness;
    double ms = 0;
    bool resource_failure = false;
};

struct VerificationReport {
    std::vector<CaseResult> results;
    int passed = 0;
    int failed = 0;
    int resource_failures = 0;
    uint64_t seed = 0;
    std::string environment;

    bool all_ok() const { return failed == 0; }
    std::string table() const;
    std::string json() const;
};

// line-oriented corpus format: one `id=... kind=... field=... expect=...`
// record per line, '#' comments, double quotes around values with spaces
std::vector<CorpusCase> parse_corpus_text(const std::string& text);
std::string corpus_record(const CorpusCase& c);

const std::string& builtin_corpus_text();
std::vector<CorpusCase> builtin_corpus();

// reproducible random cases; counts keyed by kind
std::vector<CorpusCase> generate_random_cases(uint64_t seed,
                                              const std::map<std::string, int>& counts);

// filter: empty matches all; otherwise exact kind, exact id, or id prefix
// when the pattern ends with '*'
bool case_matches(const CorpusCase& c, const std::string& filter);

CaseResult run_case(const CorpusCase& c, const Limits& lim);

VerificationReport run_corpus(const std::vector<CorpusCase>& cases, const std::string& filter,
                              int parallelism, double per_case_timeout_s, uint64_t seed = 0);

} // namespace symalg

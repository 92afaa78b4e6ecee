#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace symalg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// incompatible rings passed to an arithmetic operation
struct RingMismatchError : Error {
    explicit RingMismatchError(const std::string& msg) : Error(msg) {}
};

// configured degree/term/time guardrail exceeded
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

// invalid argument at the mathematical level (zero polynomial, non-squarefree
// input, witness inside the ideal, ...)
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int ln, int col)
        : Error(msg + " at line " + std::to_string(ln) + ", column " + std::to_string(col)),
          line(ln), column(col) {}
};

// Guardrails threaded through every potentially expensive computation.
// Deadlines are cooperative: long loops poll check_time().
struct Limits {
    int64_t max_total_degree = 80;
    int64_t max_terms = 200000;
    int64_t max_pairs = 500000;
    int64_t max_enumeration = 4000000; // lattice-point / candidate-facet budget
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static Limits with_timeout(double seconds) {
        Limits l;
        l.deadline = std::chrono::steady_clock::now() +
                     std::chrono::microseconds(static_cast<int64_t>(seconds * 1e6));
        return l;
    }

    void check_time() const {
        if (deadline && std::chrono::steady_clock::now() > *deadline)
            throw ResourceLimitError("time limit exceeded");
    }

    void check_degree(int64_t deg) const {
        if (deg > max_total_degree)
            throw ResourceLimitError("total degree " + std::to_string(deg) + " exceeds limit " +
                                     std::to_string(max_total_degree));
    }

    void check_terms(int64_t n) const {
        if (n > max_terms)
            throw ResourceLimitError("term count " + std::to_string(n) + " exceeds limit " +
                                     std::to_string(max_terms));
    }
};

} // namespace symalg

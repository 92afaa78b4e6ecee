#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symalg/polynomial.hpp"

namespace symalg {

// Expression tree for the script language. Names resolve at execution time to
// polynomials, bound ideals, or ring variables; '+', '*', '^' act on either
// polynomials or ideals, '_(n)' is the symbolic-power postfix for ideals.
struct Expr {
    enum class Kind { number, name, string, add, sub, neg, mul, pow, sympow };
    Kind kind = Kind::number;
    Rat number;
    std::string name; // also holds string literals
    std::vector<Expr> kids;
    int64_t exponent = 0; // pow / sympow
    int line = 0, col = 0;
};

struct RingDecl {
    std::vector<std::string> vars;
    bool rational = true;
    uint32_t modulus = 0;
    MonomialOrder order = MonomialOrder::grevlex();
};

struct Statement {
    enum class Kind { ring_decl, ideal_bind, poly_bind, command };
    Kind kind;
    RingDecl ring;                 // ring_decl
    std::string name;              // bind target or command name
    std::vector<Expr> args;        // bind rhs (generator list) or command args
    int line = 0, col = 0;
};

struct Script {
    std::vector<Statement> stmts;
};

Script parse_script(const std::string& text);

RingDecl parse_ring_decl(const std::string& text); // "Q[x,y,z] grevlex"
Ring build_ring(const RingDecl& decl);

// Parse the canonical polynomial text form over a known ring.
Polynomial parse_polynomial(const std::string& text, const Ring& ring);

// Evaluate an expression tree that must denote a polynomial over `ring`.
Polynomial evaluate_polynomial(const Expr& e, const Ring& ring);

// Parse a comma-separated generator list.
std::vector<Polynomial> parse_polynomial_list(const std::string& text, const Ring& ring);

// Parse "3/4" or "2"; errors on anything else.
Rat parse_rational(const std::string& text);

} // namespace symalg

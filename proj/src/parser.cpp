#include "symalg/parser.hpp"

#include <cctype>

namespace symalg {

namespace {

struct Token {
    enum class Kind { ident, integer, str, sym, end };
    Kind kind = Kind::end;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    // true when the upcoming token starts immediately after the previous one
    bool adjacent() const { return adjacent_; }

private:
    void advance() {
        size_t before = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
        adjacent_ = (pos_ == before);
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::Kind::end;
            tok_.text.clear();
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_.kind = Token::Kind::ident;
            tok_.text = text_.substr(start, pos_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_.kind = Token::Kind::integer;
            tok_.text = text_.substr(start, pos_ - start);
        } else if (c == '"') {
            size_t start = ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
            if (pos_ >= text_.size())
                throw ParseError("unterminated string", line_, col_);
            tok_.kind = Token::Kind::str;
            tok_.text = text_.substr(start, pos_ - start);
            ++pos_; // closing quote
        } else {
            tok_.kind = Token::Kind::sym;
            tok_.text = std::string(1, c);
            ++pos_;
        }
        col_ += static_cast<int>(tok_.text.size());
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
    bool adjacent_ = false;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(msg + (t.text.empty() ? "" : " near '" + t.text + "'"), t.line, t.col);
}

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Script script() {
        Script s;
        while (lex_.peek().kind != Token::Kind::end) {
            s.stmts.push_back(statement());
        }
        return s;
    }

    Expr expression_all() {
        Expr e = expression();
        if (lex_.peek().kind != Token::Kind::end) fail(lex_.peek(), "trailing input");
        return e;
    }

    std::vector<Expr> expression_list_all() {
        std::vector<Expr> out;
        out.push_back(expression());
        while (accept_sym(",")) out.push_back(expression());
        if (lex_.peek().kind != Token::Kind::end) fail(lex_.peek(), "trailing input");
        return out;
    }

    RingDecl ring_decl_body() {
        RingDecl decl;
        Token field = expect(Token::Kind::ident, "coefficient field");
        if (field.text == "Q") {
            decl.rational = true;
        } else if (field.text.size() > 1 && field.text[0] == 'F' &&
                   field.text.find_first_not_of("0123456789", 1) == std::string::npos) {
            decl.rational = false;
            decl.modulus = static_cast<uint32_t>(std::stoul(field.text.substr(1)));
        } else {
            fail(field, "expected Q or F<prime>");
        }
        expect_sym("[");
        decl.vars.push_back(expect(Token::Kind::ident, "variable name").text);
        while (accept_sym(",")) decl.vars.push_back(expect(Token::Kind::ident, "variable").text);
        expect_sym("]");
        Token ord = expect(Token::Kind::ident, "monomial order");
        if (ord.text == "lex") {
            decl.order = MonomialOrder::lex();
        } else if (ord.text == "grevlex") {
            decl.order = MonomialOrder::grevlex();
        } else if (ord.text == "block") {
            expect_sym("(");
            Token k = expect(Token::Kind::integer, "block size");
            expect_sym(")");
            decl.order = MonomialOrder::block(std::stoi(k.text));
        } else {
            fail(ord, "unknown order (expected lex, grevlex or block(k))");
        }
        if (decl.vars.size() > PolyRing::kMaxUserVars)
            fail(ord, "at most " + std::to_string(PolyRing::kMaxUserVars) + " variables");
        return decl;
    }

    bool at_end() const { return lex_.peek().kind == Token::Kind::end; }

private:
    Statement statement() {
        Token head = expect(Token::Kind::ident, "statement");
        Statement st;
        st.line = head.line;
        st.col = head.col;
        if (head.text == "ring") {
            st.kind = Statement::Kind::ring_decl;
            st.ring = ring_decl_body();
        } else if (head.text == "ideal" || head.text == "poly") {
            Token second = expect(Token::Kind::ident, "name");
            if (check_sym("=")) {
                st.kind = head.text == "ideal" ? Statement::Kind::ideal_bind
                                               : Statement::Kind::poly_bind;
                st.name = second.text;
                expect_sym("=");
                st.args.push_back(expression());
                while (accept_sym(",")) st.args.push_back(expression());
                if (st.kind == Statement::Kind::poly_bind && st.args.size() != 1)
                    fail(head, "poly binding takes a single expression");
            } else {
                // command form: ideal <op> args...
                if (head.text == "poly") fail(second, "expected '=' after the name");
                st.kind = Statement::Kind::command;
                st.name = head.text;
                Expr op{};
                op.kind = Expr::Kind::name;
                op.name = second.text;
                op.line = second.line;
                op.col = second.col;
                st.args.push_back(std::move(op));
                while (!check_sym(";") && lex_.peek().kind != Token::Kind::end)
                    st.args.push_back(expression());
            }
        } else {
            st.kind = Statement::Kind::command;
            st.name = command_name(head);
            while (!check_sym(";") && lex_.peek().kind != Token::Kind::end)
                st.args.push_back(expression());
        }
        expect_sym(";");
        return st;
    }

    // command names may contain '-' between identifier parts (testideal-snc)
    std::string command_name(const Token& head) {
        std::string name = head.text;
        while (check_sym("-") && lex_.adjacent()) {
            lex_.next();
            Token part = expect(Token::Kind::ident, "command name part");
            name += "-" + part.text;
        }
        return name;
    }

    Expr expression() {
        Expr e = term();
        while (true) {
            if (accept_sym("+")) {
                Expr r{};
                r.kind = Expr::Kind::add;
                r.line = e.line;
                r.col = e.col;
                r.kids = {std::move(e), term()};
                e = std::move(r);
            } else if (check_sym("-")) {
                lex_.next();
                Expr r{};
                r.kind = Expr::Kind::sub;
                r.line = e.line;
                r.col = e.col;
                r.kids = {std::move(e), term()};
                e = std::move(r);
            } else {
                return e;
            }
        }
    }

    Expr term() {
        Expr e = factor();
        while (accept_sym("*")) {
            Expr r{};
            r.kind = Expr::Kind::mul;
            r.line = e.line;
            r.col = e.col;
            r.kids = {std::move(e), factor()};
            e = std::move(r);
        }
        return e;
    }

    Expr factor() {
        Expr e = atom();
        while (true) {
            if (accept_sym("^")) {
                Token n = expect(Token::Kind::integer, "exponent");
                Expr r{};
                r.kind = Expr::Kind::pow;
                r.exponent = std::stoll(n.text);
                r.line = e.line;
                r.col = e.col;
                r.kids = {std::move(e)};
                e = std::move(r);
            } else if (check_sym("_")) {
                lex_.next();
                expect_sym("(");
                Token n = expect(Token::Kind::integer, "symbolic power level");
                expect_sym(")");
                Expr r{};
                r.kind = Expr::Kind::sympow;
                r.exponent = std::stoll(n.text);
                r.line = e.line;
                r.col = e.col;
                r.kids = {std::move(e)};
                e = std::move(r);
            } else {
                return e;
            }
        }
    }

    Expr atom() {
        Token t = lex_.peek();
        if (t.kind == Token::Kind::integer) {
            lex_.next();
            Expr e{};
            e.kind = Expr::Kind::number;
            e.line = t.line;
            e.col = t.col;
            Int num(t.text);
            if (check_sym("/")) {
                lex_.next();
                Token den = expect(Token::Kind::integer, "denominator");
                Int d(den.text);
                if (d == 0) fail(den, "zero denominator");
                e.number = Rat(num, d);
                e.number.canonicalize();
            } else {
                e.number = Rat(num);
            }
            return e;
        }
        if (t.kind == Token::Kind::ident) {
            lex_.next();
            Expr e{};
            e.kind = Expr::Kind::name;
            e.name = t.text;
            e.line = t.line;
            e.col = t.col;
            return e;
        }
        if (t.kind == Token::Kind::str) {
            lex_.next();
            Expr e{};
            e.kind = Expr::Kind::string;
            e.name = t.text;
            e.line = t.line;
            e.col = t.col;
            return e;
        }
        if (t.kind == Token::Kind::sym && t.text == "(") {
            lex_.next();
            Expr e = expression();
            expect_sym(")");
            return e;
        }
        if (t.kind == Token::Kind::sym && t.text == "-") {
            lex_.next();
            Expr e{};
            e.kind = Expr::Kind::neg;
            e.line = t.line;
            e.col = t.col;
            e.kids = {factor()};
            return e;
        }
        fail(t, "expected expression");
    }

    Token expect(Token::Kind k, const std::string& what) {
        if (lex_.peek().kind != k) fail(lex_.peek(), "expected " + what);
        return lex_.next();
    }

    void expect_sym(const std::string& s) {
        if (!check_sym(s)) fail(lex_.peek(), "expected '" + s + "'");
        lex_.next();
    }

    bool check_sym(const std::string& s) const {
        return lex_.peek().kind == Token::Kind::sym && lex_.peek().text == s;
    }

    bool accept_sym(const std::string& s) {
        if (!check_sym(s)) return false;
        lex_.next();
        return true;
    }

    Lexer lex_;
};

} // namespace

Polynomial evaluate_polynomial(const Expr& e, const Ring& ring) {
    switch (e.kind) {
    case Expr::Kind::number:
        return Polynomial::constant(ring, e.number);
    case Expr::Kind::name: {
        int idx = ring->var_index(e.name);
        if (idx < 0) throw ParseError("unknown variable " + e.name, e.line, e.col);
        return Polynomial::variable(ring, static_cast<size_t>(idx));
    }
    case Expr::Kind::add:
        return evaluate_polynomial(e.kids[0], ring) + evaluate_polynomial(e.kids[1], ring);
    case Expr::Kind::sub:
        return evaluate_polynomial(e.kids[0], ring) - evaluate_polynomial(e.kids[1], ring);
    case Expr::Kind::neg:
        return -evaluate_polynomial(e.kids[0], ring);
    case Expr::Kind::mul:
        return evaluate_polynomial(e.kids[0], ring) * evaluate_polynomial(e.kids[1], ring);
    case Expr::Kind::pow:
        return evaluate_polynomial(e.kids[0], ring).pow(e.exponent);
    case Expr::Kind::string:
        throw ParseError("string literal is not a polynomial", e.line, e.col);
    case Expr::Kind::sympow:
        throw ParseError("symbolic power is not a polynomial operation", e.line, e.col);
    }
    throw ParseError("bad expression", e.line, e.col);
}

Script parse_script(const std::string& text) {
    Parser p(text);
    return p.script();
}

RingDecl parse_ring_decl(const std::string& text) {
    Parser p(text);
    RingDecl d = p.ring_decl_body();
    if (!p.at_end()) throw ParseError("trailing input after ring declaration", 1, 1);
    return d;
}

Ring build_ring(const RingDecl& decl) {
    if (decl.rational) return make_rational_ring(decl.vars, decl.order);
    return make_prime_field_ring(decl.vars, decl.modulus, decl.order);
}

Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
    Parser p(text);
    return evaluate_polynomial(p.expression_all(), ring);
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text, const Ring& ring) {
    Parser p(text);
    std::vector<Polynomial> out;
    for (const Expr& e : p.expression_list_all()) out.push_back(evaluate_polynomial(e, ring));
    return out;
}

Rat parse_rational(const std::string& text) {
    Parser p(text);
    Expr e = p.expression_all();
    bool neg = false;
    const Expr* node = &e;
    if (node->kind == Expr::Kind::neg) {
        neg = true;
        node = &node->kids[0];
    }
    if (node->kind != Expr::Kind::number) throw ParseError("expected a rational number", 1, 1);
    return neg ? Rat(-node->number) : node->number;
}

} // namespace symalg

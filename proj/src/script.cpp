#include "symalg/script.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "symalg/asymptotic.hpp"
#include "symalg/rees.hpp"
#include "symalg/snc.hpp"
#include "symalg/symbolic_power.hpp"

namespace symalg {

namespace {

struct Value {
    enum class Kind { number, poly, ideal };
    Kind kind = Kind::number;
    Rat number;
    std::optional<Polynomial> poly;
    std::optional<Ideal> ideal;

    static Value of(Rat q) {
        Value v;
        v.kind = Kind::number;
        v.number = std::move(q);
        return v;
    }
    static Value of(Polynomial p) {
        Value v;
        v.kind = Kind::poly;
        v.poly = std::move(p);
        return v;
    }
    static Value of(Ideal i) {
        Value v;
        v.kind = Kind::ideal;
        v.ideal = std::move(i);
        return v;
    }
};

struct Env {
    std::optional<Ring> ring;
    std::map<std::string, Polynomial> polys;
    std::map<std::string, Ideal> ideals;
    ExecOptions opts;
    std::ostringstream out;
    nlohmann::json json = nlohmann::json::array();
    int exit_code = 0;

    Limits limits() const {
        return opts.timeout_s > 0 ? Limits::with_timeout(opts.timeout_s) : Limits{};
    }

    const Ring& need_ring(const Statement& st) const {
        if (!ring) throw ParseError("no ring declared", st.line, st.col);
        return *ring;
    }
};

[[noreturn]] void eval_fail(const Expr& e, const std::string& msg) {
    throw ParseError(msg, e.line, e.col);
}

Polynomial as_poly(const Env& env, const Value& v, const Expr& at) {
    if (v.kind == Value::Kind::poly) return *v.poly;
    if (v.kind == Value::Kind::number) {
        if (!env.ring) eval_fail(at, "no ring declared");
        return Polynomial::constant(*env.ring, v.number);
    }
    eval_fail(at, "expected a polynomial");
}

Ideal as_ideal(const Env& env, const Value& v, const Expr& at) {
    (void)env;
    if (v.kind == Value::Kind::ideal) return *v.ideal;
    if (v.kind == Value::Kind::poly) return Ideal(v.poly->ring(), {*v.poly});
    eval_fail(at, "expected an ideal");
}

Value eval(Env& env, const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::number:
        return Value::of(e.number);
    case Expr::Kind::string:
        eval_fail(e, "string literal in expression");
    case Expr::Kind::name: {
        auto ip = env.polys.find(e.name);
        if (ip != env.polys.end()) return Value::of(ip->second);
        auto ii = env.ideals.find(e.name);
        if (ii != env.ideals.end()) return Value::of(ii->second);
        if (env.ring) {
            int idx = (*env.ring)->var_index(e.name);
            if (idx >= 0)
                return Value::of(Polynomial::variable(*env.ring, static_cast<size_t>(idx)));
        }
        eval_fail(e, "unbound name " + e.name);
    }
    case Expr::Kind::neg: {
        Value v = eval(env, e.kids[0]);
        if (v.kind == Value::Kind::number) return Value::of(Rat(-v.number));
        if (v.kind == Value::Kind::poly) return Value::of(-*v.poly);
        eval_fail(e, "cannot negate an ideal");
    }
    case Expr::Kind::add:
    case Expr::Kind::sub: {
        Value a = eval(env, e.kids[0]);
        Value b = eval(env, e.kids[1]);
        bool add = e.kind == Expr::Kind::add;
        if (a.kind == Value::Kind::number && b.kind == Value::Kind::number)
            return Value::of(add ? Rat(a.number + b.number) : Rat(a.number - b.number));
        if (a.kind == Value::Kind::ideal || b.kind == Value::Kind::ideal) {
            if (!add) eval_fail(e, "ideals cannot be subtracted");
            return Value::of(ideal_sum(as_ideal(env, a, e), as_ideal(env, b, e)));
        }
        Polynomial pa = as_poly(env, a, e), pb = as_poly(env, b, e);
        return Value::of(add ? pa + pb : pa - pb);
    }
    case Expr::Kind::mul: {
        Value a = eval(env, e.kids[0]);
        Value b = eval(env, e.kids[1]);
        if (a.kind == Value::Kind::number && b.kind == Value::Kind::number)
            return Value::of(Rat(a.number * b.number));
        if (a.kind == Value::Kind::ideal || b.kind == Value::Kind::ideal)
            return Value::of(ideal_product(as_ideal(env, a, e), as_ideal(env, b, e)));
        return Value::of(as_poly(env, a, e) * as_poly(env, b, e));
    }
    case Expr::Kind::pow: {
        Value a = eval(env, e.kids[0]);
        if (a.kind == Value::Kind::number) {
            Rat r(1);
            for (int64_t i = 0; i < e.exponent; ++i) r *= a.number;
            return Value::of(r);
        }
        if (a.kind == Value::Kind::ideal)
            return Value::of(ideal_power(*a.ideal, e.exponent));
        return Value::of(a.poly->pow(e.exponent));
    }
    case Expr::Kind::sympow: {
        Value a = eval(env, e.kids[0]);
        if (a.kind != Value::Kind::ideal) eval_fail(e, "symbolic power needs an ideal");
        MonomialIdeal M = MonomialIdeal::from_ideal(*a.ideal);
        return Value::of(
            symbolic_power_squarefree_monomial(M, e.exponent, env.limits()).to_ideal());
    }
    }
    eval_fail(e, "bad expression");
}

std::string ideal_canonical(Env& env, const Ideal& I) {
    // reduced Groebner basis in braces: canonical for the ideal and its order
    return I.gb(env.limits()).str();
}

void emit(Env& env, const std::string& command, const std::vector<std::string>& lines) {
    for (const auto& l : lines) env.out << l << "\n";
    nlohmann::json rec;
    rec["command"] = command;
    rec["output"] = lines;
    env.json.push_back(rec);
}

std::string name_of(const Expr& e) {
    if (e.kind != Expr::Kind::name) return "";
    return e.name;
}

int64_t as_int(Env& env, const Expr& e) {
    Value v = eval(env, e);
    if (v.kind != Value::Kind::number || Int(v.number.get_den()) != 1)
        eval_fail(e, "expected an integer");
    return static_cast<int64_t>(v.number.get_num().get_si());
}

Rat as_rat(Env& env, const Expr& e) {
    Value v = eval(env, e);
    if (v.kind != Value::Kind::number) eval_fail(e, "expected a rational number");
    return v.number;
}

MonomialIdeal as_monomial_ideal(Env& env, const Expr& e) {
    return MonomialIdeal::from_ideal(as_ideal(env, eval(env, e), e));
}

void require_args(const Statement& st, size_t lo, size_t hi) {
    if (st.args.size() < lo || st.args.size() > hi)
        throw ParseError("command " + st.name + " takes " + std::to_string(lo) +
                             (hi == lo ? "" : ".." + std::to_string(hi)) + " arguments",
                         st.line, st.col);
}

void run_command(Env& env, const Statement& st) {
    const std::string& cmd = st.name;
    Limits lim = env.limits();

    if (cmd == "print") {
        require_args(st, 1, 1);
        Value v = eval(env, st.args[0]);
        std::string s = v.kind == Value::Kind::number ? rat_str(v.number)
                        : v.kind == Value::Kind::poly ? v.poly->str()
                                                      : v.ideal->str();
        emit(env, cmd, {s});
        return;
    }
    if (cmd == "gb") {
        require_args(st, 1, 1);
        Ideal I = as_ideal(env, eval(env, st.args[0]), st.args[0]);
        emit(env, cmd, {I.gb(lim).str()});
        return;
    }
    if (cmd == "ideal") {
        // ideal <op> args...
        require_args(st, 2, 4);
        std::string op = name_of(st.args[0]);
        if (op == "sum" || op == "product" || op == "intersect") {
            require_args(st, 3, 3);
            Ideal a = as_ideal(env, eval(env, st.args[1]), st.args[1]);
            Ideal b = as_ideal(env, eval(env, st.args[2]), st.args[2]);
            Ideal r = op == "sum"       ? ideal_sum(a, b)
                      : op == "product" ? ideal_product(a, b)
                                        : intersect(a, b, lim);
            emit(env, cmd, {ideal_canonical(env, r)});
        } else if (op == "power") {
            require_args(st, 3, 3);
            Ideal a = as_ideal(env, eval(env, st.args[1]), st.args[1]);
            emit(env, cmd, {ideal_canonical(env, ideal_power(a, as_int(env, st.args[2])))});
        } else if (op == "colon" || op == "saturate") {
            require_args(st, 3, 3);
            Ideal a = as_ideal(env, eval(env, st.args[1]), st.args[1]);
            Value fv = eval(env, st.args[2]);
            Polynomial f = as_poly(env, fv, st.args[2]);
            Ideal r = op == "colon" ? colon(a, f, lim) : saturate(a, f, lim);
            emit(env, cmd, {ideal_canonical(env, r)});
        } else {
            throw ParseError("unknown ideal operation " + op, st.line, st.col);
        }
        return;
    }
    if (cmd == "contain") {
        require_args(st, 2, 2);
        Ideal a = as_ideal(env, eval(env, st.args[0]), st.args[0]);
        Ideal b = as_ideal(env, eval(env, st.args[1]), st.args[1]);
        emit(env, cmd, {a.contains(b, lim) ? "true" : "false"});
        return;
    }
    if (cmd == "radical-member") {
        require_args(st, 2, 2);
        Polynomial f = as_poly(env, eval(env, st.args[0]), st.args[0]);
        Ideal I = as_ideal(env, eval(env, st.args[1]), st.args[1]);
        emit(env, cmd, {radical_membership(f, I, lim) ? "true" : "false"});
        return;
    }
    if (cmd == "sympow") {
        // sympow I n [witness f [exact]]
        require_args(st, 2, 5);
        int64_t n = as_int(env, st.args[1]);
        if (st.args.size() == 2) {
            MonomialIdeal M = as_monomial_ideal(env, st.args[0]);
            SymbolicPowerResult r = symbolic_power_squarefree(M, n, lim);
            emit(env, cmd, {ideal_canonical(env, r.ideal), "certainty: exact"});
        } else {
            if (name_of(st.args[2]) != "witness")
                throw ParseError("expected 'witness <poly>' after the level", st.line, st.col);
            require_args(st, 4, 5);
            bool exact = st.args.size() == 5;
            if (exact && name_of(st.args[4]) != "exact")
                throw ParseError("trailing token must be 'exact'", st.line, st.col);
            Ideal Q = as_ideal(env, eval(env, st.args[0]), st.args[0]);
            Q.primality = Primality::asserted_prime;
            Polynomial w = as_poly(env, eval(env, st.args[3]), st.args[3]);
            SymbolicPowerResult r = symbolic_power_prime(Q, n, w, exact, lim);
            emit(env, cmd,
                 {ideal_canonical(env, r.ideal),
                  std::string("certainty: ") +
                      (r.certainty == Certainty::exact ? "exact" : "lower-bound")});
        }
        return;
    }
    if (cmd == "closure") {
        require_args(st, 1, 1);
        MonomialIdeal M = as_monomial_ideal(env, st.args[0]);
        emit(env, cmd, {integral_closure(M, lim).str()});
        return;
    }
    if (cmd == "multiplier") {
        require_args(st, 2, 2);
        MonomialIdeal M = as_monomial_ideal(env, st.args[0]);
        emit(env, cmd, {multiplier_ideal_monomial(M, as_rat(env, st.args[1]), lim).str()});
        return;
    }
    if (cmd == "minprimes") {
        require_args(st, 1, 1);
        MonomialIdeal M = as_monomial_ideal(env, st.args[0]);
        auto primes = minimal_primes_squarefree(M);
        std::vector<std::string> lines;
        for (const auto& p : primes) {
            std::string s = "(";
            for (size_t i = 0; i < p.size(); ++i)
                s += (i ? ", " : "") + M.ring()->var_name(static_cast<size_t>(p[i]));
            lines.push_back(s + ")");
        }
        lines.push_back("height " + std::to_string(height_squarefree(M)) + ", big height " +
                        std::to_string(big_height_squarefree(M)));
        emit(env, cmd, lines);
        return;
    }
    if (cmd == "testideal-snc" || cmd == "testideal") {
        require_args(st, 2, 2);
        const Ring& ring = env.need_ring(st);
        if (ring->var_name(0) != "p")
            throw ParseError("testideal-snc needs a ring whose first variable is p", st.line,
                             st.col);
        MixedModel model{ring, 2};
        Polynomial f = as_poly(env, eval(env, st.args[0]), st.args[0]);
        SncMonomial mono = snc_from_polynomial(model, f);
        Rat t = as_rat(env, st.args[1]);
        MonomialIdeal tau = snc_test_ideal(model, mono, FormalExponent(t));
        emit(env, cmd, {Polynomial::monomial(ring, tau.gens().at(0)).str()});
        return;
    }
    if (cmd == "rees") {
        require_args(st, 1, 1);
        Ideal I = as_ideal(env, eval(env, st.args[0]), st.args[0]);
        ReesPresentation rp = rees_presentation(I, lim);
        emit(env, cmd, {rp.presentation.str()});
        return;
    }
    if (cmd == "chart") {
        require_args(st, 2, 2);
        Ideal I = as_ideal(env, eval(env, st.args[0]), st.args[0]);
        int64_t i = as_int(env, st.args[1]);
        ReesPresentation rp = rees_presentation(I, lim);
        BlowupChart ch = chart(rp, static_cast<int>(i), lim);
        std::vector<std::string> lines;
        std::string vars = "chart ring vars:";
        for (const auto& v : ch.chart_ring->vars()) vars += " " + v;
        lines.push_back(vars);
        for (const auto& r : ch.relations) lines.push_back(r.str());
        if (ch.relations.empty()) lines.push_back("(no relations)");
        emit(env, cmd, lines);
        return;
    }
    if (cmd == "kcanonical") {
        require_args(st, 1, 1);
        int64_t d = as_int(env, st.args[0]);
        int64_t k = relative_canonical_maxideal(static_cast<int>(d));
        emit(env, cmd, {std::to_string(k)});
        return;
    }
    if (cmd == "asymptotic") {
        // asymptotic <powers|sympowers> I n
        require_args(st, 3, 3);
        std::string kind = name_of(st.args[0]);
        MonomialIdeal M = as_monomial_ideal(env, st.args[1]);
        GradedSequence seq = kind == "powers" ? GradedSequence::powers(M)
                             : kind == "sympowers"
                                 ? GradedSequence::symbolic_powers_squarefree(M)
                                 : throw ParseError("sequence must be powers or sympowers",
                                                    st.line, st.col);
        AsymptoticIdeal a =
            asymptotic_ideal(seq, as_int(env, st.args[2]), AsymptoticOracle::multiplier, lim);
        emit(env, cmd,
             {a.stabilized.str(), "l* = " + std::to_string(a.stabilizing_multiple)});
        return;
    }
    if (cmd == "pipeline") {
        require_args(st, 2, 2);
        MonomialIdeal M = as_monomial_ideal(env, st.args[0]);
        PipelineReport rep = main_theorem_pipeline(M, as_int(env, st.args[1]), lim);
        std::vector<std::string> lines;
        for (const auto& l : rep.links)
            lines.push_back(std::string(l.pass ? "pass " : "FAIL ") + l.name +
                            (l.oracle_level ? " [oracle]" : " [exact]") + "  " + l.detail);
        lines.push_back(rep.all_pass ? "pipeline: all links pass" : "pipeline: FAILED");
        emit(env, cmd, lines);
        if (!rep.all_pass) env.exit_code = std::max(env.exit_code, 1);
        return;
    }
    if (cmd == "verify") {
        require_args(st, 0, 1);
        std::string filter;
        if (!st.args.empty()) {
            const Expr& a = st.args[0];
            if (a.kind == Expr::Kind::name || a.kind == Expr::Kind::string) filter = a.name;
            else throw ParseError("verify filter must be a name or string", st.line, st.col);
        }
        std::vector<CorpusCase> cases;
        if (env.opts.corpus_path) {
            std::ifstream in(*env.opts.corpus_path);
            if (!in) throw DomainError("cannot open corpus " + *env.opts.corpus_path);
            std::stringstream ss;
            ss << in.rdbuf();
            cases = parse_corpus_text(ss.str());
        } else {
            cases = builtin_corpus();
        }
        if (!env.opts.random_counts.empty()) {
            auto extra = generate_random_cases(env.opts.seed, env.opts.random_counts);
            cases.insert(cases.end(), extra.begin(), extra.end());
        }
        VerificationReport rep = run_corpus(cases, filter, env.opts.parallelism,
                                            env.opts.timeout_s, env.opts.seed);
        std::vector<std::string> lines;
        std::istringstream tbl(rep.table());
        std::string l;
        while (std::getline(tbl, l)) lines.push_back(l);
        emit(env, cmd, lines);
        env.json.back()["report"] = nlohmann::json::parse(rep.json());
        if (!rep.all_ok()) env.exit_code = std::max(env.exit_code, 1);
        return;
    }
    throw ParseError("unknown command " + cmd, st.line, st.col);
}

} // namespace

ExecResult execute_script(const Script& script, const ExecOptions& opts) {
    Env env;
    env.opts = opts;
    ExecResult res;
    try {
        for (const auto& st : script.stmts) {
            switch (st.kind) {
            case Statement::Kind::ring_decl:
                if (env.ring) throw ParseError("ring already declared", st.line, st.col);
                env.ring = build_ring(st.ring);
                break;
            case Statement::Kind::poly_bind: {
                env.need_ring(st);
                Value v = eval(env, st.args[0]);
                env.polys.erase(st.name);
                env.ideals.erase(st.name);
                env.polys.emplace(st.name, as_poly(env, v, st.args[0]));
                break;
            }
            case Statement::Kind::ideal_bind: {
                env.need_ring(st);
                std::vector<Polynomial> gens;
                std::optional<Ideal> single;
                if (st.args.size() == 1) {
                    Value v = eval(env, st.args[0]);
                    if (v.kind == Value::Kind::ideal) single = *v.ideal;
                    else gens.push_back(as_poly(env, v, st.args[0]));
                } else {
                    for (const auto& a : st.args)
                        gens.push_back(as_poly(env, eval(env, a), a));
                }
                env.polys.erase(st.name);
                env.ideals.erase(st.name);
                if (single) {
                    env.ideals.emplace(st.name, *single);
                } else {
                    const Ring& r = env.need_ring(st);
                    env.ideals.emplace(st.name, Ideal(r, std::move(gens)));
                }
                break;
            }
            case Statement::Kind::command:
                run_command(env, st);
                break;
            }
        }
    } catch (const ParseError&) {
        throw;
    } catch (const ResourceLimitError&) {
        throw;
    }
    res.exit_code = env.exit_code;
    res.output = env.out.str();
    res.json = env.json.dump(2);
    return res;
}

ExecResult execute_text(const std::string& text, const ExecOptions& opts) {
    return execute_script(parse_script(text), opts);
}

} // namespace symalg

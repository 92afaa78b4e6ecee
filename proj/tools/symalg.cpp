#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symalg/script.hpp"
#include "symalg/snc.hpp"

using namespace symalg;

namespace {

struct GlobalFlags {
    std::string json_path;
    uint64_t seed = 1;
    double timeout_s = 30;
    int parallel = 1;
};

void env_default(const char* name, std::string& target) {
    if (const char* v = std::getenv(name)) target = v;
}

ExecOptions to_options(const GlobalFlags& g) {
    ExecOptions o;
    o.seed = g.seed;
    o.timeout_s = g.timeout_s;
    o.parallelism = g.parallel;
    return o;
}

int finish(const ExecResult& res, const GlobalFlags& g) {
    std::cout << res.output;
    if (!g.json_path.empty()) {
        std::ofstream out(g.json_path);
        if (!out) {
            std::cerr << "cannot write " << g.json_path << "\n";
            return 2;
        }
        out << res.json << "\n";
    }
    return res.exit_code;
}

int run_text(const std::string& text, const GlobalFlags& g, const ExecOptions& opts) {
    try {
        return finish(execute_text(text, opts), g);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

// one-shot subcommands synthesize a single-command script
std::string quote_ring_stmt(const std::string& ring_decl) { return "ring " + ring_decl + ";\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact commutative-algebra toolkit: Groebner bases, symbolic powers,\n"
                 "monomial multiplier ideals, SNC test ideals, Rees blowups"};
    app.require_subcommand(1);

    GlobalFlags g;
    {
        std::string env;
        env_default("SYMALG_JSON", g.json_path);
        env_default("SYMALG_SEED", env);
        if (!env.empty()) g.seed = std::stoull(env);
        env.clear();
        env_default("SYMALG_TIMEOUT", env);
        if (!env.empty()) g.timeout_s = std::stod(env);
        env.clear();
        env_default("SYMALG_PARALLEL", env);
        if (!env.empty()) g.parallel = std::stoi(env);
    }
    app.add_option("--json", g.json_path, "write machine-readable output to this path");
    app.add_option("--seed", g.seed, "seed for randomized suites");
    app.add_option("--timeout", g.timeout_s, "per-command / per-case timeout in seconds");
    app.add_option("--parallel", g.parallel, "verification parallelism");

    // script execution
    std::string run_path, eval_text;
    auto* run = app.add_subcommand("run", "execute a script file");
    run->add_option("file", run_path, "script path")->required();
    auto* eval = app.add_subcommand("eval", "execute a script given on the command line");
    eval->add_option("script", eval_text, "script text")->required();

    // one-shot algebra commands over an explicit ring
    std::string ring_decl, ideal_text;
    std::string arg_a, arg_b;

    auto add_ring_ideal = [&](CLI::App* c, bool needs_ring = true) {
        if (needs_ring)
            c->add_option("--ring", ring_decl, "ring declaration, e.g. \"Q[x,y] grevlex\"")
                ->required();
        c->add_option("ideal", ideal_text, "comma-separated generators")->required();
    };

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
    add_ring_ideal(gb);

    auto* idealc = app.add_subcommand("ideal", "ideal arithmetic (sum/product/power/"
                                               "intersect/colon/saturate)");
    std::string ideal_op, ideal_rhs;
    idealc->add_option("--ring", ring_decl, "ring declaration")->required();
    idealc->add_option("op", ideal_op, "sum|product|power|intersect|colon|saturate")->required();
    idealc->add_option("lhs", ideal_text, "generators of the first ideal")->required();
    idealc->add_option("rhs", ideal_rhs, "second ideal / polynomial / integer")->required();

    auto* sympow = app.add_subcommand("sympow", "symbolic power");
    sympow->add_option("--ring", ring_decl, "ring declaration")->required();
    sympow->add_option("ideal", ideal_text, "generators")->required();
    std::string sympow_n;
    sympow->add_option("n", sympow_n, "level")->required();
    std::string witness_text;
    bool witness_exact = false;
    sympow->add_option("--witness", witness_text,
                       "witness outside the prime (enables the saturation path)");
    sympow->add_flag("--exact", witness_exact,
                     "assert the witness covers every embedded prime");

    auto* contain = app.add_subcommand("contain", "does the first ideal contain the second?");
    contain->add_option("--ring", ring_decl, "ring declaration")->required();
    contain->add_option("lhs", arg_a, "containing ideal expression")->required();
    contain->add_option("rhs", arg_b, "contained ideal expression")->required();

    auto* closure = app.add_subcommand("closure", "integral closure of a monomial ideal");
    add_ring_ideal(closure);

    auto* multiplier = app.add_subcommand("multiplier", "monomial multiplier ideal");
    multiplier->add_option("--ring", ring_decl, "ring declaration")->required();
    multiplier->add_option("ideal", ideal_text, "monomial generators")->required();
    std::string t_text;
    multiplier->add_option("t", t_text, "rational exponent")->required();

    auto* minprimes = app.add_subcommand("minprimes", "minimal primes of a squarefree "
                                                      "monomial ideal, with heights");
    add_ring_ideal(minprimes);

    auto* snc = app.add_subcommand("testideal-snc", "closed-form SNC test ideal");
    std::string snc_f, snc_t;
    snc->add_option("f", snc_f, "monomial, e.g. p^2*x^3*y^5")->required();
    snc->add_option("t", snc_t, "rational exponent")->required();

    auto* rees = app.add_subcommand("rees", "Rees algebra presentation ideal");
    add_ring_ideal(rees);

    auto* chart = app.add_subcommand("chart", "affine chart of the blowup");
    chart->add_option("--ring", ring_decl, "ring declaration")->required();
    chart->add_option("ideal", ideal_text, "generators")->required();
    std::string chart_i;
    chart->add_option("i", chart_i, "chart index (1-based)")->required();

    auto* kcan = app.add_subcommand("kcanonical", "relative canonical coefficient of the "
                                                  "maximal-ideal blowup");
    std::string kcan_d;
    kcan->add_option("d", kcan_d, "dimension")->required();

    auto* asym = app.add_subcommand("asymptotic", "stabilized asymptotic ideal");
    asym->add_option("--ring", ring_decl, "ring declaration")->required();
    std::string seq_kind, asym_n;
    asym->add_option("seq", seq_kind, "powers|sympowers")->required();
    asym->add_option("ideal", ideal_text, "monomial generators")->required();
    asym->add_option("n", asym_n, "base level")->required();

    auto* pipeline = app.add_subcommand("pipeline", "full symbolic-power containment chain");
    pipeline->add_option("--ring", ring_decl, "ring declaration")->required();
    pipeline->add_option("ideal", ideal_text, "squarefree monomial generators")->required();
    std::string pipeline_m;
    pipeline->add_option("m", pipeline_m, "power")->required();

    auto* verify = app.add_subcommand("verify", "run the verification corpus");
    std::string filter, corpus_path;
    int random_count = 0;
    verify->add_option("--filter", filter, "kind, id, or id prefix ending in *");
    verify->add_option("--corpus", corpus_path, "corpus file replacing the builtin cases");
    verify->add_option("--random", random_count, "extra random cases per kind");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    ExecOptions opts = to_options(g);

    if (*run) {
        std::ifstream in(run_path);
        if (!in) {
            std::cerr << "cannot open " << run_path << "\n";
            return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        return run_text(ss.str(), g, opts);
    }
    if (*eval) return run_text(eval_text, g, opts);

    std::ostringstream script;
    if (*gb) {
        script << quote_ring_stmt(ring_decl) << "ideal I = " << ideal_text << ";\ngb I;\n";
    } else if (*idealc) {
        script << quote_ring_stmt(ring_decl) << "ideal I = " << ideal_text << ";\n";
        if (ideal_op == "power" || ideal_op == "colon" || ideal_op == "saturate") {
            script << "ideal " << ideal_op << " I " << ideal_rhs << ";\n";
        } else {
            script << "ideal J = " << ideal_rhs << ";\nideal " << ideal_op << " I J;\n";
        }
    } else if (*sympow) {
        script << quote_ring_stmt(ring_decl) << "ideal I = " << ideal_text << ";\n";
        script << "sympow I " << sympow_n;
        if (!witness_text.empty()) {
            script << " witness " << witness_text;
            if (witness_exact) script << " exact";
        }
        script << ";\n";
    } else if (*contain) {
        script << quote_ring_stmt(ring_decl) << "ideal A = " << arg_a << ";\nideal B = "
               << arg_b << ";\ncontain A B;\n";
    } else if (*closure) {
        script << quote_ring_stmt(ring_decl) << "ideal I = " << ideal_text << ";\nclosure I;\n";
    } else if (*multiplier) {
        script << quote_ring_stmt(ring_decl) << "ideal I = " << ideal_text << ";\nmultiplier I "
               << t_text << ";\n";
    } else if (*minprimes) {
        script << quote_ring_stmt(ring_decl) << "ideal I = " << ideal_text << ";\nminprimes I;\n";
    } else if (*snc) {
        try {
            auto [model, mono] = parse_snc_monomial(snc_f);
            MonomialIdeal tau = snc_test_ideal(model, mono, FormalExponent(parse_rational(snc_t)));
            ExecResult res;
            res.output = Polynomial::monomial(model.ring, tau.gens().at(0)).str() + "\n";
            res.json = "[{\"command\":\"testideal-snc\",\"output\":[\"" +
                       Polynomial::monomial(model.ring, tau.gens().at(0)).str() + "\"]}]";
            return finish(res, g);
        } catch (const ParseError& e) {
            std::cerr << "parse error: " << e.what() << "\n";
            return 2;
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    } else if (*rees) {
        script << quote_ring_stmt(ring_decl) << "ideal I = " << ideal_text << ";\nrees I;\n";
    } else if (*chart) {
        script << quote_ring_stmt(ring_decl) << "ideal I = " << ideal_text << ";\nchart I "
               << chart_i << ";\n";
    } else if (*kcan) {
        script << "kcanonical " << kcan_d << ";\n";
    } else if (*asym) {
        script << quote_ring_stmt(ring_decl) << "ideal I = " << ideal_text << ";\nasymptotic "
               << seq_kind << " I " << asym_n << ";\n";
    } else if (*pipeline) {
        script << quote_ring_stmt(ring_decl) << "ideal I = " << ideal_text << ";\npipeline I "
               << pipeline_m << ";\n";
    } else if (*verify) {
        opts.corpus_path = corpus_path.empty() ? std::nullopt
                                               : std::optional<std::string>(corpus_path);
        if (random_count > 0) {
            opts.random_counts = {{"snc-property", random_count},
                                  {"monomial-multiplier", random_count},
                                  {"main-theorem", random_count},
                                  {"asymptotic", random_count}};
        }
        script << "verify";
        if (!filter.empty()) script << " \"" << filter << "\"";
        script << ";\n";
    }
    return run_text(script.str(), g, opts);
}

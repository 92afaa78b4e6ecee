#include "symalg/corpus.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "symalg/asymptotic.hpp"
#include "symalg/parser.hpp"
#include "symalg/rees.hpp"
#include "symalg/snc.hpp"
#include "symalg/symbolic_power.hpp"

namespace symalg {

namespace {

std::string quote_if_needed(const std::string& v) {
    if (v.find(' ') == std::string::npos && v.find('"') == std::string::npos && !v.empty())
        return v;
    return "\"" + v + "\"";
}

} // namespace

std::vector<CorpusCase> parse_corpus_text(const std::string& text) {
    std::vector<CorpusCase> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = 0;
        auto skip_ws = [&]() {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        };
        skip_ws();
        if (pos >= line.size() || line[pos] == '#') continue;
        CorpusCase c;
        while (pos < line.size()) {
            skip_ws();
            if (pos >= line.size() || line[pos] == '#') break;
            size_t eq = line.find('=', pos);
            if (eq == std::string::npos)
                throw ParseError("expected key=value in corpus record", lineno,
                                 static_cast<int>(pos + 1));
            std::string key = line.substr(pos, eq - pos);
            pos = eq + 1;
            std::string value;
            if (pos < line.size() && line[pos] == '"') {
                size_t close = line.find('"', pos + 1);
                if (close == std::string::npos)
                    throw ParseError("unterminated quote", lineno, static_cast<int>(pos + 1));
                value = line.substr(pos + 1, close - pos - 1);
                pos = close + 1;
            } else {
                size_t end = pos;
                while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])))
                    ++end;
                value = line.substr(pos, end - pos);
                pos = end;
            }
            if (key == "id") c.id = value;
            else if (key == "kind") c.kind = value;
            else if (key == "expect") c.expected = value;
            else c.fields[key] = value;
        }
        if (c.id.empty() || c.kind.empty())
            throw ParseError("corpus record needs id and kind", lineno, 1);
        out.push_back(std::move(c));
    }
    // unique ids
    std::map<std::string, int> seen;
    for (const auto& c : out)
        if (++seen[c.id] > 1) throw ParseError("duplicate corpus id " + c.id, 0, 0);
    return out;
}

std::string corpus_record(const CorpusCase& c) {
    std::ostringstream os;
    os << "id=" << quote_if_needed(c.id) << " kind=" << quote_if_needed(c.kind);
    for (const auto& [k, v] : c.fields) os << " " << k << "=" << quote_if_needed(v);
    os << " expect=" << c.expected;
    return os.str();
}

bool case_matches(const CorpusCase& c, const std::string& filter) {
    if (filter.empty()) return true;
    if (filter == c.kind || filter == c.id) return true;
    if (!filter.empty() && filter.back() == '*')
        return c.id.rfind(filter.substr(0, filter.size() - 1), 0) == 0;
    return false;
}

namespace {

std::string need_field(const CorpusCase& c, const std::string& key) {
    auto it = c.fields.find(key);
    if (it == c.fields.end())
        throw DomainError("case " + c.id + " is missing field " + key);
    return it->second;
}

std::optional<std::string> opt_field(const CorpusCase& c, const std::string& key) {
    auto it = c.fields.find(key);
    if (it == c.fields.end()) return std::nullopt;
    return it->second;
}

MonomialIdeal parse_monomial_ideal(const CorpusCase& c, const Limits&) {
    Ring ring = build_ring(parse_ring_decl(need_field(c, "ring")));
    std::vector<Polynomial> gens = parse_polynomial_list(need_field(c, "ideal"), ring);
    return MonomialIdeal::from_ideal(Ideal(ring, std::move(gens)));
}

// verdict ("pass"/"fail") plus witness text
std::pair<std::string, std::string> execute_case(const CorpusCase& c, const Limits& lim) {
    if (c.kind == "snc-property") {
        auto prop = snc_property_from_name(need_field(c, "prop"));
        if (!prop) throw DomainError("unknown property " + need_field(c, "prop"));
        std::string ftext = need_field(c, "f");
        auto gtext = opt_field(c, "g");
        std::string model_text = ftext + (gtext ? "*" + *gtext : "");
        auto [model, f] = parse_snc_monomial(model_text);
        SncPropertyInputs in;
        in.f = snc_from_polynomial(model, parse_polynomial(ftext, model.ring));
        if (gtext) in.g = snc_from_polynomial(model, parse_polynomial(*gtext, model.ring));
        in.t = parse_rational(need_field(c, "t"));
        if (auto s = opt_field(c, "s")) in.s_or_t2 = parse_rational(*s);
        if (auto n = opt_field(c, "n")) in.n = std::stoll(*n);
        PropertyReport rep = verify_property(model, *prop, in);
        return {rep.pass ? "pass" : "fail", rep.witness};
    }
    if (c.kind == "monomial-multiplier") {
        auto [model, f] = parse_snc_monomial(need_field(c, "f"));
        Rat t = parse_rational(need_field(c, "t"));
        bool ok = snc_vs_multiplier(model, f, t, lim);
        return {ok ? "pass" : "fail",
                ok ? "" : "tau not inside multiplier ideal for f=" + need_field(c, "f")};
    }
    if (c.kind == "main-theorem") {
        MonomialIdeal I = parse_monomial_ideal(c, lim);
        int64_t m = std::stoll(need_field(c, "m"));
        MainTheoremReport rep = check_main_theorem_squarefree(I, m, lim);
        return {rep.holds ? "pass" : "fail", rep.holds ? "" : rep.detail};
    }
    if (c.kind == "blowup") {
        std::string sub = need_field(c, "sub");
        if (sub == "kcanonical") {
            int d = std::stoi(need_field(c, "d"));
            int64_t got = relative_canonical_maxideal(d);
            bool ok = got == d - 1;
            return {ok ? "pass" : "fail",
                    ok ? "" : "K coefficient " + std::to_string(got) + " != d-1"};
        }
        if (sub == "integral") {
            MonomialIdeal J = parse_monomial_ideal(c, lim);
            Polynomial f = parse_polynomial(need_field(c, "f"), J.ring());
            if (!f.is_monomial()) throw DomainError("f must be a monomial");
            try {
                IntegralityReport rep =
                    integral_extension_chart(J, f.terms().begin()->first, lim);
                return {"pass", "degree " + std::to_string(rep.degree)};
            } catch (const DomainError& e) {
                return {"fail", e.what()};
            }
        }
        if (sub == "rees-linear") {
            // presentation of the maximal ideal in 2 vars is a single linear form
            Ring ring = build_ring(parse_ring_decl(need_field(c, "ring")));
            Ideal I(ring, parse_polynomial_list(need_field(c, "ideal"), ring));
            ReesPresentation rp = rees_presentation(I, lim);
            size_t expected = std::stoul(need_field(c, "presentation-size"));
            bool ok = rp.presentation.gens().size() == expected;
            return {ok ? "pass" : "fail", ok ? "" : rp.presentation.str()};
        }
        throw DomainError("unknown blowup sub-kind " + sub);
    }
    if (c.kind == "asymptotic") {
        MonomialIdeal I = parse_monomial_ideal(c, lim);
        std::string kind = need_field(c, "seq");
        GradedSequence seq = kind == "powers" ? GradedSequence::powers(I)
                            : kind == "sympowers"
                                ? GradedSequence::symbolic_powers_squarefree(I)
                                : throw DomainError("unknown sequence kind " + kind);
        int64_t n = std::stoll(need_field(c, "n"));
        int64_t m = std::stoll(need_field(c, "m"));
        SubadditivityReport rep =
            verify_asymptotic_subadditivity(seq, n, m, AsymptoticOracle::multiplier, lim);
        if (auto want_l = opt_field(c, "lstar")) {
            int64_t l = std::stoll(*want_l);
            if (rep.rhs.stabilizing_multiple != l)
                return {"fail", "stabilized at l*=" +
                                    std::to_string(rep.rhs.stabilizing_multiple) +
                                    ", expected " + *want_l};
        }
        return {rep.pass ? "pass" : "fail", rep.witness};
    }
    throw DomainError("unknown case kind " + c.kind);
}

} // namespace

CaseResult run_case(const CorpusCase& c, const Limits& lim) {
    CaseResult r;
    r.id = c.id;
    r.kind = c.kind;
    auto start = std::chrono::steady_clock::now();
    try {
        auto [verdict, witness] = execute_case(c, lim);
        r.verdict = verdict;
        r.witness = witness;
        if (c.expected == "fail-with-witness")
            r.ok = verdict == "fail" && !witness.empty();
        else
            r.ok = verdict == c.expected;
    } catch (const ResourceLimitError& e) {
        r.verdict = "resource-limit";
        r.witness = e.what();
        r.resource_failure = true;
        r.ok = false;
    } catch (const Error& e) {
        r.verdict = "error";
        r.witness = e.what();
        r.ok = false;
    }
    r.ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

VerificationReport run_corpus(const std::vector<CorpusCase>& cases, const std::string& filter,
                              int parallelism, double per_case_timeout_s, uint64_t seed) {
    std::vector<const CorpusCase*> selected;
    for (const auto& c : cases)
        if (case_matches(c, filter)) selected.push_back(&c);

    VerificationReport rep;
    rep.seed = seed;
    {
        std::ostringstream env;
        env << "symalg " <<
#if defined(__GNUC__)
            "gcc " << __GNUC__ << "." << __GNUC_MINOR__;
#else
            "unknown compiler";
#endif
        rep.environment = env.str();
    }
    rep.results.resize(selected.size());

    int workers = std::max(1, parallelism);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= selected.size()) return;
            Limits lim = per_case_timeout_s > 0 ? Limits::with_timeout(per_case_timeout_s)
                                                : Limits{};
            rep.results[i] = run_case(*selected[i], lim);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const auto& r : rep.results) {
        if (r.ok) ++rep.passed;
        else ++rep.failed;
        if (r.resource_failure) ++rep.resource_failures;
    }
    return rep;
}

std::string VerificationReport::table() const {
    std::ostringstream os;
    size_t idw = 4;
    for (const auto& r : results) idw = std::max(idw, r.id.size());
    for (const auto& r : results) {
        os << (r.ok ? "PASS " : "FAIL ") << r.id;
        os << std::string(idw - r.id.size() + 2, ' ') << "[" << r.kind << "] " << r.verdict;
        if (!r.ok && !r.witness.empty()) os << "  " << r.witness;
        os << "\n";
    }
    os << passed << "/" << (passed + failed) << " cases passed";
    if (resource_failures) os << " (" << resource_failures << " resource failures)";
    os << "\n";
    return os.str();
}

std::string VerificationReport::json() const {
    nlohmann::json j;
    j["environment"] = environment;
    j["seed"] = seed;
    j["aggregate"] = {{"passed", passed},
                      {"failed", failed},
                      {"resource_failures", resource_failures}};
    j["cases"] = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json cj = {{"id", r.id},       {"kind", r.kind},
                             {"ok", r.ok},       {"verdict", r.verdict},
                             {"ms", r.ms}};
        if (!r.witness.empty()) cj["witness"] = r.witness;
        j["cases"].push_back(cj);
    }
    return j.dump(2);
}

namespace {

int64_t rand_range(std::mt19937_64& rng, int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

std::string random_snc_monomial(std::mt19937_64& rng, bool allow_unit = false) {
    static const char* names[] = {"x", "y", "z"};
    int64_t nx = rand_range(rng, 0, 3);
    std::ostringstream os;
    int64_t a0 = rand_range(rng, 0, 6);
    bool wrote = false;
    if (a0 > 0) {
        os << "p";
        if (a0 > 1) os << "^" << a0;
        wrote = true;
    }
    for (int64_t i = 0; i < nx; ++i) {
        int64_t a = rand_range(rng, 0, 6);
        if (a == 0) continue;
        if (wrote) os << "*";
        os << names[i];
        if (a > 1) os << "^" << a;
        wrote = true;
    }
    if (!wrote) {
        if (allow_unit) return "1";
        return "p"; // avoid the unit monomial unless requested
    }
    return os.str();
}

std::string random_rational(std::mt19937_64& rng, int64_t max_num_over_den = 3) {
    int64_t den = rand_range(rng, 1, 60);
    int64_t num = rand_range(rng, 0, max_num_over_den * den);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string random_squarefree_ideal(std::mt19937_64& rng, int nvars, int max_gens) {
    static const char* names[] = {"x", "y", "z", "w"};
    int gens = static_cast<int>(rand_range(rng, 1, max_gens));
    std::ostringstream os;
    bool any = false;
    for (int g = 0; g < gens; ++g) {
        uint32_t mask = static_cast<uint32_t>(rand_range(rng, 1, (1 << nvars) - 1));
        if (any) os << ", ";
        bool first = true;
        for (int v = 0; v < nvars; ++v) {
            if (!(mask & (1u << v))) continue;
            if (!first) os << "*";
            os << names[v];
            first = false;
        }
        any = true;
    }
    return os.str();
}

} // namespace

std::vector<CorpusCase> generate_random_cases(uint64_t seed,
                                              const std::map<std::string, int>& counts) {
    std::mt19937_64 rng(seed);
    std::vector<CorpusCase> out;
    auto count_of = [&](const std::string& k) {
        auto it = counts.find(k);
        return it == counts.end() ? 0 : it->second;
    };

    static const char* props[] = {"A-containment", "A-exponent-monotone", "B-unambiguity",
                                  "C-not-too-small", "E-subadditivity"};
    for (int i = 0; i < count_of("snc-property"); ++i) {
        CorpusCase c;
        c.kind = "snc-property";
        std::string prop = props[rand_range(rng, 0, 4)];
        c.id = "rand-snc-" + std::to_string(i);
        c.fields["prop"] = prop;
        c.fields["f"] = random_snc_monomial(rng);
        c.fields["t"] = random_rational(rng);
        if (prop == "A-containment") {
            std::string extra = random_snc_monomial(rng, true);
            c.fields["g"] = c.fields["f"] + (extra == "1" ? "" : "*" + extra);
        } else if (prop == "A-exponent-monotone" || prop == "E-subadditivity") {
            c.fields["s"] = random_rational(rng);
        } else if (prop == "B-unambiguity") {
            c.fields["n"] = std::to_string(rand_range(rng, 1, 4));
        }
        out.push_back(std::move(c));
    }
    for (int i = 0; i < count_of("monomial-multiplier"); ++i) {
        CorpusCase c;
        c.kind = "monomial-multiplier";
        c.id = "rand-mult-" + std::to_string(i);
        c.fields["f"] = random_snc_monomial(rng);
        c.fields["t"] = random_rational(rng, 2);
        out.push_back(std::move(c));
    }
    for (int i = 0; i < count_of("main-theorem"); ++i) {
        CorpusCase c;
        c.kind = "main-theorem";
        c.id = "rand-mt-" + std::to_string(i);
        int nv = static_cast<int>(rand_range(rng, 2, 4));
        c.fields["ring"] = nv == 2 ? "Q[x,y] grevlex"
                          : nv == 3 ? "Q[x,y,z] grevlex"
                                    : "Q[x,y,z,w] grevlex";
        c.fields["ideal"] = random_squarefree_ideal(rng, nv, 4);
        c.fields["m"] = std::to_string(rand_range(rng, 1, 3));
        out.push_back(std::move(c));
    }
    for (int i = 0; i < count_of("asymptotic"); ++i) {
        CorpusCase c;
        c.kind = "asymptotic";
        c.id = "rand-asym-" + std::to_string(i);
        int nv = static_cast<int>(rand_range(rng, 2, 3));
        c.fields["ring"] = nv == 2 ? "Q[x,y] grevlex" : "Q[x,y,z] grevlex";
        bool sym = rand_range(rng, 0, 1) == 1;
        c.fields["seq"] = sym ? "sympowers" : "powers";
        c.fields["ideal"] = random_squarefree_ideal(rng, nv, 3);
        c.fields["n"] = std::to_string(rand_range(rng, 1, 2));
        c.fields["m"] = std::to_string(rand_range(rng, 1, 3));
        out.push_back(std::move(c));
    }
    return out;
}

const std::string& builtin_corpus_text() {
    static const std::string text = R"corpus(
# ---- section 1 properties (A)-(E) in the SNC monomial model ----
id=snc-A-cont-1 kind=snc-property prop=A-containment f=p*x^2 g=p^2*x^3 t=1/2 expect=pass
id=snc-A-cont-2 kind=snc-property prop=A-containment f=x^3*y g=x^3*y^4*z t=2/3 expect=pass
id=snc-A-mono-1 kind=snc-property prop=A-exponent-monotone f=p^2*x^3 t=1/2 s=5/6 expect=pass
id=snc-A-mono-2 kind=snc-property prop=A-exponent-monotone f=x^5*y^2 t=1/4 s=7/3 expect=pass
id=snc-B-1 kind=snc-property prop=B-unambiguity f=p*x^2 n=3 t=1/4 expect=pass
id=snc-B-2 kind=snc-property prop=B-unambiguity f=p^3*y^2 n=5 t=2/7 expect=pass
id=snc-C-1 kind=snc-property prop=C-not-too-small f=p^3 t=1 expect=pass
id=snc-C-2 kind=snc-property prop=C-not-too-small f=p^2*x^4*y t=1 expect=pass
id=snc-E-1 kind=snc-property prop=E-subadditivity f=x^5 t=1/2 s=1/2 expect=pass
id=snc-E-2 kind=snc-property prop=E-subadditivity f=p^2*x^7 t=3/5 s=4/7 expect=pass

# ---- section 6 comparison: tau inside the monomial multiplier ideal ----
id=mult-1 kind=monomial-multiplier f=p^2*x^3*y^5 t=1/2 expect=pass
id=mult-2 kind=monomial-multiplier f=x^2 t=5/6 expect=pass
id=mult-3 kind=monomial-multiplier f=p^4 t=2/3 expect=pass
id=mult-4 kind=monomial-multiplier f=x^3*y^3*z^3 t=1/3 expect=pass
id=mult-5 kind=monomial-multiplier f=p*x*y*z t=7/4 expect=pass

# ---- main theorem on squarefree monomial ideals ----
id=mt-triangle-1 kind=main-theorem ring="Q[x,y,z] grevlex" ideal="x*y, x*z, y*z" m=1 expect=pass
id=mt-triangle-2 kind=main-theorem ring="Q[x,y,z] grevlex" ideal="x*y, x*z, y*z" m=2 expect=pass
id=mt-triangle-3 kind=main-theorem ring="Q[x,y,z] grevlex" ideal="x*y, x*z, y*z" m=3 expect=pass
id=mt-2x2-2 kind=main-theorem ring="Q[x,y,z,w] grevlex" ideal="x*y, z*w" m=2 expect=pass
id=mt-2x2-3 kind=main-theorem ring="Q[x,y,z,w] grevlex" ideal="x*y, z*w" m=3 expect=pass
id=mt-principal kind=main-theorem ring="Q[x,y] grevlex" ideal="x" m=3 expect=pass
id=mt-mixed-height kind=main-theorem ring="Q[x,y,z] grevlex" ideal="x*z, y*z" m=2 expect=pass

# ---- appendix A: relative canonical of the maximal-ideal blowup ----
id=blowup-k-2 kind=blowup sub=kcanonical d=2 expect=pass
id=blowup-k-3 kind=blowup sub=kcanonical d=3 expect=pass
id=blowup-k-4 kind=blowup sub=kcanonical d=4 expect=pass
id=blowup-k-5 kind=blowup sub=kcanonical d=5 expect=pass
id=blowup-k-6 kind=blowup sub=kcanonical d=6 expect=pass
id=blowup-k-7 kind=blowup sub=kcanonical d=7 expect=pass
id=blowup-k-8 kind=blowup sub=kcanonical d=8 expect=pass
id=blowup-rees-xy kind=blowup sub=rees-linear ring="Q[x,y] grevlex" ideal="x, y" presentation-size=1 expect=pass
id=blowup-int-pos kind=blowup sub=integral ring="Q[x,y] grevlex" ideal="x^2, y^2" f=x*y expect=pass
id=blowup-int-neg kind=blowup sub=integral ring="Q[x,y] grevlex" ideal="x^2, y^2" f=x expect=fail-with-witness

# ---- section 7 asymptotic construction ----
id=asym-powers-xy kind=asymptotic ring="Q[x,y] grevlex" seq=powers ideal="x, y" n=1 m=3 lstar=1 expect=pass
id=asym-powers-x2y3 kind=asymptotic ring="Q[x,y] grevlex" seq=powers ideal="x^2, y^3" n=1 m=2 lstar=1 expect=pass
id=asym-sym-triangle-1 kind=asymptotic ring="Q[x,y,z] grevlex" seq=sympowers ideal="x*y, x*z, y*z" n=1 m=2 expect=pass
id=asym-sym-triangle-2 kind=asymptotic ring="Q[x,y,z] grevlex" seq=sympowers ideal="x*y, x*z, y*z" n=2 m=2 expect=pass
id=asym-sym-edge kind=asymptotic ring="Q[x,y,z,w] grevlex" seq=sympowers ideal="x*y, z*w" n=1 m=2 expect=pass
)corpus";
    return text;
}

std::vector<CorpusCase> builtin_corpus() { return parse_corpus_text(builtin_corpus_text()); }

} // namespace symalg

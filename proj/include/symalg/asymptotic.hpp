#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "symalg/monomial_ideal.hpp"
#include "symalg/symbolic_power.hpp"

namespace symalg {

struct TaggedGenerator {
    Polynomial value;
    bool fresh = true;
    // product provenance: (level s, index i) x (level t, index j)
    int64_t s = 0, t = 0;
    size_t si = 0, tj = 0;
    std::string provenance() const;
};

// Graded sequence a_n with a_n a_m inside a_{n+m}; levels evaluated lazily and
// cached. Generating sets follow the inductive product-closed construction:
// level m holds every product of chosen generators from s+t = m (duplicates
// kept, tagged) plus the fresh minimal generators of a_m.
class GradedSequence {
public:
    using Evaluator = std::function<Ideal(int64_t)>;

    GradedSequence(Ring ring, Evaluator eval, std::string name);

    static GradedSequence powers(const Ideal& I);
    static GradedSequence powers(const MonomialIdeal& I);
    static GradedSequence symbolic_powers_squarefree(const MonomialIdeal& I);

    const Ring& ring() const { return ring_; }
    const std::string& name() const { return name_; }

    Ideal level(int64_t n, const Limits& lim = {}) const;
    MonomialIdeal level_monomial(int64_t n, const Limits& lim = {}) const;

    // checks the graded axiom a_s a_t inside a_{s+t} for all s+t <= up_to
    void check_axiom(int64_t up_to, const Limits& lim = {}) const;

    // builds tagged generating sets for levels 1..up_to (up_to <= 12)
    const std::vector<TaggedGenerator>& generating_set(int64_t m, const Limits& lim = {});

private:
    Ring ring_;
    Evaluator eval_;
    std::string name_;
    struct State {
        std::mutex mu;
        std::map<int64_t, Ideal> levels;
        std::map<int64_t, std::vector<TaggedGenerator>> gen_sets;
    };
    std::shared_ptr<State> state_;

    Ideal level_locked(int64_t n, const Limits& lim) const;
};

enum class AsymptoticOracle { multiplier, snc_test };

struct AsymptoticIdeal {
    int64_t base_level = 0;
    MonomialIdeal stabilized;
    int64_t stabilizing_multiple = 0; // l*
};

// oracle(a_{ln}, 1/l) along the doubling schedule l = 1,2,4,... until two
// successive divisible levels agree; structured failure past l = 64
AsymptoticIdeal asymptotic_ideal(const GradedSequence& seq, int64_t n, AsymptoticOracle oracle,
                                 const Limits& lim = {});

struct SubadditivityReport {
    bool pass = false;
    AsymptoticIdeal lhs; // stabilized at level m*n
    AsymptoticIdeal rhs; // stabilized at level n
    std::string witness;
};

// stabilized(m n) inside stabilized(n)^m
SubadditivityReport verify_asymptotic_subadditivity(const GradedSequence& seq, int64_t n,
                                                    int64_t m, AsymptoticOracle oracle,
                                                    const Limits& lim = {});

struct PipelineLink {
    std::string name;
    bool oracle_level = true; // false: exact endpoint containment
    bool pass = false;
    std::string detail;
};

struct PipelineReport {
    int64_t m = 0;
    int64_t height_bound = 0;
    std::vector<PipelineLink> links;
    bool all_pass = false;
};

// The full containment chain for a squarefree monomial ideal, with the
// monomial multiplier ideal standing in for the test ideal on the oracle
// links and a direct Groebner/divisibility check at the endpoint.
PipelineReport main_theorem_pipeline(const MonomialIdeal& I, int64_t m, const Limits& lim = {});

} // namespace symalg

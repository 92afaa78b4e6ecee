#include "symalg/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace symalg {

namespace {

std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Exponents& a, const Exponents& b) {
                  int64_t da = total_degree(a), db = total_degree(b);
                  if (da != db) return da < db;
                  return a < b;
              });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponents> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& kept : out)
            if (exp_divides(kept, g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    return out;
}

} // namespace

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Exponents> gens) : ring_(std::move(ring)) {
    for (const auto& g : gens) {
        if (g.size() != ring_->nvars()) throw DomainError("exponent vector length mismatch");
        for (int64_t x : g)
            if (x < 0) throw DomainError("negative exponent");
    }
    gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::from_ideal(const Ideal& I) {
    std::vector<Exponents> gens;
    for (const auto& g : I.gens()) {
        if (!g.is_monomial()) throw DomainError("ideal is not monomial");
        gens.push_back(g.terms().begin()->first);
    }
    return MonomialIdeal(I.ring(), std::move(gens));
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && total_degree(gens_[0]) == 0;
}

bool MonomialIdeal::is_squarefree() const {
    for (const auto& g : gens_)
        if (!exp_is_squarefree(g)) return false;
    return true;
}

bool MonomialIdeal::contains(const Exponents& e) const {
    for (const auto& g : gens_)
        if (exp_divides(g, e)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    require_same_ring(ring_, other.ring_);
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool MonomialIdeal::equals(const MonomialIdeal& other) const {
    require_same_ring(ring_, other.ring_);
    return gens_ == other.gens_; // minimal generating sets are canonical
}

Ideal MonomialIdeal::to_ideal() const {
    std::vector<Polynomial> gens;
    for (const auto& e : gens_) gens.push_back(Polynomial::monomial(ring_, e));
    Ideal I(ring_, std::move(gens));
    if (is_squarefree() && !gens_.empty() && !is_unit()) {
        // height certified by cover enumeration when squarefree
        I.declared_height = height_squarefree(*this);
        bool variable_generated = true;
        for (const auto& e : gens_) variable_generated = variable_generated && total_degree(e) == 1;
        if (variable_generated) I.primality = Primality::certified_monomial_prime;
    }
    return I;
}

std::string MonomialIdeal::str() const {
    std::ostringstream os;
    os << "(";
    if (gens_.empty()) os << "0";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << Polynomial::monomial(ring_, gens_[i]).str();
    }
    os << ")";
    return os.str();
}

MonomialIdeal monomial_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Exponents> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal monomial_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Exponents> gens;
    for (const auto& x : a.gens())
        for (const auto& y : b.gens()) gens.push_back(exp_mul(x, y));
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal monomial_power(const MonomialIdeal& a, int64_t n) {
    if (n < 0) throw DomainError("negative power");
    if (n == 0) return MonomialIdeal::unit(a.ring());
    MonomialIdeal r = a;
    for (int64_t i = 1; i < n; ++i) r = monomial_product(r, a);
    return r;
}

MonomialIdeal monomial_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Exponents> gens;
    for (const auto& x : a.gens())
        for (const auto& y : b.gens()) gens.push_back(exp_lcm(x, y));
    return MonomialIdeal(a.ring(), std::move(gens));
}

bool NewtonPolyhedron::contains(const std::vector<Rat>& point) const {
    for (const auto& h : halfspaces) {
        Rat dot(0);
        for (size_t i = 0; i < point.size(); ++i) dot += h.normal[i] * point[i];
        if (dot < h.offset) return false;
    }
    return true;
}

bool NewtonPolyhedron::contains(const Exponents& point) const {
    std::vector<Rat> p;
    p.reserve(point.size());
    for (int64_t x : point) p.emplace_back(static_cast<long>(x));
    return contains(p);
}

bool NewtonPolyhedron::interior_of_scaled(const std::vector<Rat>& point, const Rat& t) const {
    for (const auto& h : halfspaces) {
        Rat dot(0);
        for (size_t i = 0; i < point.size(); ++i) dot += h.normal[i] * point[i];
        if (h.coordinate) {
            if (dot < 0) return false;
        } else {
            if (dot <= t * h.offset) return false;
        }
    }
    return true;
}

namespace {

// nullspace of a (rows x d) rational matrix; returns basis vectors
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> m, size_t d) {
    size_t rows = m.size();
    std::vector<int> pivot_col(rows, -1);
    size_t r = 0;
    for (size_t c = 0; c < d && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t k = c; k < d; ++k) m[r][k] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t k = c; k < d; ++k) m[i][k] -= f * m[r][k];
        }
        pivot_col[r] = static_cast<int>(c);
        ++r;
    }
    std::vector<bool> is_pivot(d, false);
    for (size_t i = 0; i < r; ++i) is_pivot[static_cast<size_t>(pivot_col[i])] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t free = 0; free < d; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(d, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < r; ++i) {
            size_t pc = static_cast<size_t>(pivot_col[i]);
            v[pc] = -m[i][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> normalized_integer_normal(const std::vector<Rat>& v) {
    // scale to coprime integers
    Int lcm_den(1);
    for (const auto& x : v) lcm_den = lcm(lcm_den, Int(x.get_den()));
    std::vector<Int> ints;
    Int g(0);
    for (const auto& x : v) {
        Int n = Int(x.get_num()) * (lcm_den / Int(x.get_den()));
        g = gcd(g, n);
        ints.push_back(n);
    }
    if (g == 0) g = 1;
    std::vector<Rat> out;
    for (auto& n : ints) out.emplace_back(n / g);
    return out;
}

} // namespace

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& M, const Limits& lim) {
    if (M.is_zero()) throw DomainError("Newton polyhedron of the zero ideal");
    size_t d = M.nvars();
    if (d > 8) throw ResourceLimitError("Newton polyhedron limited to 8 variables");
    const auto& pts = M.gens();
    size_t m = pts.size();

    NewtonPolyhedron np;
    np.generators = pts;

    std::set<std::pair<std::vector<Rat>, Rat>> seen;
    auto consider = [&](std::vector<Rat> c) {
        // orient so all generators lie on the >= side; require c >= 0
        bool has_pos = false, has_neg = false;
        for (const auto& x : c) {
            if (x > 0) has_pos = true;
            if (x < 0) has_neg = true;
        }
        if (has_neg && has_pos) return;
        if (has_neg) {
            for (auto& x : c) x = -x;
        }
        if (!has_pos && !has_neg) return;
        Rat beta;
        bool first = true;
        for (const auto& p : pts) {
            Rat dot(0);
            for (size_t i = 0; i < d; ++i) dot += c[i] * Rat(static_cast<long>(p[i]));
            if (first || dot < beta) beta = dot;
            first = false;
        }
        auto key = std::make_pair(c, beta);
        if (seen.insert(key).second)
            np.halfspaces.push_back({std::move(c), beta, false});
    };

    // every facet is spanned by some generators plus coordinate directions
    std::vector<size_t> pt_sel;
    std::vector<size_t> dir_sel;
    int64_t budget = 0;
    auto enumerate = [&](auto&& self, size_t k) -> void {
        if (pt_sel.size() + dir_sel.size() == d) {
            if (pt_sel.empty()) return;
            if (++budget > lim.max_enumeration)
                throw ResourceLimitError("Newton polyhedron facet budget exceeded");
            std::vector<std::vector<Rat>> rows;
            const Exponents& p0 = pts[pt_sel[0]];
            for (size_t i = 1; i < pt_sel.size(); ++i) {
                std::vector<Rat> row(d);
                for (size_t j = 0; j < d; ++j)
                    row[j] = Rat(static_cast<long>(pts[pt_sel[i]][j] - p0[j]));
                rows.push_back(std::move(row));
            }
            for (size_t dir : dir_sel) {
                std::vector<Rat> row(d, Rat(0));
                row[dir] = 1;
                rows.push_back(std::move(row));
            }
            auto basis = nullspace(std::move(rows), d);
            if (basis.size() == 1) consider(normalized_integer_normal(basis[0]));
            return;
        }
        if (k >= m + d) return;
        // prune: not enough elements left to fill the hyperplane
        if (pt_sel.size() + dir_sel.size() + (m + d - k) < d) return;
        // skip element k
        self(self, k + 1);
        // take element k (generator for k < m, direction e_{k-m} otherwise)
        if (k < m) {
            pt_sel.push_back(k);
            self(self, k + 1);
            pt_sel.pop_back();
        } else {
            dir_sel.push_back(k - m);
            self(self, k + 1);
            dir_sel.pop_back();
        }
    };
    enumerate(enumerate, 0);

    for (size_t j = 0; j < d; ++j) {
        std::vector<Rat> c(d, Rat(0));
        c[j] = 1;
        auto key = std::make_pair(c, Rat(0));
        bool facet_like = seen.count(key) > 0;
        if (!facet_like) np.halfspaces.push_back({std::move(c), Rat(0), true});
    }

    // keep only supporting halfspaces tight at a generator, plus coordinates
    std::vector<NewtonPolyhedron::Halfspace> kept;
    for (auto& h : np.halfspaces) {
        if (h.coordinate) {
            kept.push_back(h);
            continue;
        }
        bool tight = false;
        for (const auto& p : pts) {
            Rat dot(0);
            for (size_t i = 0; i < d; ++i) dot += h.normal[i] * Rat(static_cast<long>(p[i]));
            if (dot == h.offset) {
                tight = true;
                break;
            }
        }
        if (tight) kept.push_back(h);
    }
    np.halfspaces = std::move(kept);
    return np;
}

MonomialIdeal integral_closure(const MonomialIdeal& M, const Limits& lim) {
    if (M.is_zero()) throw DomainError("integral closure of the zero ideal");
    NewtonPolyhedron np = newton_polyhedron(M, lim);
    size_t d = M.nvars();
    Exponents box(d, 0);
    for (const auto& g : M.gens())
        for (size_t i = 0; i < d; ++i) box[i] = std::max(box[i], g[i]);

    int64_t cells = 1;
    for (size_t i = 0; i < d; ++i) {
        cells *= box[i] + 1;
        if (cells > lim.max_enumeration)
            throw ResourceLimitError("integral closure lattice budget exceeded");
    }

    std::vector<Exponents> found;
    Exponents v(d, 0);
    auto walk = [&](auto&& self, size_t i) -> void {
        if (i == d) {
            if (!np.contains(v)) return;
            // local minimality: dropping any coordinate exits the polyhedron
            for (size_t j = 0; j < d; ++j) {
                if (v[j] == 0) continue;
                Exponents w = v;
                w[j] -= 1;
                if (np.contains(w)) return;
            }
            found.push_back(v);
            return;
        }
        for (int64_t x = 0; x <= box[i]; ++x) {
            v[i] = x;
            self(self, i + 1);
        }
        v[i] = 0;
    };
    walk(walk, 0);
    return MonomialIdeal(M.ring(), std::move(found));
}

namespace {

void enumerate_min_covers(const std::vector<uint32_t>& edges, size_t nv, uint32_t cover,
                          size_t edge_idx, std::set<uint32_t>& covers) {
    if (edge_idx == edges.size()) {
        covers.insert(cover);
        return;
    }
    if (edges[edge_idx] & cover) {
        enumerate_min_covers(edges, nv, cover, edge_idx + 1, covers);
        return;
    }
    for (size_t v = 0; v < nv; ++v) {
        if (!(edges[edge_idx] & (1u << v))) continue;
        enumerate_min_covers(edges, nv, cover | (1u << v), edge_idx + 1, covers);
    }
}

} // namespace

std::vector<std::vector<int>> minimal_primes_squarefree(const MonomialIdeal& M) {
    if (!M.is_squarefree()) throw DomainError("minimal primes need a squarefree monomial ideal");
    if (M.is_zero()) return {};
    if (M.is_unit()) throw DomainError("unit ideal has no minimal primes");
    size_t nv = M.nvars();
    std::vector<uint32_t> edges;
    for (const auto& g : M.gens()) {
        uint32_t e = 0;
        for (size_t i = 0; i < nv; ++i)
            if (g[i] > 0) e |= (1u << i);
        edges.push_back(e);
    }
    std::set<uint32_t> covers;
    enumerate_min_covers(edges, nv, 0, 0, covers);
    // filter to inclusion-minimal
    std::vector<uint32_t> minimal;
    for (uint32_t c : covers) {
        bool is_min = true;
        for (uint32_t o : covers)
            if (o != c && (o & c) == o) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(c);
    }
    std::vector<std::vector<int>> out;
    for (uint32_t c : minimal) {
        std::vector<int> prime;
        for (size_t i = 0; i < nv; ++i)
            if (c & (1u << i)) prime.push_back(static_cast<int>(i));
        out.push_back(std::move(prime));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

int64_t height_squarefree(const MonomialIdeal& M) {
    auto primes = minimal_primes_squarefree(M);
    if (primes.empty()) throw DomainError("height of the zero ideal");
    size_t h = primes[0].size();
    for (const auto& p : primes) h = std::min(h, p.size());
    return static_cast<int64_t>(h);
}

int64_t big_height_squarefree(const MonomialIdeal& M) {
    auto primes = minimal_primes_squarefree(M);
    if (primes.empty()) throw DomainError("height of the zero ideal");
    size_t h = 0;
    for (const auto& p : primes) h = std::max(h, p.size());
    return static_cast<int64_t>(h);
}

MonomialIdeal multiplier_ideal_monomial(const MonomialIdeal& M, const Rat& t, const Limits& lim) {
    if (M.is_zero()) throw DomainError("multiplier ideal of the zero ideal");
    if (t < 0) throw DomainError("negative exponent");
    if (t == 0 || M.is_unit()) return MonomialIdeal::unit(M.ring());
    if (Int(t.get_den()) > Int(1000000))
        throw DomainError("exponent denominator too large");

    NewtonPolyhedron np = newton_polyhedron(M, lim);
    size_t d = M.nvars();
    // minimal generators v satisfy v_j <= ceil(t * max_j)
    Exponents box(d, 0);
    for (const auto& g : M.gens())
        for (size_t i = 0; i < d; ++i) box[i] = std::max(box[i], g[i]);
    int64_t cells = 1;
    for (size_t i = 0; i < d; ++i) {
        box[i] = rat_ceil(t * Rat(static_cast<long>(box[i]))).get_si();
        cells *= box[i] + 1;
        if (cells > lim.max_enumeration)
            throw ResourceLimitError("multiplier ideal lattice budget exceeded");
    }

    auto in_interior = [&](const Exponents& v) {
        std::vector<Rat> shifted(d);
        for (size_t i = 0; i < d; ++i) shifted[i] = Rat(static_cast<long>(v[i] + 1));
        return np.interior_of_scaled(shifted, t);
    };

    std::vector<Exponents> found;
    Exponents v(d, 0);
    auto walk = [&](auto&& self, size_t i) -> void {
        if (i == d) {
            if (!in_interior(v)) return;
            for (size_t j = 0; j < d; ++j) {
                if (v[j] == 0) continue;
                Exponents w = v;
                w[j] -= 1;
                if (in_interior(w)) return;
            }
            found.push_back(v);
            return;
        }
        for (int64_t x = 0; x <= box[i]; ++x) {
            v[i] = x;
            self(self, i + 1);
        }
        v[i] = 0;
    };
    walk(walk, 0);
    return MonomialIdeal(M.ring(), std::move(found));
}

} // namespace symalg

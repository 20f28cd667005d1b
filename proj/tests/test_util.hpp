#pragma once

/// Shared helpers and independent oracles for the test suites.
///
/// Every oracle here recomputes an expected answer by a route different
/// from the library under test: dense linear algebra for ideal
/// membership, combinatorial divisibility rules for monomial radicals,
/// hand-expanded determinants, and a reversed evaluation order for the
/// Matsusaka constant. Tests compare library output against these.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "specdom/domain_file.hpp"
#include "specdom/polynomial.hpp"
#include "specdom/rational.hpp"

namespace testutil {

using specdom::Integer;
using specdom::Monomial;
using specdom::Polynomial;
using specdom::Rational;

// ---------------------------------------------------------------------------
// Random generation
// ---------------------------------------------------------------------------

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Uniform integer in [lo, hi], both inclusive.
inline int rand_int(std::mt19937_64& eng, int lo, int hi) {
    return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random monomial with total degree in [0, max_degree].
inline Monomial random_monomial(std::mt19937_64& eng, int nvars, int max_degree) {
    Monomial m(nvars);
    int budget = rand_int(eng, 0, max_degree);
    for (int step = 0; step < budget; ++step) m.e[rand_int(eng, 0, nvars - 1)] += 1;
    return m;
}

/// Random polynomial with up to max_terms terms, coefficients in
/// [-5, 5] \ {0}. May collapse to fewer terms (or zero) by merging.
inline Polynomial random_polynomial(std::mt19937_64& eng, int nvars, int max_degree,
                                    int max_terms) {
    std::vector<Polynomial::Term> terms;
    int count = rand_int(eng, 1, max_terms);
    for (int i = 0; i < count; ++i) {
        int c = rand_int(eng, -5, 5);
        if (c == 0) c = 1;
        terms.emplace_back(random_monomial(eng, nvars, max_degree), Rational(c));
    }
    return Polynomial::from_terms(nvars, std::move(terms));
}

/// Random polynomial guaranteed nonzero.
inline Polynomial random_nonzero_polynomial(std::mt19937_64& eng, int nvars, int max_degree,
                                            int max_terms) {
    for (;;) {
        Polynomial p = random_polynomial(eng, nvars, max_degree, max_terms);
        if (!p.is_zero()) return p;
    }
}

/// Random nonzero polynomial with no constant term (every monomial has
/// positive degree), the shape of the boundary data this toolkit works
/// on. Keeps generated ideals proper, which keeps low-truncation
/// linear-algebra certificates within reach.
inline Polynomial random_vanishing_polynomial(std::mt19937_64& eng, int nvars, int max_degree,
                                              int max_terms) {
    for (;;) {
        std::vector<Polynomial::Term> terms;
        int count = rand_int(eng, 1, max_terms);
        for (int i = 0; i < count; ++i) {
            Monomial m = random_monomial(eng, nvars, max_degree);
            if (m.is_one()) m.e[static_cast<std::size_t>(rand_int(eng, 0, nvars - 1))] = 1;
            int c = rand_int(eng, -5, 5);
            if (c == 0) c = 1;
            terms.emplace_back(std::move(m), Rational(c));
        }
        Polynomial p = Polynomial::from_terms(nvars, std::move(terms));
        if (!p.is_zero()) return p;
    }
}

// ---------------------------------------------------------------------------
// Terse fixture construction
// ---------------------------------------------------------------------------

/// Parse a polynomial fixture over the given variable names. Convenience
/// for building inputs; never used as an expected value in parser tests.
inline Polynomial P(const std::string& text,
                    const std::vector<std::string>& vars = {"z1", "z2"}) {
    return specdom::parse_polynomial(text, vars);
}

// ---------------------------------------------------------------------------
// Exact linear-algebra membership oracle (Macaulay matrix)
// ---------------------------------------------------------------------------

/// All monomials in nvars variables of total degree <= cap, by a plain
/// recursive odometer (independent of any library enumerator).
inline void collect_monomials_up_to(int nvars, int cap, int var, Monomial& scratch,
                                    std::vector<Monomial>& out) {
    if (var == nvars) {
        out.push_back(scratch);
        return;
    }
    int used = 0;
    for (int i = 0; i < var; ++i) used += scratch.e[i];
    for (int d = 0; d + used <= cap; ++d) {
        scratch.e[var] = d;
        collect_monomials_up_to(nvars, cap, var + 1, scratch, out);
    }
    scratch.e[var] = 0;
}

inline std::vector<Monomial> monomials_up_to(int nvars, int cap) {
    std::vector<Monomial> out;
    Monomial scratch(nvars);
    collect_monomials_up_to(nvars, cap, 0, scratch, out);
    return out;
}

/// Sparse row over the monomial basis: exponent vector -> coefficient.
using SparseVec = std::map<std::vector<int>, Rational>;

inline SparseVec to_sparse_vec(const Polynomial& p) {
    SparseVec v;
    for (const auto& [m, c] : p.terms()) v[m.e] = c;
    return v;
}

/// Incremental exact Gaussian elimination. Pivot rows are kept keyed by
/// their leading column (smallest exponent vector in map order); a vector
/// lies in the span of the added rows iff it reduces to zero.
struct LinearSpan {
    std::map<std::vector<int>, SparseVec> pivots;

    // Reduce v by the pivot rows; the leading column strictly increases
    // each step, so this terminates.
    void reduce(SparseVec& v) const {
        while (!v.empty()) {
            auto lead = v.begin();
            auto it = pivots.find(lead->first);
            if (it == pivots.end()) return;
            Rational factor = lead->second;
            for (const auto& [col, coeff] : it->second) {
                auto entry = v.find(col);
                Rational next = (entry == v.end() ? Rational(0) : entry->second) - factor * coeff;
                if (next == 0) {
                    if (entry != v.end()) v.erase(entry);
                } else {
                    v[col] = next;
                }
            }
        }
    }

    void add(SparseVec v) {
        reduce(v);
        if (v.empty()) return;
        Rational lead = v.begin()->second;
        for (auto& [col, coeff] : v) coeff /= lead;
        pivots.emplace(v.begin()->first, std::move(v));
    }

    bool contains(SparseVec v) const {
        reduce(v);
        return v.empty();
    }
};

/// Membership oracle: p lies in the span of { m * g : g generator,
/// deg(m) + deg(g) <= cap }. For small random ideals and low-degree p
/// this agrees with exact ideal membership.
inline bool macaulay_member(const Polynomial& p, const std::vector<Polynomial>& gens,
                            int cap) {
    if (p.is_zero()) return true;
    LinearSpan span;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int dg = *g.degree();
        if (dg > cap) continue;
        for (const auto& m : monomials_up_to(g.nvars(), cap - dg))
            span.add(to_sparse_vec(g.times_term(m, Rational(1))));
    }
    return span.contains(to_sparse_vec(p));
}

// ---------------------------------------------------------------------------
// Combinatorial monomial-ideal oracles
// ---------------------------------------------------------------------------

/// Membership in the monomial ideal generated by gens: every term of p
/// must be divisible by some generator.
inline bool monomial_ideal_member_oracle(const Polynomial& p, const std::vector<Monomial>& gens) {
    for (const auto& [m, c] : p.terms()) {
        bool covered = false;
        for (const auto& g : gens)
            if (specdom::divides(g, m)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

/// Exponents clamped to one.
inline Monomial squarefree_oracle(const Monomial& m) {
    Monomial r = m;
    for (auto& e : r.e)
        if (e > 1) e = 1;
    return r;
}

/// Radical membership for a monomial ideal: the radical is generated by
/// the squarefree parts of the generators, and membership in a monomial
/// ideal is term-by-term divisibility.
inline bool monomial_radical_member_oracle(const Polynomial& p,
                                           const std::vector<Monomial>& gens) {
    std::vector<Monomial> roots;
    roots.reserve(gens.size());
    for (const auto& g : gens) roots.push_back(squarefree_oracle(g));
    return monomial_ideal_member_oracle(p, roots);
}

// ---------------------------------------------------------------------------
// Hand-expanded determinant oracle
// ---------------------------------------------------------------------------

/// 2x2 Jacobian determinant written out longhand, independent of the
/// cofactor expansion in the library.
inline Polynomial det2_by_hand(const Polynomial& g1, const Polynomial& g2) {
    using specdom::partial_derivative;
    return partial_derivative(g1, 0) * partial_derivative(g2, 1) -
           partial_derivative(g1, 1) * partial_derivative(g2, 0);
}

// ---------------------------------------------------------------------------
// Matsusaka constant, folded from the right
// ---------------------------------------------------------------------------

inline Integer ipow_oracle(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer two_pow_oracle(unsigned long e) { return ipow_oracle(Integer(2), e); }

/// C_n assembled factor-by-factor from k = n down to k = 1 and only then
/// multiplied by the leading power of two; a different evaluation order
/// from the library's left fold.
inline Integer matsusaka_cn_rightfold(int n) {
    Integer acc = 1;
    for (int k = n; k >= 1; --k) {
        unsigned long inner = static_cast<unsigned long>((n - k - 1) * (n - k) / 2);
        Integer base = Integer(k) * two_pow_oracle(inner);
        unsigned long outer = 1;
        for (int i = 0; i < k - 2; ++i) outer *= 2;
        acc = ipow_oracle(base, outer) * acc;
    }
    unsigned long half = 1;
    for (int i = 0; i < n - 1; ++i) half *= 2;  // 2^(n-1)
    return two_pow_oracle(static_cast<unsigned long>(n - 1) + half) * acc;
}

// ---------------------------------------------------------------------------
// Process and filesystem helpers
// ---------------------------------------------------------------------------

struct CliResult {
    int exit_code = -1;
    std::string out;
};

/// Run a shell command, capturing stdout. Set merge_stderr when the
/// message stream matters; leave it off when comparing bytes.
inline CliResult run_cli(const std::string& command, bool merge_stderr = false) {
    std::string full = command + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed: " + full);
    CliResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempDir {
    std::string path;

    TempDir() {
        char templ[] = "/tmp/specdom_test_XXXXXX";
        if (!mkdtemp(templ)) throw std::runtime_error("mkdtemp failed");
        path = templ;
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return path + "/" + name; }
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testutil

#include "specdom/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <optional>

#include "specdom/finite_type.hpp"

namespace specdom {

namespace {

Integer int_pow(const Integer& base, unsigned long exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Rational rational_pow(const Rational& base, unsigned long exponent) {
    return Rational(int_pow(Integer(base.get_num()), exponent),
                    int_pow(Integer(base.get_den()), exponent));
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

unsigned long two_to(int e) { return 1ul << e; }

}  // namespace

// ---------------------------------------------------------------------------
// Matsusaka-type bound
// ---------------------------------------------------------------------------

MatsusakaBound matsusaka_bound(const MatsusakaInput& inp) {
    if (inp.n < 1) throw std::invalid_argument("matsusaka_bound: n must be >= 1");
    if (inp.Ln < 1) throw std::invalid_argument("matsusaka_bound: L^n must be >= 1");
    const int n = inp.n;

    // (n-k-1)(n-k) is a product of consecutive integers, hence even; at
    // k = n it is zero, so the inner exponent is a non-negative integer for
    // every factor.
    Integer c_n = int_pow(2, static_cast<unsigned long>(n - 1) + two_to(n - 1));
    for (int k = 1; k <= n; ++k) {
        const int half = (n - k - 1) * (n - k) / 2;
        const Integer base = Integer(k) * int_pow(2, static_cast<unsigned long>(half));
        c_n *= int_pow(base, two_to(std::max(k - 2, 0)));
    }

    MatsusakaBound out;
    out.c_n = c_n;
    out.ktilde_l_coefficient =
        Integer(2 * n) * binomial(3ul * static_cast<unsigned long>(n) - 1,
                                  static_cast<unsigned long>(n)) +
        2 * n + 1;
    const unsigned long e = two_to(std::max(n - 2, 0));
    out.exponent = Integer(static_cast<long>(e));
    out.bound = Rational(c_n) * Rational(int_pow(inp.LK, e)) *
                rational_pow(Rational(1) + Rational(inp.LK) / Rational(inp.Ln), e);
    return out;
}

// ---------------------------------------------------------------------------
// Ohsawa-Takegoshi extension constant
// ---------------------------------------------------------------------------

namespace {

/// Exact value of an MPFR number as a rational: x = z * 2^e with z, e
/// integral.
Rational mpfr_to_rational(mpfr_t x) {
    if (mpfr_zero_p(x)) return Rational(0);
    Integer z;
    const mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), x);
    if (e >= 0) return Rational(z * int_pow(2, static_cast<unsigned long>(e)));
    return rat(z, int_pow(2, static_cast<unsigned long>(-e)));
}

/// One directed evaluation of 8*pi*e*sqrt(2 + 1/e) at the given precision.
/// `down` selects the rounding direction of every operation so the result is
/// a true lower (resp. upper) bound.  The reciprocal 1/e is anti-monotone in
/// e, so that step uses the oppositely rounded e.
Rational ot_directed(mpfr_prec_t prec, bool down) {
    const mpfr_rnd_t fwd = down ? MPFR_RNDD : MPFR_RNDU;
    const mpfr_rnd_t rev = down ? MPFR_RNDU : MPFR_RNDD;

    mpfr_t pi, e_fwd, e_rev, one, acc;
    mpfr_inits2(prec, pi, e_fwd, e_rev, one, acc, (mpfr_ptr)0);

    mpfr_const_pi(pi, fwd);
    mpfr_set_ui(one, 1, MPFR_RNDN);
    mpfr_exp(e_fwd, one, fwd);
    mpfr_exp(e_rev, one, rev);

    // acc = sqrt(2 + 1/e), every step rounded in the fwd direction.
    mpfr_ui_div(acc, 1, e_rev, fwd);
    mpfr_add_ui(acc, acc, 2, fwd);
    mpfr_sqrt(acc, acc, fwd);

    mpfr_mul(acc, acc, e_fwd, fwd);
    mpfr_mul(acc, acc, pi, fwd);
    mpfr_mul_ui(acc, acc, 8, fwd);

    Rational out = mpfr_to_rational(acc);
    mpfr_clears(pi, e_fwd, e_rev, one, acc, (mpfr_ptr)0);
    return out;
}

}  // namespace

Enclosure ot_constant(const Rational& max_width) {
    if (max_width <= 0)
        throw std::invalid_argument("ot_constant: requested width must be > 0");

    // Fixed precision ladder; every call walks it from the start and keeps
    // the running intersection, so enclosures for different widths nest.
    std::optional<Enclosure> running;
    for (mpfr_prec_t prec = 16; prec <= (1 << 20);
         prec += (prec < 64 ? 8 : prec / 2)) {
        Enclosure step{ot_directed(prec, true), ot_directed(prec, false)};
        if (running) {
            running->lo = std::max(running->lo, step.lo);
            running->hi = std::min(running->hi, step.hi);
        } else {
            running = step;
        }
        if (running->lo > running->hi)
            throw std::logic_error("ot_constant: directed bounds crossed");
        if (running->width() <= max_width) return *running;
    }
    throw std::logic_error("ot_constant: precision ladder exhausted");
}

// ---------------------------------------------------------------------------
// Skoda division exponents
// ---------------------------------------------------------------------------

SkodaExponents skoda_exponents(int n, int p, int k) {
    if (n < 1) throw std::invalid_argument("skoda_exponents: n must be >= 1");
    if (p < 1) throw std::invalid_argument("skoda_exponents: p must be >= 1");
    if (k < 1) throw std::invalid_argument("skoda_exponents: k must be >= 1");

    SkodaExponents out;
    out.n = n;
    out.k = k;
    out.p_given = p;
    // Pad the function list with identically zero entries until p >= n+1;
    // the exponent q = min(n, p-1) then equals n regardless of the request.
    out.p = std::max(p, n + 1);
    out.alpha = rat(n + k, n);
    out.q = std::min(n, out.p - 1);

    const Rational inner = 2 * out.alpha * out.q + 2;
    if (inner != Rational(2 * (n + k + 1)))
        throw std::logic_error("skoda_exponents: exponent identity violated");
    out.inner_exponent = Integer(2 * (n + k + 1));
    out.outer_exponent = Integer(2 * (n + k));
    return out;
}

SkodaExponents skoda_exponents(int n, int k) { return skoda_exponents(n, n + 1, k); }

// ---------------------------------------------------------------------------
// Graded monomial rings and generation degree
// ---------------------------------------------------------------------------

namespace {

bool piece_contains(const std::vector<Monomial>& piece, const Monomial& m) {
    return std::find(piece.begin(), piece.end(), m) != piece.end();
}

}  // namespace

void GradedMonomialRing::validate() const {
    if (nvars < 1) throw std::invalid_argument("graded ring: nvars must be >= 1");
    if (truncation < 0)
        throw std::invalid_argument("graded ring: truncation must be >= 0");
    if (static_cast<int>(pieces.size()) != truncation + 1)
        throw std::invalid_argument("graded ring: need one piece per degree 0..truncation");
    for (int m = 0; m <= truncation; ++m) {
        for (const Monomial& x : pieces[static_cast<std::size_t>(m)]) {
            if (x.nvars() != nvars)
                throw std::invalid_argument("graded ring: monomial in degree " +
                                            std::to_string(m) +
                                            " has wrong variable count");
            if (m == 0 && !x.is_one())
                throw std::invalid_argument("graded ring: degree-0 piece must be {1}");
        }
    }
    if (pieces[0].empty())
        throw std::invalid_argument("graded ring: degree-0 piece must be {1}");
    // Multiplicative closure below the truncation.
    for (int d1 = 0; d1 <= truncation; ++d1) {
        for (int d2 = d1; d1 + d2 <= truncation; ++d2) {
            for (const Monomial& y : pieces[static_cast<std::size_t>(d1)]) {
                for (const Monomial& z : pieces[static_cast<std::size_t>(d2)]) {
                    if (!piece_contains(pieces[static_cast<std::size_t>(d1 + d2)], y * z))
                        throw std::invalid_argument(
                            "graded ring: product of listed elements of degrees " +
                            std::to_string(d1) + " and " + std::to_string(d2) +
                            " is not listed");
                }
            }
        }
    }
}

GradedMonomialRing semigroup_ring(const std::vector<int>& generators, int truncation) {
    if (truncation < 0)
        throw std::invalid_argument("semigroup_ring: truncation must be >= 0");
    for (int g : generators)
        if (g < 1)
            throw std::invalid_argument("semigroup_ring: generators must be >= 1");

    // Representable degrees by the usual coin-problem dynamic program.
    std::vector<char> reachable(static_cast<std::size_t>(truncation) + 1, 0);
    reachable[0] = 1;
    for (int m = 1; m <= truncation; ++m)
        for (int g : generators)
            if (g <= m && reachable[static_cast<std::size_t>(m - g)])
                reachable[static_cast<std::size_t>(m)] = 1;

    GradedMonomialRing ring;
    ring.nvars = 1;
    ring.truncation = truncation;
    ring.pieces.resize(static_cast<std::size_t>(truncation) + 1);
    for (int m = 0; m <= truncation; ++m)
        if (reachable[static_cast<std::size_t>(m)])
            ring.pieces[static_cast<std::size_t>(m)].push_back(
                Monomial(std::vector<int>{m}));
    return ring;
}

GradedMonomialRing polynomial_ring_model(int nvars, int truncation) {
    if (nvars < 1)
        throw std::invalid_argument("polynomial_ring_model: nvars must be >= 1");
    if (truncation < 0)
        throw std::invalid_argument("polynomial_ring_model: truncation must be >= 0");
    GradedMonomialRing ring;
    ring.nvars = nvars;
    ring.truncation = truncation;
    ring.pieces.resize(static_cast<std::size_t>(truncation) + 1);
    for (int m = 0; m <= truncation; ++m)
        ring.pieces[static_cast<std::size_t>(m)] = monomials_of_degree(nvars, m);
    return ring;
}

GradedMonomialRing veronese_model(int nvars, int factor, int truncation) {
    if (nvars < 1) throw std::invalid_argument("veronese_model: nvars must be >= 1");
    if (factor < 1) throw std::invalid_argument("veronese_model: factor must be >= 1");
    if (truncation < 0)
        throw std::invalid_argument("veronese_model: truncation must be >= 0");
    GradedMonomialRing ring;
    ring.nvars = nvars;
    ring.truncation = truncation;
    ring.pieces.resize(static_cast<std::size_t>(truncation) + 1);
    for (int m = 0; m <= truncation; ++m)
        ring.pieces[static_cast<std::size_t>(m)] = monomials_of_degree(nvars, factor * m);
    return ring;
}

GenerationResult generation_degree(const GradedMonomialRing& ring) {
    ring.validate();
    const int M = ring.truncation;

    for (int D = 0; D <= M; ++D) {
        GenerationResult result;
        result.degree = D;
        bool ok = true;
        // Certify degrees above D in increasing order.  A right factor with
        // degree in (D, m) was itself certified in an earlier iteration, so
        // a single split into (listed, listed) pieces suffices.
        for (int m = D + 1; m <= M && ok; ++m) {
            for (const Monomial& x : ring.pieces[static_cast<std::size_t>(m)]) {
                bool factored = false;
                for (int d1 = 1; d1 <= std::min(D, m - 1) && !factored; ++d1) {
                    for (const Monomial& y : ring.pieces[static_cast<std::size_t>(d1)]) {
                        if (!divides(y, x)) continue;
                        const Monomial z = quotient(x, y);
                        if (!piece_contains(ring.pieces[static_cast<std::size_t>(m - d1)], z))
                            continue;
                        result.witnesses.push_back({m, x, d1, y, z});
                        factored = true;
                        break;
                    }
                }
                if (!factored) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            // The certificate is only conclusive when every degree in
            // (D, 2D] was actually inspected.
            if (2 * D > M) throw truncation_error(D, M);
            return result;
        }
    }
    // D = M always passes its (empty) certification loop, so control cannot
    // reach this point.
    throw std::logic_error("generation_degree: sweep fell through");
}

bool generation_bound_check(const GradedMonomialRing& ring, int n, int a, int b) {
    return generation_degree(ring).degree <= (n + 2) * a + b - 1;
}

}  // namespace specdom

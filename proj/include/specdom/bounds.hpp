#pragma once

// Effective bounds, exactly evaluated.
//
// Everything here is integer/rational arithmetic except ot_constant, which
// returns a certified rational enclosure computed with directed rounding.
// Nothing in this module ever returns a floating-point approximation.

#include <stdexcept>
#include <string>
#include <vector>

#include "specdom/monomial.hpp"
#include "specdom/rational.hpp"

namespace specdom {

// ---------------------------------------------------------------------------
// Matsusaka-type very-ampleness bound
// ---------------------------------------------------------------------------

/// Intersection-number inputs for the very-ampleness bound in dimension n.
///   LK = L^{n-1} . K~_X   (any integer)
///   Ln = L^n              (must be >= 1; L is ample)
struct MatsusakaInput {
    int n = 1;
    Integer LK;
    Integer Ln;
};

/// Exact evaluation of the bound together with the constants it is built
/// from.
///   c_n                   dimensional constant 2^{n-1+2^{n-1}} *
///                         prod_{k=1}^{n} (k * 2^{(n-k-1)(n-k)/2})^{2^{max(k-2,0)}}
///   ktilde_l_coefficient  the L-coefficient 2n*C(3n-1,n) + 2n + 1 appearing
///                         in the adjoint-twist bundle K~_X
///   exponent              2^{max(n-2,0)}, the power applied to both pairing
///                         factors
///   bound                 c_n * LK^exponent * (1 + LK/Ln)^exponent, exact
struct MatsusakaBound {
    Integer c_n;
    Integer ktilde_l_coefficient;
    Integer exponent;
    Rational bound;
};

/// Evaluates the bound exactly.  Throws std::invalid_argument when n < 1 or
/// Ln < 1.  The product defining c_n is accumulated left to right; any
/// evaluation order gives the same exact value.
MatsusakaBound matsusaka_bound(const MatsusakaInput& inp);

// ---------------------------------------------------------------------------
// Ohsawa-Takegoshi extension constant
// ---------------------------------------------------------------------------

/// A certified rational enclosure lo <= 8*pi*e*sqrt(2 + 1/e) <= hi.
struct Enclosure {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Encloses the extension constant 8*pi*e*sqrt(2 + 1/e) to the requested
/// width.  The enclosure is obtained by evaluating the closed form twice per
/// precision step -- once rounding every operation toward the lower bound
/// and once toward the upper -- and intersecting the results along a fixed
/// precision ladder.  Because the ladder is fixed, a finer request walks the
/// same prefix of steps as a coarser one, so enclosures at decreasing widths
/// are nested.  Throws std::invalid_argument when max_width <= 0.
Enclosure ot_constant(const Rational& max_width);

// ---------------------------------------------------------------------------
// Skoda division exponents
// ---------------------------------------------------------------------------

/// Weight exponents for the division theorem applied to p holomorphic
/// functions in dimension n with slack k.
///   alpha           (n+k)/n
///   p_given         requested number of functions
///   p               function count after padding with identically zero
///                   entries so that p >= n+1
///   q               min(n, p-1); equal to n after padding
///   inner_exponent  2*alpha*q + 2, the hypothesis weight power on |g|
///   outer_exponent  2*alpha*q, the conclusion weight power on |g|
/// The identity 2*alpha*q + 2 = 2(n+k+1) is asserted exactly during
/// construction; both recorded exponents are therefore integers.
struct SkodaExponents {
    int n = 1;
    int k = 1;
    int p_given = 1;
    int p = 1;
    Rational alpha;
    int q = 1;
    Integer inner_exponent;
    Integer outer_exponent;
};

/// Full form: dimension n, function count p, slack k.  Throws
/// std::invalid_argument when n < 1, p < 1, or k < 1.
SkodaExponents skoda_exponents(int n, int p, int k);

/// Convenience form with p already at the padded count n+1.
SkodaExponents skoda_exponents(int n, int k);

// ---------------------------------------------------------------------------
// Generation degree of graded monomial rings
// ---------------------------------------------------------------------------

/// A desk-scale model of a graded ring: for each degree m = 0..truncation, a
/// finite list of monomials spanning the degree-m piece.  Multiplication of
/// ring elements is multiplication of monomials.
struct GradedMonomialRing {
    int nvars = 1;
    int truncation = 0;
    std::vector<std::vector<Monomial>> pieces;

    /// Checks the structural invariants: pieces has truncation+1 entries,
    /// every listed monomial has nvars variables, the degree-0 piece is
    /// exactly {1}, and the listing is multiplicatively closed below the
    /// truncation (the product of listed elements of degrees d1, d2 with
    /// d1+d2 <= truncation is itself listed).  Throws std::invalid_argument
    /// on any violation.
    void validate() const;
};

/// Numerical-semigroup model on one variable: the degree-m piece is {t^m}
/// when m is a non-negative combination of the generators, else empty.
GradedMonomialRing semigroup_ring(const std::vector<int>& generators,
                                  int truncation);

/// Full polynomial ring model: the degree-m piece is all monomials of total
/// degree m in nvars variables.
GradedMonomialRing polynomial_ring_model(int nvars, int truncation);

/// Veronese-style model: the degree-m piece is all monomials of total degree
/// factor*m in nvars variables.
GradedMonomialRing veronese_model(int nvars, int factor, int truncation);

/// Raised by generation_degree when the truncation is too small to certify
/// the candidate degree it found: certification of D requires every degree
/// in (D, 2D] to be present below the truncation.
struct truncation_error : std::runtime_error {
    int degree;
    int truncation;
    truncation_error(int degree_, int truncation_)
        : std::runtime_error("generation degree " + std::to_string(degree_) +
                             " cannot be certified at truncation " +
                             std::to_string(truncation_) +
                             ": need truncation >= " +
                             std::to_string(2 * degree_)),
          degree(degree_),
          truncation(truncation_) {}
};

/// One factorization found while certifying the generation degree: the
/// listed element of the stated degree splits as left * right with left
/// listed in degree d1 <= D and right listed in degree degree - d1.
struct FactorWitness {
    int degree = 0;
    Monomial element;
    int d1 = 0;
    Monomial left;
    Monomial right;
};

/// The certified generation degree D together with one witness factorization
/// for every listed element of degree in (D, truncation].
struct GenerationResult {
    int degree = 0;
    std::vector<FactorWitness> witnesses;
};

/// Smallest D such that every listed element of every degree m with
/// D < m <= truncation factors as a product of a listed element of degree
/// d1 <= D and a listed element of degree m - d1 (itself certified when its
/// degree exceeds D; certification proceeds by increasing m, so that
/// requirement is met by construction).  Validates the ring first.  Throws
/// truncation_error when the smallest passing D has 2D > truncation.  The
/// result depends only on the sets of listed monomials, not on listing
/// order.
GenerationResult generation_degree(const GradedMonomialRing& ring);

/// Checks generation_degree(ring) <= (n+2)*a + b - 1, the effective
/// generation bound for a model whose caller asserts freeness data (a, b) in
/// dimension n.  Errors from generation_degree propagate.
bool generation_bound_check(const GradedMonomialRing& ring, int n, int a,
                            int b);

}  // namespace specdom

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "specdom/polynomial.hpp"

namespace specdom {

/// Finitely generated polynomial ideal with a lazily computed, cached
/// reduced Groebner basis. Values are immutable after construction; the
/// cache is filled at most once.
class Ideal {
  public:
    /// Requires at least one nonzero generator (zero polynomials are
    /// dropped first). Use Ideal::zero for the zero ideal.
    explicit Ideal(std::vector<Polynomial> generators,
                   MonomialOrder order = MonomialOrder::grevlex());

    static Ideal zero(int nvars, MonomialOrder order = MonomialOrder::grevlex());

    int nvars() const { return nvars_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    /// The unique reduced Groebner basis under order(): monic elements,
    /// no leading monomial divides another, every element fully reduced
    /// against the rest, sorted ascending by leading monomial. Empty for
    /// the zero ideal. Computed on first use and cached.
    const std::vector<Polynomial>& basis() const;
    bool basis_cached() const { return gb_.has_value(); }

  private:
    Ideal(int nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

    int nvars_;
    MonomialOrder order_;
    std::vector<Polynomial> gens_;
    mutable std::optional<std::vector<Polynomial>> gb_;
};

/// S(f,g) = lcm/lt(f)*f - lcm/lt(g)*g, the classical S-polynomial.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Remainder of full multivariate division of p by the given basis
/// (every term of the result is reducible by no basis leading monomial).
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis);

/// Remainder against the reduced basis of I; zero iff p belongs to I.
Polynomial normal_form(const Polynomial& p, const Ideal& I);

bool is_member(const Polynomial& p, const Ideal& I);

/// Radical membership via the Rabinowitsch device: f lies in the radical
/// of I iff 1 belongs to I + (1 - y*f) in one extra variable y.
bool is_radical_member(const Polynomial& f, const Ideal& I);

enum class MinPowerStatus { found, not_in_radical, bound_exceeded };

struct MinPowerResult {
    MinPowerStatus status = MinPowerStatus::not_in_radical;
    int m = 0;  // valid only when status == found

    static MinPowerResult found_at(int m) { return {MinPowerStatus::found, m}; }
    static MinPowerResult not_in_radical() { return {MinPowerStatus::not_in_radical, 0}; }
    static MinPowerResult bound_exceeded() { return {MinPowerStatus::bound_exceeded, 0}; }
};

/// Smallest m <= m_max with f^m in I. Distinguishes "f is not even in
/// the radical" from "in the radical but the power exceeds m_max".
MinPowerResult min_power_in(const Polynomial& f, const Ideal& I, int m_max = 64);

/// Generators of the intersection of I with the subring in the kept
/// variables, via a block elimination order. The result lives in the
/// same ambient variables; it is the zero ideal when the intersection
/// is trivial.
Ideal eliminate(const Ideal& I, const std::vector<int>& keep);

/// True iff every variable has a pure-power leading monomial in the
/// reduced basis (the unit ideal counts: its zero set is empty).
bool is_zero_dimensional(const Ideal& I);

struct radical_unsupported : std::runtime_error {
    radical_unsupported() : std::runtime_error("radical unsupported for this ideal class") {}
};

/// Radical of I for the two supported classes: monomial ideals
/// (squarefree parts of the reduced basis) and zero-dimensional ideals
/// (Seidenberg: adjoin squarefree parts of the univariate eliminants).
/// Throws radical_unsupported otherwise. The result carries its reduced
/// basis as generators.
Ideal radical(const Ideal& I);

/// Every S-polynomial of the cached reduced basis reduces to zero.
bool buchberger_criterion_holds(const Ideal& I);

/// Index of the single variable p depends on, if there is exactly one.
std::optional<int> univariate_support(const Polynomial& p);

/// Squarefree part for the classes we can certify: single-term
/// polynomials (exponents clamped to 1) and polynomials of univariate
/// support (divide out gcd(p, p') by the Euclidean algorithm). Returns
/// nullopt for anything else. Result is monic.
std::optional<Polynomial> try_squarefree_part(const Polynomial& p);

/// Exact univariate division p = q*d + r in the variable `var`
/// (both inputs must have support inside {var}); returns {q, r}.
std::pair<Polynomial, Polynomial> univariate_divmod(const Polynomial& p, const Polynomial& d,
                                                    int var);

/// Monic gcd of two polynomials of support inside {var}.
Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b, int var);

}  // namespace specdom

#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "specdom/monomial.hpp"
#include "specdom/rational.hpp"

namespace specdom {

/// Total-degree ceiling for products; guards runaway expansions.
int degree_cap() noexcept;
void set_degree_cap(int cap);

struct degree_cap_error : std::runtime_error {
    int attempted;
    int cap;
    degree_cap_error(int attempted_, int cap_)
        : std::runtime_error("total degree " + std::to_string(attempted_) +
                             " exceeds the degree cap " + std::to_string(cap_)),
          attempted(attempted_),
          cap(cap_) {}
};

/// Exact multivariate polynomial with rational coefficients. Terms are kept
/// sorted descending under the carried monomial order with no zero
/// coefficients; the zero polynomial has no terms and degree nullopt.
class Polynomial {
  public:
    using Term = std::pair<Monomial, Rational>;

    explicit Polynomial(int nvars, MonomialOrder order = MonomialOrder::grevlex());

    static Polynomial constant(int nvars, const Rational& c,
                               MonomialOrder order = MonomialOrder::grevlex());
    static Polynomial variable(int nvars, int index,
                               MonomialOrder order = MonomialOrder::grevlex());
    static Polynomial from_term(int nvars, const Monomial& m, const Rational& c,
                                MonomialOrder order = MonomialOrder::grevlex());
    static Polynomial from_terms(int nvars, std::vector<Term> terms,
                                 MonomialOrder order = MonomialOrder::grevlex());

    int nvars() const { return nvars_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    bool is_single_term() const { return terms_.size() == 1; }

    /// nullopt for the zero polynomial.
    std::optional<int> degree() const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    Rational eval_at_origin() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Same terms re-canonicalized under a different order.
    Polynomial with_order(MonomialOrder order) const;

    /// Scaled to leading coefficient 1 (zero stays zero).
    Polynomial monic() const;

    /// Multiply by a single term c*m; the workhorse of division loops.
    Polynomial times_term(const Monomial& m, const Rational& c) const;

    std::string to_string() const;
    std::string to_string(const std::vector<std::string>& names) const;

  private:
    int nvars_;
    MonomialOrder order_;
    std::vector<Term> terms_;  // descending under order_
};

Polynomial operator*(const Rational& c, const Polynomial& p);

Polynomial partial_derivative(const Polynomial& p, int var);
Polynomial pow(const Polynomial& p, int exponent);

/// Determinant of the matrix (d g_i / d z_j), expanded exactly.
/// Requires exactly n polynomials in n variables.
Polynomial jacobian_det(std::span<const Polynomial> g);
Polynomial jacobian_det(const std::vector<Polynomial>& g);

/// Deterministic total order used wherever generator lists need a canonical
/// listing. Compares term sequences from the leading term down.
int poly_compare(const Polynomial& a, const Polynomial& b);

std::vector<std::string> default_var_names(int nvars);

}  // namespace specdom

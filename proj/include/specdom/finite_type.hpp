#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specdom/kohn.hpp"

namespace specdom {

/// t -> (c_1 t^{a_1}, ..., c_n t^{a_n}); at least one coefficient nonzero.
struct MonomialCurve {
    std::vector<Rational> c;
    std::vector<int> a;
    bool operator==(const MonomialCurve&) const = default;
};

/// Lower bound for the type from the monomial-curve search, with the
/// curve achieving it. `infinite` marks a curve on which every h_j
/// composes to zero (the boundary contains a curve).
struct TypeEstimate {
    bool infinite = false;
    Rational value;  // valid when !infinite
    std::optional<MonomialCurve> witness;
};

struct TypeConfig {
    int p_cap = 12;
    int exponent_cap = 6;
    int samples = 4;  // seeded full-support coefficient draws per exponent vector
    std::uint64_t seed = 0;
};

struct TypeReport {
    std::optional<int> p;  // empty: not finite type up to p_cap
    int p_cap = 12;
    bool zero_dim = false;
    TypeEstimate t_hat;
    std::optional<int> q_hat;  // consistent intermediate exponent, when one exists
    std::vector<std::pair<std::string, bool>> inequality_checks;  // empty when skipped
};

/// All monomials of exact total degree `degree`, deterministic order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

/// Vanishing order at t=0 of h composed with the curve; empty when the
/// composition is identically zero. Throws on an all-zero curve.
std::optional<int> curve_vanishing_order(const Polynomial& h, const MonomialCurve& phi);

/// Smallest p <= p_cap with every degree-p monomial inside the ideal
/// (h_1..h_N); empty if none, or when the ideal is not zero-dimensional
/// (the guard under which polynomial membership matches the local-ring
/// question for this domain class).
std::optional<int> finite_type_order(const SpecialDomain& D, int p_cap = 12);

/// Max over monomial curves (0/1 coefficient patterns on every support,
/// exponents up to exponent_cap with reparametrizations skipped, plus
/// seeded full-support rational draws) of
///   2 * min_j ord(h_j o phi) / min_{c_i != 0} a_i.
/// A curve killing every h_j short-circuits to the infinite estimate.
TypeEstimate dangelo_type_estimate(const SpecialDomain& D, int exponent_cap = 6, int samples = 4,
                                   std::uint64_t seed = 0);

/// Assemble the report: for finite p, check that some integer q_hat fits
/// both the band ceil(t_hat/2) <= q_hat <= floor(t_hat) and the Skoda
/// range p <= q_hat <= (n+2)p; relations are recorded, never fatal.
TypeReport check_relations(int n, std::optional<int> p, int p_cap, bool zero_dim,
                           const TypeEstimate& t_hat);

/// finite_type_order + dangelo_type_estimate + check_relations.
TypeReport analyze_type(const SpecialDomain& D, const TypeConfig& cfg = {});

}  // namespace specdom

#include "specdom/finite_type.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace specdom {

namespace {

void collect_monomials(int nvars, int var, int remaining, Monomial& cur,
                       std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        cur.e[static_cast<std::size_t>(var)] = remaining;
        out.push_back(cur);
        return;
    }
    for (int d = remaining; d >= 0; --d) {
        cur.e[static_cast<std::size_t>(var)] = d;
        collect_monomials(nvars, var + 1, remaining - d, cur, out);
    }
}

Rational rational_power(const Rational& base, int e) {
    Rational r = rat(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

std::optional<Ideal> domain_ideal(const SpecialDomain& D) {
    std::vector<Polynomial> gens;
    for (const auto& p : D.h)
        if (!p.is_zero()) gens.push_back(p);
    if (gens.empty()) return std::nullopt;  // every h is zero
    return Ideal(std::move(gens));
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    if (nvars < 1) throw std::invalid_argument("variable count must be positive");
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    std::vector<Monomial> out;
    Monomial cur(nvars);
    collect_monomials(nvars, 0, degree, cur, out);
    return out;
}

std::optional<int> curve_vanishing_order(const Polynomial& h, const MonomialCurve& phi) {
    const int n = h.nvars();
    if (static_cast<int>(phi.c.size()) != n || static_cast<int>(phi.a.size()) != n)
        throw std::invalid_argument("curve dimension mismatch");
    bool live = false;
    for (int i = 0; i < n; ++i) {
        if (phi.a[static_cast<std::size_t>(i)] < 1)
            throw std::invalid_argument("curve exponents must be positive");
        if (phi.c[static_cast<std::size_t>(i)] != 0) live = true;
    }
    if (!live) throw std::invalid_argument("all-zero curve rejected");

    std::map<int, Rational> coeff;  // t-power -> coefficient
    for (const auto& [m, c] : h.terms()) {
        Rational factor = c;
        int tdeg = 0;
        bool dead = false;
        for (int i = 0; i < n && !dead; ++i) {
            int e = m.e[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (phi.c[static_cast<std::size_t>(i)] == 0) {
                dead = true;
                break;
            }
            tdeg += phi.a[static_cast<std::size_t>(i)] * e;
            factor *= rational_power(phi.c[static_cast<std::size_t>(i)], e);
        }
        if (!dead) coeff[tdeg] += factor;
    }
    for (const auto& [d, v] : coeff)
        if (v != 0) return d;
    return std::nullopt;
}

std::optional<int> finite_type_order(const SpecialDomain& D, int p_cap) {
    if (p_cap < 1) throw std::invalid_argument("p_cap must be positive");
    auto I = domain_ideal(D);
    if (!I || !is_zero_dimensional(*I)) return std::nullopt;
    for (int p = 1; p <= p_cap; ++p) {
        bool all_in = true;
        for (const auto& m : monomials_of_degree(D.n, p)) {
            if (!is_member(Polynomial::from_term(D.n, m, rat(1)), *I)) {
                all_in = false;
                break;
            }
        }
        if (all_in) return p;
    }
    return std::nullopt;
}

TypeEstimate dangelo_type_estimate(const SpecialDomain& D, int exponent_cap, int samples,
                                   std::uint64_t seed) {
    if (exponent_cap < 1) throw std::invalid_argument("exponent_cap must be positive");
    const int n = D.n;
    std::mt19937_64 eng(seed);
    auto nonzero_rational = [&]() {
        long num = 1 + static_cast<long>(eng() % 9);
        long den = 1 + static_cast<long>(eng() % 3);
        if (eng() % 2) num = -num;
        return rat(num, den);
    };

    TypeEstimate best;
    bool have = false;

    auto consider = [&](const MonomialCurve& phi) -> bool {
        std::optional<int> min_ord;
        for (const auto& hj : D.h) {
            auto o = curve_vanishing_order(hj, phi);
            if (o && (!min_ord || *o < *min_ord)) min_ord = o;
        }
        if (!min_ord) {  // every composition vanished identically
            best = TypeEstimate{true, rat(0), phi};
            return true;
        }
        int min_a = 0;
        for (int i = 0; i < n; ++i)
            if (phi.c[static_cast<std::size_t>(i)] != 0 &&
                (min_a == 0 || phi.a[static_cast<std::size_t>(i)] < min_a))
                min_a = phi.a[static_cast<std::size_t>(i)];
        Rational value = rat(2 * *min_ord, min_a);
        if (!have || value > best.value) {
            best = TypeEstimate{false, std::move(value), phi};
            have = true;
        }
        return false;
    };

    // Nonempty supports as bitmasks; exponents enumerated per support
    // with gcd 1 (a common factor is just a reparametrization).
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> support;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) support.push_back(i);
        const int s = static_cast<int>(support.size());

        std::vector<int> exps(static_cast<std::size_t>(s), 1);
        while (true) {
            int g = 0;
            for (int e : exps) g = std::gcd(g, e);
            if (g == 1) {
                MonomialCurve phi{std::vector<Rational>(static_cast<std::size_t>(n), rat(0)),
                                  std::vector<int>(static_cast<std::size_t>(n), 1)};
                for (int i = 0; i < s; ++i) {
                    phi.c[static_cast<std::size_t>(support[static_cast<std::size_t>(i)])] = rat(1);
                    phi.a[static_cast<std::size_t>(support[static_cast<std::size_t>(i)])] =
                        exps[static_cast<std::size_t>(i)];
                }
                if (consider(phi)) return best;
                if (s == n) {
                    for (int r = 0; r < samples; ++r) {
                        MonomialCurve rnd = phi;
                        for (int i = 0; i < n; ++i) rnd.c[static_cast<std::size_t>(i)] = nonzero_rational();
                        if (consider(rnd)) return best;
                    }
                }
            }
            // odometer over [1, exponent_cap]^s
            int pos = s - 1;
            while (pos >= 0 && exps[static_cast<std::size_t>(pos)] == exponent_cap) {
                exps[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++exps[static_cast<std::size_t>(pos)];
        }
    }
    return best;
}

TypeReport check_relations(int n, std::optional<int> p, int p_cap, bool zero_dim,
                           const TypeEstimate& t_hat) {
    TypeReport r;
    r.p = p;
    r.p_cap = p_cap;
    r.zero_dim = zero_dim;
    r.t_hat = t_hat;
    if (!p) return r;  // not finite type up to cap: relations skipped

    bool t_lower = !t_hat.infinite && t_hat.value >= 2;
    bool band_nonempty = false;
    bool compatible = false;
    if (!t_hat.infinite) {
        const Rational& t = t_hat.value;
        Integer lo, hi;
        // ceil(t/2) and floor(t)
        mpz_cdiv_q(lo.get_mpz_t(), t.get_num().get_mpz_t(),
                   Integer(2 * t.get_den()).get_mpz_t());
        mpz_fdiv_q(hi.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
        band_nonempty = lo <= hi;
        Integer clo = std::max(lo, Integer(*p));
        Integer chi = std::min(hi, Integer((n + 2) * *p));
        compatible = clo <= chi;
        if (compatible) r.q_hat = static_cast<int>(clo.get_si());
    }
    r.inequality_checks = {{"t_hat_at_least_2", t_lower},
                           {"q_band_nonempty", band_nonempty},
                           {"skoda_q_compatible", compatible}};
    return r;
}

TypeReport analyze_type(const SpecialDomain& D, const TypeConfig& cfg) {
    auto I = domain_ideal(D);
    bool zero_dim = I && is_zero_dimensional(*I);
    auto p = finite_type_order(D, cfg.p_cap);
    TypeEstimate t_hat = dangelo_type_estimate(D, cfg.exponent_cap, cfg.samples, cfg.seed);
    return check_relations(D.n, p, cfg.p_cap, zero_dim, t_hat);
}

}  // namespace specdom

#include "specdom/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace specdom {

namespace {

// Basis element with its sugar degree (degree the element would have if
// every input had been homogenized); drives pair selection.
struct Work {
    Polynomial p;
    int sugar;
};

// Full reduction of w by basis, tracking sugar through each cancellation.
void reduce_full(Work& w, const std::vector<Work>& basis) {
    const int n = w.p.nvars();
    const MonomialOrder order = w.p.order();
    Polynomial p = std::move(w.p);
    Polynomial r(n, order);
    while (!p.is_zero()) {
        const Monomial lm = p.leading_monomial();
        bool hit = false;
        for (const auto& g : basis) {
            const Monomial& gl = g.p.leading_monomial();
            if (!divides(gl, lm)) continue;
            Monomial q = quotient(lm, gl);
            w.sugar = std::max(w.sugar, g.sugar + q.degree());
            p = p - g.p.times_term(q, p.leading_coefficient() / g.p.leading_coefficient());
            hit = true;
            break;
        }
        if (!hit) {
            Polynomial lt = Polynomial::from_term(n, lm, p.leading_coefficient(), order);
            r = r + lt;
            p = p - lt;
        }
    }
    w.p = std::move(r);
}

// Buchberger with sugar-strategy selection and both classical pair
// criteria, followed by minimalization and inter-reduction. Input:
// nonzero polynomials already under `order`. Output: the reduced basis,
// monic, sorted ascending by leading monomial.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& input, MonomialOrder order) {
    std::vector<Work> basis;
    basis.reserve(input.size());
    for (const auto& g : input) basis.push_back({g.monic(), *g.degree()});

    struct Pair {
        int i, j;
        Monomial l;
        int sugar;
    };
    std::vector<Pair> pending;
    auto make_pair_for = [&](int i, int j) {
        const Monomial& a = basis[static_cast<std::size_t>(i)].p.leading_monomial();
        const Monomial& b = basis[static_cast<std::size_t>(j)].p.leading_monomial();
        Monomial l = lcm(a, b);
        int s = l.degree() + std::max(basis[static_cast<std::size_t>(i)].sugar - a.degree(),
                                      basis[static_cast<std::size_t>(j)].sugar - b.degree());
        return Pair{i, j, std::move(l), s};
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j)
        for (int i = 0; i < j; ++i) pending.push_back(make_pair_for(i, j));

    auto pair_pending = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        for (const auto& pr : pending)
            if (pr.i == i && pr.j == j) return true;
        return false;
    };

    while (!pending.empty()) {
        std::size_t best = 0;
        for (std::size_t t = 1; t < pending.size(); ++t) {
            const Pair& a = pending[t];
            const Pair& b = pending[best];
            if (a.sugar != b.sugar) {
                if (a.sugar < b.sugar) best = t;
                continue;
            }
            int c = order.compare(a.l, b.l);
            if (c < 0 || (c == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j)))) best = t;
        }
        Pair pr = pending[best];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));

        const Monomial& li = basis[static_cast<std::size_t>(pr.i)].p.leading_monomial();
        const Monomial& lj = basis[static_cast<std::size_t>(pr.j)].p.leading_monomial();
        if (coprime(li, lj)) continue;  // product criterion
        bool chained = false;           // chain criterion
        for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!divides(basis[static_cast<std::size_t>(k)].p.leading_monomial(), pr.l)) continue;
            if (!pair_pending(pr.i, k) && !pair_pending(pr.j, k)) {
                chained = true;
                break;
            }
        }
        if (chained) continue;

        Work s{s_polynomial(basis[static_cast<std::size_t>(pr.i)].p,
                            basis[static_cast<std::size_t>(pr.j)].p),
               pr.sugar};
        reduce_full(s, basis);
        if (s.p.is_zero()) continue;
        s.p = s.p.monic();
        basis.push_back(std::move(s));
        int t = static_cast<int>(basis.size()) - 1;
        for (int i = 0; i < t; ++i) pending.push_back(make_pair_for(i, t));
    }

    // Minimalize: ascending by leading monomial, keep only elements whose
    // leading monomial no kept one divides.
    std::sort(basis.begin(), basis.end(), [&](const Work& a, const Work& b) {
        int c = order.compare(a.p.leading_monomial(), b.p.leading_monomial());
        if (c != 0) return c < 0;
        return poly_compare(a.p, b.p) < 0;
    });
    std::vector<Polynomial> kept;
    for (const auto& w : basis) {
        bool covered = false;
        for (const auto& k : kept)
            if (divides(k.leading_monomial(), w.p.leading_monomial())) {
                covered = true;
                break;
            }
        if (!covered) kept.push_back(w.p);
    }

    // Inter-reduce tails to a fixpoint; leading monomials are stable
    // because the kept set is minimal.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(kept.size() - 1);
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            Polynomial nf = normal_form(kept[i], others).monic();
            if (!(nf == kept[i])) {
                kept[i] = std::move(nf);
                changed = true;
            }
        }
    }
    std::sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_monomial(), b.leading_monomial());
    });
    return kept;
}

// Appends `extra` fresh variables (exponent zero everywhere).
Polynomial extend_vars(const Polynomial& p, int extra, MonomialOrder order) {
    std::vector<Polynomial::Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
        Monomial me(p.nvars() + extra);
        std::copy(m.e.begin(), m.e.end(), me.e.begin());
        ts.emplace_back(std::move(me), c);
    }
    return Polynomial::from_terms(p.nvars() + extra, std::move(ts), order);
}

}  // namespace

Ideal::Ideal(std::vector<Polynomial> generators, MonomialOrder order)
    : nvars_(0), order_(order) {
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        if (gens_.empty())
            nvars_ = g.nvars();
        else if (g.nvars() != nvars_)
            throw std::invalid_argument("generator variable count mismatch");
        gens_.push_back(g.order() == order_ ? std::move(g) : g.with_order(order_));
    }
    if (gens_.empty())
        throw std::invalid_argument("ideal requires a nonzero generator (use Ideal::zero)");
}

Ideal Ideal::zero(int nvars, MonomialOrder order) {
    if (nvars < 1) throw std::invalid_argument("variable count must be positive");
    return Ideal(nvars, order);
}

const std::vector<Polynomial>& Ideal::basis() const {
    if (!gb_) {
        if (gens_.empty()) {
            gb_.emplace();
        } else {
            gb_ = buchberger(gens_, order_);
            // Post-construction check: every S-polynomial of the finished
            // basis reduces to zero.
            const auto& b = *gb_;
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j)
                    if (!normal_form(s_polynomial(b[i], b[j]), b).is_zero())
                        throw std::logic_error("reduced basis failed the S-polynomial check");
        }
    }
    return *gb_;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s-polynomial of a zero polynomial");
    if (f.nvars() != g.nvars()) throw std::invalid_argument("variable count mismatch");
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.times_term(quotient(l, f.leading_monomial()), rat(1) / f.leading_coefficient());
    Polynomial b = g.times_term(quotient(l, g.leading_monomial()), rat(1) / g.leading_coefficient());
    return a - b;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis) {
    const int n = p.nvars();
    const MonomialOrder order = p.order();
    Polynomial cur = p;
    Polynomial r(n, order);
    while (!cur.is_zero()) {
        const Monomial lm = cur.leading_monomial();
        bool hit = false;
        for (const auto& g : basis) {
            if (g.is_zero() || !divides(g.leading_monomial(), lm)) continue;
            cur = cur - g.times_term(quotient(lm, g.leading_monomial()),
                                     cur.leading_coefficient() / g.leading_coefficient());
            hit = true;
            break;
        }
        if (!hit) {
            Polynomial lt = Polynomial::from_term(n, lm, cur.leading_coefficient(), order);
            r = r + lt;
            cur = cur - lt;
        }
    }
    return r;
}

Polynomial normal_form(const Polynomial& p, const Ideal& I) {
    if (p.nvars() != I.nvars()) throw std::invalid_argument("variable count mismatch");
    const Polynomial q = (p.order() == I.order()) ? p : p.with_order(I.order());
    return normal_form(q, I.basis());
}

bool is_member(const Polynomial& p, const Ideal& I) { return normal_form(p, I).is_zero(); }

bool is_radical_member(const Polynomial& f, const Ideal& I) {
    const int n = I.nvars();
    if (f.nvars() != n) throw std::invalid_argument("variable count mismatch");
    if (f.is_zero()) return true;
    MonomialOrder ext = MonomialOrder::grevlex();
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size() + 1);
    for (const auto& g : I.generators()) gens.push_back(extend_vars(g, 1, ext));
    Polynomial fe = extend_vars(f, 1, ext);
    Polynomial y = Polynomial::variable(n + 1, n, ext);
    Polynomial one = Polynomial::constant(n + 1, rat(1), ext);
    gens.push_back(one - y * fe);
    Ideal J(std::move(gens), ext);
    const auto& b = J.basis();
    return b.size() == 1 && b[0].is_constant();
}

MinPowerResult min_power_in(const Polynomial& f, const Ideal& I, int m_max) {
    if (m_max < 1) throw std::invalid_argument("m_max must be positive");
    if (!is_radical_member(f, I)) return MinPowerResult::not_in_radical();
    // f^m lies in I iff nf(f)^m does; iterating normal forms keeps the
    // degrees inside the staircase.
    Polynomial p1 = normal_form(f, I);
    Polynomial pk = p1;
    for (int m = 1; m <= m_max; ++m) {
        if (pk.is_zero()) return MinPowerResult::found_at(m);
        if (m < m_max) pk = normal_form(pk * p1, I);
    }
    return MinPowerResult::bound_exceeded();
}

Ideal eliminate(const Ideal& I, const std::vector<int>& keep) {
    const int n = I.nvars();
    if (keep.empty()) throw std::invalid_argument("eliminate requires a nonempty kept set");
    std::set<int> kept_set(keep.begin(), keep.end());
    for (int i : kept_set)
        if (i < 0 || i >= n) throw std::out_of_range("kept variable index out of range");
    if (I.is_zero()) return I;

    // Permute the eliminated variables into the leading block.
    std::vector<int> perm;  // new slot -> original variable
    perm.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        if (!kept_set.count(i)) perm.push_back(i);
    const int split = static_cast<int>(perm.size());
    for (int i = 0; i < n; ++i)
        if (kept_set.count(i)) perm.push_back(i);
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])] = s;

    auto remap = [&](const Polynomial& p, const std::vector<int>& map, MonomialOrder ord) {
        std::vector<Polynomial::Term> ts;
        ts.reserve(p.terms().size());
        for (const auto& [m, c] : p.terms()) {
            Monomial mm(n);
            for (int t = 0; t < n; ++t)
                mm.e[static_cast<std::size_t>(t)] = m.e[static_cast<std::size_t>(map[static_cast<std::size_t>(t)])];
            ts.emplace_back(std::move(mm), c);
        }
        return Polynomial::from_terms(n, std::move(ts), ord);
    };

    MonomialOrder elim = MonomialOrder::elimination(split);
    std::vector<Polynomial> pg;
    pg.reserve(I.generators().size());
    for (const auto& g : I.generators()) pg.push_back(remap(g, perm, elim));
    Ideal permuted(std::move(pg), elim);

    std::vector<Polynomial> out;
    for (const auto& b : permuted.basis()) {
        bool tail_only = true;
        for (const auto& [m, c] : b.terms()) {
            (void)c;
            for (int t = 0; t < split && tail_only; ++t)
                if (m.e[static_cast<std::size_t>(t)] != 0) tail_only = false;
            if (!tail_only) break;
        }
        if (tail_only) out.push_back(remap(b, inv, I.order()));
    }
    if (out.empty()) return Ideal::zero(n, I.order());
    return Ideal(std::move(out), I.order());
}

bool is_zero_dimensional(const Ideal& I) {
    const auto& b = I.basis();
    if (b.size() == 1 && b[0].is_constant()) return true;  // empty zero set
    for (int i = 0; i < I.nvars(); ++i) {
        bool pure = false;
        for (const auto& g : b) {
            const Monomial& lm = g.leading_monomial();
            if (lm.e[static_cast<std::size_t>(i)] < 1) continue;
            bool only_i = true;
            for (int j = 0; j < I.nvars(); ++j)
                if (j != i && lm.e[static_cast<std::size_t>(j)] != 0) only_i = false;
            if (only_i) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

Ideal radical(const Ideal& I) {
    if (I.is_zero()) return I;
    const auto& b = I.basis();

    bool all_single = true;
    for (const auto& g : b)
        if (!g.is_single_term()) all_single = false;
    if (all_single) {
        // Monomial ideal: squarefree parts of the reduced basis.
        std::vector<Polynomial> gens;
        gens.reserve(b.size());
        for (const auto& g : b) {
            Monomial m = g.leading_monomial();
            for (auto& e : m.e) e = std::min(e, 1);
            gens.push_back(Polynomial::from_term(I.nvars(), m, rat(1), I.order()));
        }
        Ideal r(std::move(gens), I.order());
        return Ideal(r.basis(), I.order());
    }

    if (is_zero_dimensional(I)) {
        // Seidenberg: a zero-dimensional ideal containing a squarefree
        // univariate polynomial in every variable is radical.
        std::vector<Polynomial> gens = I.generators();
        for (int i = 0; i < I.nvars(); ++i) {
            Ideal e = eliminate(I, {i});
            if (e.is_zero())
                throw std::logic_error("zero-dimensional ideal with trivial eliminant");
            const Polynomial& g = e.basis().front();
            auto s = try_squarefree_part(g);
            if (!s) throw std::logic_error("eliminant is not univariate");
            gens.push_back(std::move(*s));
        }
        Ideal r(std::move(gens), I.order());
        return Ideal(r.basis(), I.order());
    }

    throw radical_unsupported();
}

bool buchberger_criterion_holds(const Ideal& I) {
    const auto& b = I.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!normal_form(s_polynomial(b[i], b[j]), b).is_zero()) return false;
    return true;
}

std::optional<int> univariate_support(const Polynomial& p) {
    int var = -1;
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        for (int i = 0; i < p.nvars(); ++i) {
            if (m.e[static_cast<std::size_t>(i)] == 0) continue;
            if (var == -1)
                var = i;
            else if (var != i)
                return std::nullopt;
        }
    }
    if (var == -1) return std::nullopt;  // constant or zero
    return var;
}

std::pair<Polynomial, Polynomial> univariate_divmod(const Polynomial& p, const Polynomial& d,
                                                    int var) {
    auto check = [&](const Polynomial& x) {
        auto s = univariate_support(x);
        if (s && *s != var) throw std::invalid_argument("polynomial not univariate in the given variable");
    };
    check(p);
    check(d);
    if (d.is_zero()) throw std::invalid_argument("univariate division by zero");
    const int n = p.nvars();
    const MonomialOrder order = p.order();
    Polynomial q(n, order);
    Polynomial r = p;
    const int dd = *d.degree();
    while (!r.is_zero() && *r.degree() >= dd) {
        Polynomial t = Polynomial::from_term(n, quotient(r.leading_monomial(), d.leading_monomial()),
                                             r.leading_coefficient() / d.leading_coefficient(), order);
        q = q + t;
        r = r - t * d;
    }
    return {std::move(q), std::move(r)};
}

Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b, int var) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = univariate_divmod(x, y, var).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

std::optional<Polynomial> try_squarefree_part(const Polynomial& p) {
    if (p.is_zero()) return std::nullopt;
    if (p.is_single_term()) {
        Monomial m = p.leading_monomial();
        for (auto& e : m.e) e = std::min(e, 1);
        return Polynomial::from_term(p.nvars(), m, rat(1), p.order());
    }
    auto var = univariate_support(p);
    if (!var) return std::nullopt;  // multivariate support (constants are single terms)
    Polynomial g = univariate_gcd(p, partial_derivative(p, *var), *var);
    if (g.is_constant()) return p.monic();
    auto [q, r] = univariate_divmod(p, g, *var);
    if (!r.is_zero()) throw std::logic_error("squarefree division left a remainder");
    return q.monic();
}

}  // namespace specdom

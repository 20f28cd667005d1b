#include "specdom/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>

namespace specdom {

namespace {

std::atomic<int> g_degree_cap{64};

struct MonoLess {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order.less(a, b); }
};

void check_cap(int attempted) {
    int cap = degree_cap();
    if (attempted > cap) throw degree_cap_error(attempted, cap);
}

}  // namespace

int degree_cap() noexcept { return g_degree_cap.load(std::memory_order_relaxed); }

void set_degree_cap(int cap) {
    if (cap < 1) throw std::invalid_argument("degree cap must be positive");
    g_degree_cap.store(cap, std::memory_order_relaxed);
}

Polynomial::Polynomial(int nvars, MonomialOrder order) : nvars_(nvars), order_(order) {
    if (nvars < 1) throw std::invalid_argument("variable count must be positive");
}

Polynomial Polynomial::constant(int nvars, const Rational& c, MonomialOrder order) {
    Polynomial p(nvars, order);
    if (c != 0) p.terms_.emplace_back(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index, MonomialOrder order) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
    Monomial m(nvars);
    m.e[static_cast<std::size_t>(index)] = 1;
    return from_term(nvars, m, rat(1), order);
}

Polynomial Polynomial::from_term(int nvars, const Monomial& m, const Rational& c,
                                 MonomialOrder order) {
    if (m.nvars() != nvars) throw std::invalid_argument("monomial variable count mismatch");
    Polynomial p(nvars, order);
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms, MonomialOrder order) {
    std::map<Monomial, Rational, MonoLess> acc{MonoLess{order}};
    for (auto& [m, c] : terms) {
        if (m.nvars() != nvars) throw std::invalid_argument("monomial variable count mismatch");
        acc[m] += c;
    }
    Polynomial p(nvars, order);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
        if (it->second != 0) p.terms_.emplace_back(it->first, it->second);
    }
    return p;
}

std::optional<int> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
    return terms_.front().first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return terms_.front().second;
}

Rational Polynomial::eval_at_origin() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return rat(0);
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    const Polynomial& b = (order_ == o.order_) ? o : o.with_order(order_);
    Polynomial r(nvars_, order_);
    r.terms_.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < b.terms_.size()) {
        int c = order_.compare(terms_[i].first, b.terms_[j].first);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Rational s = terms_[i].second + b.terms_[j].second;
            if (s != 0) r.terms_.emplace_back(terms_[i].first, s);
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    if (is_zero() || o.is_zero()) return Polynomial(nvars_, order_);
    check_cap(*degree() + *o.degree());
    const Polynomial& b = (order_ == o.order_) ? o : o.with_order(order_);
    std::map<Monomial, Rational, MonoLess> acc{MonoLess{order_}};
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            acc[ma * mb] += ca * cb;
        }
    }
    Polynomial r(nvars_, order_);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
        if (it->second != 0) r.terms_.emplace_back(it->first, it->second);
    }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial(nvars_, order_);
    Polynomial r = *this;
    for (auto& [m, coeff] : r.terms_) coeff *= c;
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

bool Polynomial::operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_) return false;
    if (order_ == o.order_) return terms_ == o.terms_;
    return terms_ == o.with_order(order_).terms_;
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
    Polynomial r = Polynomial::from_terms(nvars_, terms_, order);
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Rational inv = rat(1) / leading_coefficient();
    return *this * inv;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial variable count mismatch");
    if (c == 0 || is_zero()) return Polynomial(nvars_, order_);
    check_cap(*degree() + m.degree());
    Polynomial r(nvars_, order_);
    r.terms_.reserve(terms_.size());
    for (const auto& [mt, ct] : terms_) r.terms_.emplace_back(mt * m, ct * c);
    // Multiplication by one monomial preserves the relative order of terms.
    return r;
}

Polynomial partial_derivative(const Polynomial& p, int var) {
    if (var < 0 || var >= p.nvars()) throw std::out_of_range("variable index out of range");
    std::vector<Polynomial::Term> out;
    for (const auto& [m, c] : p.terms()) {
        int e = m.e[static_cast<std::size_t>(var)];
        if (e == 0) continue;
        Monomial d = m;
        d.e[static_cast<std::size_t>(var)] = e - 1;
        out.emplace_back(d, c * rat(e));
    }
    return Polynomial::from_terms(p.nvars(), std::move(out), p.order());
}

Polynomial pow(const Polynomial& p, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial r = Polynomial::constant(p.nvars(), rat(1), p.order());
    for (int i = 0; i < exponent; ++i) r = r * p;
    return r;
}

namespace {

// Minor expansion over column subsets: det of rows [r..n) against the columns
// in `mask`, built bottom-up one row at a time.
Polynomial det_by_minors(const std::vector<std::vector<Polynomial>>& m, int n,
                         MonomialOrder order) {
    std::vector<Polynomial> cur;  // indexed by column mask, only |mask| == n-r live
    std::vector<Polynomial> next;
    const int full = (1 << n);
    cur.assign(static_cast<std::size_t>(full), Polynomial(n, order));
    for (int j = 0; j < n; ++j) cur[static_cast<std::size_t>(1 << j)] = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j)];
    for (int r = n - 2; r >= 0; --r) {
        next.assign(static_cast<std::size_t>(full), Polynomial(n, order));
        int size = n - r;
        for (int mask = 0; mask < full; ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) != size) continue;
            Polynomial acc(n, order);
            int pos = 0;
            for (int j = 0; j < n; ++j) {
                if (!(mask & (1 << j))) continue;
                const Polynomial& entry = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                if (!entry.is_zero()) {
                    Polynomial sub = entry * cur[static_cast<std::size_t>(mask ^ (1 << j))];
                    acc = (pos % 2 == 0) ? acc + sub : acc - sub;
                }
                ++pos;
            }
            next[static_cast<std::size_t>(mask)] = std::move(acc);
        }
        cur.swap(next);
    }
    return cur[static_cast<std::size_t>(full - 1)];
}

}  // namespace

Polynomial jacobian_det(std::span<const Polynomial> g) {
    if (g.empty()) throw std::invalid_argument("jacobian of empty tuple");
    int n = g[0].nvars();
    if (static_cast<int>(g.size()) != n)
        throw std::invalid_argument("jacobian needs exactly n polynomials in n variables");
    MonomialOrder order = g[0].order();
    std::vector<std::vector<Polynomial>> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (g[static_cast<std::size_t>(i)].nvars() != n)
            throw std::invalid_argument("jacobian inputs must share the variable count");
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i)].push_back(partial_derivative(g[static_cast<std::size_t>(i)], j));
    }
    if (n == 1) return m[0][0];
    return det_by_minors(m, n, order);
}

Polynomial jacobian_det(const std::vector<Polynomial>& g) {
    return jacobian_det(std::span<const Polynomial>(g.data(), g.size()));
}

int poly_compare(const Polynomial& a, const Polynomial& b) {
    const Polynomial& bb = (a.order() == b.order()) ? b : b.with_order(a.order());
    const auto& ta = a.terms();
    const auto& tb = bb.terms();
    std::size_t k = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < k; ++i) {
        int c = a.order().compare(ta[i].first, tb[i].first);
        if (c != 0) return c;
        int cc = cmp(ta[i].second, tb[i].second);
        if (cc != 0) return cc;
    }
    if (ta.size() != tb.size()) return ta.size() > tb.size() ? 1 : -1;
    return 0;
}

std::vector<std::string> default_var_names(int nvars) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) names.push_back("z" + std::to_string(i + 1));
    return names;
}

std::string Polynomial::to_string() const { return to_string(default_var_names(nvars_)); }

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nvars_)
        throw std::invalid_argument("name table size mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = !m.is_one();
        if (!has_vars) {
            os << specdom::to_string(a);
        } else {
            bool printed = false;
            if (a != 1) {
                os << specdom::to_string(a);
                printed = true;
            }
            for (int i = 0; i < nvars_; ++i) {
                int e = m.e[static_cast<std::size_t>(i)];
                if (e == 0) continue;
                if (printed) os << "*";
                os << names[static_cast<std::size_t>(i)];
                if (e > 1) os << "^" << e;
                printed = true;
            }
        }
    }
    return os.str();
}

}  // namespace specdom

#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace specdom {

/// Dense exponent vector over a fixed ambient variable count.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(static_cast<std::size_t>(nvars), 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        for (int x : e)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline bool divides(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) return false;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("monomial variable count mismatch");
    Monomial r = a;
    for (std::size_t i = 0; i < b.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

/// Componentwise quotient; requires divides(b, a).
inline Monomial quotient(const Monomial& a, const Monomial& b) {
    if (!divides(b, a)) throw std::invalid_argument("monomial quotient does not exist");
    Monomial r = a;
    for (std::size_t i = 0; i < b.e.size(); ++i) r.e[i] -= b.e[i];
    return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("monomial variable count mismatch");
    Monomial r = a;
    for (std::size_t i = 0; i < b.e.size(); ++i)
        if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

enum class OrderKind { grevlex, lex, elimination };

/// Total order on monomials, compatible with multiplication, with 1 minimal.
/// elimination(split) compares the first `split` variables as a grevlex block
/// before the rest, so any monomial touching the first block dominates every
/// monomial supported in the tail block.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    int split = 0;

    static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::lex, 0}; }
    static MonomialOrder elimination(int split) { return {OrderKind::elimination, split}; }

    bool operator==(const MonomialOrder& o) const = default;

    /// >0 if a > b, <0 if a < b, 0 if equal.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case OrderKind::lex:
                return cmp_lex(a, b, 0, a.nvars());
            case OrderKind::grevlex:
                return cmp_grevlex(a, b, 0, a.nvars());
            case OrderKind::elimination: {
                int c = cmp_grevlex(a, b, 0, split);
                if (c != 0) return c;
                return cmp_grevlex(a, b, split, a.nvars());
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string name() const {
        switch (kind) {
            case OrderKind::grevlex: return "grevlex";
            case OrderKind::lex: return "lex";
            case OrderKind::elimination: return "elimination(" + std::to_string(split) + ")";
        }
        return "?";
    }

  private:
    static int cmp_lex(const Monomial& a, const Monomial& b, int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
    }

    // Degree first; ties broken by the smaller exponent in the last position
    // where they differ.
    static int cmp_grevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
        int da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (int i = hi - 1; i >= lo; --i) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        }
        return 0;
    }
};

}  // namespace specdom

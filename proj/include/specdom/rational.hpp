#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace specdom {

// Exact coefficient arithmetic. mpq_class values are kept reduced with a
// positive denominator, which is the canonical form everything downstream
// (printing, digests, dedup) relies on.
using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(num, den) does not canonicalize on its own.
inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" with optional sign.
inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational q(s);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

// Canonical rendering: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace specdom

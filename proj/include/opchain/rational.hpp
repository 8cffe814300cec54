#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace opchain {

// Exact rational scalar. Every value is kept canonical: gcd(num, den) = 1,
// den > 0. GMP canonicalizes results of arithmetic on canonical operands.
using Scalar = mpq_class;

inline Scalar scalar_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

// Lowest-terms "p/q" form; integers print without the "/1".
inline std::string scalar_to_string(const Scalar& q) {
    return q.get_str();
}

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

} // namespace opchain

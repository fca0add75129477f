#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace critgroup {

/// Arbitrary-precision integer. All arithmetic in this library is exact.
using Int = mpz_class;

/// Exact rational, kept in lowest terms with positive denominator by GMP.
using Rat = mpq_class;

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

/// gcd of all entries (by absolute value); 0 for the zero vector.
inline Int gcd_all(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return abs(g);
}

inline bool is_primitive(const std::vector<Int>& v) { return gcd_all(v) == 1; }

inline bool divides(const Int& a, const Int& b) {
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

/// Exact quotient b/a; caller must ensure divisibility.
inline Int exact_div(const Int& b, const Int& a) {
    Int q;
    mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    return q;
}

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

}  // namespace critgroup

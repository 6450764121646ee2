#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace taut {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" for integers.
std::string to_string(const Rational& q);

// Accepts "p/q" and "p" with an optional leading sign. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

// (2k-1)!! with the convention (-1)!! = 1.
Integer double_factorial_odd(unsigned k);

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_reduced(const Rational& q) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return g == 1 && q.get_den() > 0;
}

}  // namespace taut

#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace latfree {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// floor division, as in mpz_fdiv_q
inline Int int_fdiv(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// true when b/a is an integer (a, b nonzero rationals)
inline bool rat_divides(const Rat& a, const Rat& b) {
    Rat q = b / a;
    q.canonicalize();
    return q.get_den() == 1;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

unsigned long euler_phi(unsigned long n);
int moebius(unsigned long n);
std::vector<unsigned long> divisors(unsigned long n);

// prime -> exponent of |q|, by trial division; q must be nonzero.
// Factors above the trial bound are kept as a single composite entry.
std::map<Int, long> factor_rational(const Rat& q);

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

}  // namespace latfree

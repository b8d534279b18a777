#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace cy {

// Exact rational, always canonical (gcd-reduced, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

// floor of a rational
inline Int rfloor(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

inline Int ilcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int igcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// exact integer n-th root; returns false if base is not a perfect power
bool iroot_exact(const Int& base, unsigned long n, Int& out);

// all positive divisors of |v|, unsorted
std::vector<Int> divisors(const Int& v);

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s); // "p/q" or "p"

} // namespace cy

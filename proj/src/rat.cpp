#include "cy/rat.hpp"

#include <algorithm>
#include <stdexcept>

namespace cy {

bool iroot_exact(const Int& base, unsigned long n, Int& out) {
    if (base < 0 && n % 2 == 0) return false;
    Int b = abs(base);
    Int r;
    int exact = mpz_root(r.get_mpz_t(), b.get_mpz_t(), n);
    if (!exact) return false;
    out = (base < 0) ? Int(-r) : r;
    return true;
}

std::vector<Int> divisors(const Int& v) {
    Int a = abs(v);
    std::vector<Int> out;
    if (a == 0) return out;
    // trial division; fingerprint-sized anchors factor over small primes in practice
    std::vector<std::pair<Int, unsigned>> fac;
    Int rem = a;
    for (Int p = 2; p * p <= rem;) {
        if (rem % p == 0) {
            unsigned e = 0;
            while (rem % p == 0) { rem /= p; ++e; }
            fac.emplace_back(p, e);
        }
        p += (p == 2) ? 1 : 2;
    }
    if (rem > 1) fac.emplace_back(rem, 1);
    out.push_back(1);
    for (auto& [p, e] : fac) {
        size_t base_count = out.size();
        Int pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base_count; ++j) out.push_back(out[j] * pk);
        }
    }
    return out;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

} // namespace cy

#include "cy/poly.hpp"

#include <cassert>
#include <sstream>

namespace cy {

Rat Poly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rat> c(coeffs_);
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rat& k) const {
    std::vector<Rat> c(coeffs_);
    for (auto& v : c) v *= k;
    return Poly(std::move(c));
}

Poly Poly::operator/(const Rat& k) const {
    assert(k != 0);
    std::vector<Rat> c(coeffs_);
    for (auto& v : c) v /= k;
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rat> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * rat(static_cast<long>(i));
    return Poly(std::move(c));
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::one();
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly Poly::compose_affine(const Rat& a, const Rat& b) const {
    // Horner in (a*x + b)
    Poly lin = Poly::linear(a, b);
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + Poly(*it);
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    assert(!b.is_zero());
    std::vector<Rat> rem = a.coeffs_;
    int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Rat> quot(static_cast<size_t>(a.degree() - db) + 1, rat(0));
    for (int i = a.degree(); i >= db; --i) {
        Rat q = rem[static_cast<size_t>(i)] / b.leading();
        if (q == 0) continue;
        quot[static_cast<size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= q * b.coeffs_[static_cast<size_t>(j)];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

Rat Poly::content() const {
    if (is_zero()) return rat(0);
    Int g = 0, l = 1;
    for (const auto& c : coeffs_) {
        g = igcd(g, num(c));
        l = ilcm(l, den(c));
    }
    return Rat(g, l);
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    return *this / content();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this / leading();
}

RootList Poly::rational_roots() const {
    RootList out;
    out.residual = *this;
    if (is_zero() || degree() == 0) return out;
    Poly p = primitive();
    // strip roots at 0
    int zero_mult = 0;
    while (!p.is_zero() && p.coeff(0) == 0) {
        std::vector<Rat> c(p.coeffs().begin() + 1, p.coeffs().end());
        p = Poly(std::move(c));
        ++zero_mult;
    }
    if (zero_mult) out.roots.emplace_back(rat(0), zero_mult);
    if (p.degree() >= 1) {
        p = p.primitive();
        std::vector<Int> ps = divisors(num(p.coeff(0)));
        std::vector<Int> qs = divisors(num(p.leading()));
        std::vector<Rat> candidates;
        for (const auto& a : ps)
            for (const auto& b : qs) {
                Rat r(a, b);
                r.canonicalize();
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        for (const auto& r : candidates) {
            int mult = 0;
            while (p.degree() >= 1 && p.eval(r) == 0) {
                auto [q, rem] = divmod(p, Poly::linear(rat(1), -r));
                assert(rem.is_zero());
                p = q;
                ++mult;
            }
            if (mult) out.roots.emplace_back(r, mult);
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.residual = p;
    return out;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat c = coeff(i);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = abs(c);
        if (i == 0 || a != 1) os << rat_to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace cy

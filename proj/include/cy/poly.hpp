#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cy/rat.hpp"

namespace cy {

struct RootList;

// Univariate polynomial over Q, coefficients ascending, trailing zeros stripped.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rat c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(rat(1)); }
    static Poly x() { return Poly(std::vector<Rat>{rat(0), rat(1)}); }
    // a*x + b
    static Poly linear(const Rat& a, const Rat& b) {
        return Poly(std::vector<Rat>{b, a});
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return rat(0);
        return coeffs_[static_cast<size_t>(i)];
    }
    const Rat& leading() const { return coeffs_.back(); }

    Rat eval(const Rat& x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly operator/(const Rat& c) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    Poly derivative() const;
    Poly pow(unsigned e) const;

    // P(a*x + b)
    Poly compose_affine(const Rat& a, const Rat& b) const;
    // P(-x)
    Poly negate_var() const { return compose_affine(rat(-1), rat(0)); }
    // P(x + c)
    Poly shift(const Rat& c) const { return compose_affine(rat(1), c); }

    // quotient and remainder; divisor must be nonzero
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    static Poly gcd(const Poly& a, const Poly& b); // monic

    // rational c > 0 with P = c * (primitive integer polynomial); content(0) = 0
    Rat content() const;
    // P scaled to integer coefficients, content 1, sign of leading coefficient kept
    Poly primitive() const;
    Poly monic() const;

    // rational roots with multiplicity; remaining factor has no rational roots
    RootList rational_roots() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

struct RootList {
    std::vector<std::pair<Rat, int>> roots; // (root, multiplicity)
    Poly residual;                          // rootless factor (or constant)
};

} // namespace cy

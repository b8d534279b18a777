#pragma once

#include <vector>

#include "cy/poly.hpp"
#include "cy/rat.hpp"

namespace cy {

// Truncated power series over Q. Exactly trunc() coefficients are known;
// arithmetic never reports coefficients beyond the minimum trunc of its inputs.
class PowerSeries {
public:
    PowerSeries() = default;
    PowerSeries(std::vector<Rat> coeffs)
        : coeffs_(std::move(coeffs)) {}
    // constant series c + 0*z + ... to order n
    static PowerSeries constant(const Rat& c, int n);
    static PowerSeries identity(int n); // z

    int trunc() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int i) const {
        if (i < 0 || i >= trunc()) return rat(0);
        return coeffs_[static_cast<size_t>(i)];
    }
    bool is_zero() const;

    PowerSeries truncated(int n) const;

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator-() const;
    PowerSeries operator*(const PowerSeries& o) const;
    PowerSeries operator*(const Rat& c) const;
    PowerSeries operator/(const PowerSeries& o) const; // o(0) != 0
    bool operator==(const PowerSeries& o) const { return coeffs_ == o.coeffs_; }

    PowerSeries derivative() const; // trunc drops by one
    PowerSeries integrate() const;  // constant of integration 0, trunc grows by one

    PowerSeries exp() const; // requires f(0) = 0
    PowerSeries log() const; // requires f(0) = 1

    // g with f(g(q)) = q; requires f(0)=0, f'(0) != 0
    PowerSeries reversion() const;

    // g with g^s = f, g(0)=1; requires f(0)=1
    PowerSeries nth_root(unsigned long s) const;

    // f(g(z)), requires g(0) = 0
    PowerSeries compose(const PowerSeries& g) const;

    // coefficient-wise product
    static PowerSeries hadamard(const PowerSeries& f, const PowerSeries& g);

    bool all_integral(int* first_bad = nullptr) const;

    std::string to_string(const std::string& var = "z", int max_terms = -1) const;

private:
    std::vector<Rat> coeffs_;
};

} // namespace cy

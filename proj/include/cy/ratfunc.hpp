#pragma once

#include <string>

#include "cy/poly.hpp"

namespace cy {

// Rational function num/den, fully reduced, den monic and nonzero.
class RatFunc {
public:
    RatFunc() : num_(Poly::zero()), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den);
    explicit RatFunc(const Rat& c) : num_(Poly(c)), den_(Poly::one()) {}

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator*(const Rat& c) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    RatFunc derivative() const;

    std::string to_string(const std::string& var = "z") const;

private:
    Poly num_, den_;
};

} // namespace cy

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cy/poly.hpp"
#include "cy/ratfunc.hpp"
#include "cy/series.hpp"

namespace cy {

// Differential operator sum_{i=0..k} z^i P_i(theta), theta = z d/dz.
// P_0 and P_k are nonzero.
class ThetaOperator {
public:
    static ThetaOperator make(std::vector<Poly> terms);

    int k() const { return static_cast<int>(terms_.size()) - 1; }
    int order() const { return order_; }
    const std::vector<Poly>& terms() const { return terms_; }
    const Poly& term(int i) const { return terms_[static_cast<size_t>(i)]; }

    bool operator==(const ThetaOperator& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    ThetaOperator(std::vector<Poly> terms, int order)
        : terms_(std::move(terms)), order_(order) {}
    std::vector<Poly> terms_;
    int order_ = 0;
};

struct ClassicalForm {
    // y^(n) + a_{n-1} y^(n-1) + ... + a_0 y = 0
    std::vector<RatFunc> a; // a_0 .. a_{n-1}
};

struct InfinityPoint {};
using Point = std::variant<Rat, InfinityPoint>;

struct LocalExponents {
    Point point;
    std::vector<std::pair<Rat, int>> roots; // rational exponents with multiplicity
    Poly residual;                          // unresolved non-rational factor
    int total_multiplicity = 0;
};

ThetaOperator make_operator(std::vector<Poly> terms);

// D applied to a series; trunc drops by k
PowerSeries apply(const ThetaOperator& D, const PowerSeries& f);

ClassicalForm to_classical(const ThetaOperator& D);

// coefficient polynomials b_m(z) of D = sum b_m(z) (d/dz)^m; b_m = z^m * beta_m
// returns beta_0..beta_n
std::vector<Poly> classical_beta(const ThetaOperator& D);

enum class IndicialPoint { Zero, Infinity };
Poly indicial(const ThetaOperator& D, IndicialPoint at);

LocalExponents local_exponents(const ThetaOperator& D, const Point& z0);

ThetaOperator translate_mum(const ThetaOperator& D, const Rat& z0, const Rat& a);

ThetaOperator reflect_infinity(const ThetaOperator& D, const Rat& twist);

ThetaOperator scale_z(const ThetaOperator& D, const Rat& lam);

// integer coefficients, content 1, leading coefficient of P_0 positive
ThetaOperator normalize(const ThetaOperator& D);

// operator composition D1 * D2 (apply D2 first)
ThetaOperator compose(const ThetaOperator& D1, const ThetaOperator& D2);

// lambda with normalize(scale_z(D1, lambda)) == normalize(D2), if one exists
std::optional<Rat> scaling_equivalent(const ThetaOperator& D1, const ThetaOperator& D2);

} // namespace cy

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cy/constructions.hpp"
#include "cy/formula.hpp"
#include "cy/frobenius.hpp"
#include "cy/theta_op.hpp"

using namespace cy;

static ThetaOperator quintic() {
    Poly p1 = Poly::linear(rat(5), rat(1)) * Poly::linear(rat(5), rat(2)) *
              Poly::linear(rat(5), rat(3)) * Poly::linear(rat(5), rat(4)) * rat(-5);
    return make_operator({Poly::x().pow(4), p1});
}

// #3: theta^4 - 256 z (theta+1/2)^4, solution binom(2n,n)^4
static ThetaOperator op3() {
    return make_operator(
        {Poly::x().pow(4), Poly::linear(rat(1), rat(1, 2)).pow(4) * rat(-256)});
}

static PowerSeries from_formula(const std::string& src, int n) {
    auto ast = formula_parse(src);
    std::vector<Rat> c;
    for (int i = 0; i < n; ++i) c.push_back(formula_eval(ast, i));
    return PowerSeries(std::move(c));
}

TEST_CASE("hadamard series is the coefficient product") {
    PowerSeries f = from_formula("binom(2*n,n)", 12);
    PowerSeries g = from_formula("binom(2*n,n)^3", 12);
    PowerSeries h = hadamard_series(f, g);
    CHECK(h == from_formula("binom(2*n,n)^4", 12));
}

TEST_CASE("fit recovers the quintic operator") {
    PowerSeries A = from_formula("fact(5*n)/fact(n)^5", 40);
    auto fitted = fit_operator(A, FitSpec{});
    REQUIRE(fitted.has_value());
    CHECK(normalize(*fitted) == normalize(quintic()));
}

TEST_CASE("fit-then-apply annihilation for #3") {
    PowerSeries A = from_formula("binom(2*n,n)^4", 60);
    auto fitted = fit_operator(A, FitSpec{});
    REQUIRE(fitted.has_value());
    CHECK(normalize(*fitted) == normalize(op3()));
    // annihilate far beyond the fit window
    PowerSeries longer = holomorphic_coeffs(*fitted, 201);
    CHECK(longer.coeff(200) == from_formula("binom(2*n,n)^4", 201).coeff(200));
    CHECK(apply(*fitted, longer).is_zero());
}

TEST_CASE("fit prefers the minimal order") {
    // geometric series is annihilated by a first-order operator
    PowerSeries g = from_formula("3^n", 30);
    auto fitted = fit_operator(g, FitSpec{});
    REQUIRE(fitted.has_value());
    CHECK(fitted->order() == 1);
    CHECK(fitted->k() == 1);
    CHECK(apply(*fitted, g).is_zero());
}

TEST_CASE("fit declines without enough data") {
    PowerSeries tiny = from_formula("fact(5*n)/fact(n)^5", 8);
    CHECK(!fit_operator(tiny, FitSpec{}).has_value());
}

TEST_CASE("fit rejects a non-holonomic series") {
    // the primes are not P-recursive
    std::vector<Rat> c;
    for (long n = 2; c.size() < 50; ++n) {
        bool prime = n > 1;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) prime = false;
        if (prime) c.push_back(rat(n));
    }
    CHECK(!fit_operator(PowerSeries(std::move(c)), FitSpec{}).has_value());
}

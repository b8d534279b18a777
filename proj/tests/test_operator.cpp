#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cy/errors.hpp"
#include "cy/frobenius.hpp"
#include "cy/theta_op.hpp"

using namespace cy;

static Poly quart(std::vector<long> asc) {
    std::vector<Rat> c;
    for (long v : asc) c.push_back(rat(v));
    return Poly(std::move(c));
}

// #1: theta^4 - 5z(5theta+1)(5theta+2)(5theta+3)(5theta+4)
static ThetaOperator quintic() {
    Poly p1 = Poly::linear(rat(5), rat(1)) * Poly::linear(rat(5), rat(2)) *
              Poly::linear(rat(5), rat(3)) * Poly::linear(rat(5), rat(4)) * rat(-5);
    return make_operator({Poly::x().pow(4), p1});
}

TEST_CASE("make_operator validation") {
    CHECK_THROWS_AS(make_operator({}), EmptyOperator);
    CHECK_THROWS_AS(make_operator({Poly::zero(), Poly::one()}), ZeroBoundaryTerm);
    CHECK_THROWS_AS(make_operator({Poly::one(), Poly::zero()}), ZeroBoundaryTerm);
    ThetaOperator op = quintic();
    CHECK(op.k() == 1);
    CHECK(op.order() == 4);
}

TEST_CASE("apply acts by shifted evaluation") {
    ThetaOperator op = quintic();
    PowerSeries f = holomorphic_coeffs(op, 40);
    CHECK(apply(op, f).is_zero());
    // apply to a non-solution gives the defect explicitly: D z = P0(1) z + ...
    PowerSeries z = PowerSeries::identity(10);
    PowerSeries img = apply(op, z);
    CHECK(img.coeff(1) == op.term(0).eval(rat(1)));
    CHECK(img.coeff(2) == op.term(1).eval(rat(1)));
}

TEST_CASE("classical conversion round trip via series") {
    ThetaOperator op = quintic();
    auto beta = classical_beta(op);
    REQUIRE(beta.size() == 5);
    // sum_m z^m beta_m(z) f^(m)(z) must equal apply(op, f)
    PowerSeries f = holomorphic_coeffs(op, 30) + PowerSeries::identity(30); // non-solution
    PowerSeries direct = apply(op, f);
    PowerSeries viaclassical = PowerSeries::constant(rat(0), 30);
    PowerSeries deriv = f;
    PowerSeries zpow = PowerSeries::constant(rat(1), 30);
    for (size_t m = 0; m < beta.size(); ++m) {
        std::vector<Rat> bc;
        for (int i = 0; i <= std::max(0, beta[m].degree()); ++i)
            bc.push_back(beta[m].coeff(i));
        bc.resize(30, rat(0));
        PowerSeries bm(bc);
        viaclassical = viaclassical + (zpow * bm * deriv).truncated(direct.trunc());
        deriv = deriv.derivative();
        zpow = (zpow * PowerSeries::identity(30)).truncated(30);
        viaclassical = viaclassical.truncated(direct.trunc());
    }
    for (int n = 0; n < direct.trunc() - 6; ++n)
        CHECK(direct.coeff(n) == viaclassical.coeff(n));
}

TEST_CASE("indicial polynomials") {
    ThetaOperator op = quintic();
    Poly at0 = indicial(op, IndicialPoint::Zero);
    CHECK(at0.monic() == Poly::x().pow(4));
    Poly atinf = indicial(op, IndicialPoint::Infinity);
    // roots 1/5, 2/5, 3/5, 4/5
    CHECK(atinf.eval(rat(1, 5)) == 0);
    CHECK(atinf.eval(rat(2, 5)) == 0);
    CHECK(atinf.eval(rat(3, 5)) == 0);
    CHECK(atinf.eval(rat(4, 5)) == 0);

    auto le = local_exponents(op, Point(InfinityPoint{}));
    REQUIRE(le.roots.size() == 4);
    CHECK(le.roots[0].first == rat(1, 5));
    CHECK(le.roots[3].first == rat(4, 5));

    // conifold point z = 5^-5: exponents 0, 1, 1, 2
    auto lc = local_exponents(op, Point(rat(1, 3125)));
    CHECK(lc.total_multiplicity == 4);
    REQUIRE(lc.roots.size() == 3);
    CHECK(lc.roots[0] == std::pair<Rat, int>{rat(0), 1});
    CHECK(lc.roots[1] == std::pair<Rat, int>{rat(1), 2});
    CHECK(lc.roots[2] == std::pair<Rat, int>{rat(2), 1});
}

TEST_CASE("translate transports solutions") {
    // translating by 0 is the identity up to normalization
    ThetaOperator op = quintic();
    CHECK(normalize(translate_mum(op, rat(0), rat(0))) == normalize(op));

    // D annihilates z^2; the translate by z0 annihilates (z0 + w)^2
    ThetaOperator D = compose(op, make_operator({Poly::linear(rat(1), rat(-2))}));
    ThetaOperator moved = translate_mum(D, rat(1, 7), rat(0));
    std::vector<Rat> g(16, rat(0));
    g[0] = rat(1, 49);
    g[1] = rat(2, 7);
    g[2] = rat(1);
    CHECK(apply(moved, PowerSeries(g)).is_zero());

    // the exponent conjugation shifts local exponents: w^{-a} twist
    ThetaOperator twisted = translate_mum(D, rat(1, 7), rat(3));
    auto le = local_exponents(twisted, Point(rat(0)));
    auto le0 = local_exponents(moved, Point(rat(0)));
    REQUIRE(!le.roots.empty());
    REQUIRE(!le0.roots.empty());
    CHECK(le.roots[0].first == le0.roots[0].first - 3);
}

TEST_CASE("reflect twice is identity") {
    ThetaOperator op = quintic();
    ThetaOperator r2 = reflect_infinity(reflect_infinity(op, rat(0)), rat(0));
    CHECK(normalize(r2) == normalize(op));
}

TEST_CASE("scale group law and solutions") {
    ThetaOperator op = quintic();
    ThetaOperator a = scale_z(scale_z(op, rat(2)), rat(3, 4));
    ThetaOperator b = scale_z(op, rat(3, 2));
    CHECK(normalize(a) == normalize(b));
    CHECK_THROWS_AS(scale_z(op, rat(0)), ZeroScale);

    // solution transforms as A_n -> lambda^n A_n
    PowerSeries A = holomorphic_coeffs(op, 10);
    PowerSeries As = holomorphic_coeffs(scale_z(op, rat(1, 5)), 10);
    Rat l = 1;
    for (int n = 0; n < 10; ++n) {
        CHECK(As.coeff(n) == A.coeff(n) * l);
        l /= 5;
    }
}

TEST_CASE("scaling_equivalent finds the witness") {
    ThetaOperator op = quintic();
    auto w = scaling_equivalent(op, scale_z(op, rat(-7, 3)));
    REQUIRE(w.has_value());
    CHECK(*w == rat(-7, 3));
    // no witness between genuinely different operators
    ThetaOperator other = make_operator(
        {Poly::x().pow(4), quart({-120, -1250, -4375, -6250, -3124})});
    CHECK(!scaling_equivalent(op, other).has_value());
}

TEST_CASE("compose multiplies solutions spaces") {
    // (theta - 2) annihilates z^2; compose(D, theta-2) annihilates z^2 too
    ThetaOperator first = make_operator({Poly::linear(rat(1), rat(-2))});
    ThetaOperator comp = compose(quintic(), first);
    std::vector<Rat> z2(12, rat(0));
    z2[2] = 1;
    CHECK(apply(comp, PowerSeries(z2)).is_zero());
    CHECK(comp.order() == 5);
}

TEST_CASE("normalize produces primitive integer form") {
    Poly p0 = Poly::x().pow(4) * rat(-2, 3);
    Poly p1 = quart({4, 10, 0, 0, 6}) * rat(-2, 3);
    ThetaOperator n = normalize(make_operator({p0, p1}));
    CHECK(n.term(0).leading() > 0);
    for (const Poly& t : n.terms())
        for (const Rat& c : t.coeffs()) CHECK(is_integer(c));
    CHECK(n.term(0) == Poly::x().pow(4));
}

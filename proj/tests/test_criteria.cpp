#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cy/criteria.hpp"
#include "cy/errors.hpp"
#include "cy/theta_op.hpp"

using namespace cy;

static ThetaOperator quintic() {
    Poly p1 = Poly::linear(rat(5), rat(1)) * Poly::linear(rat(5), rat(2)) *
              Poly::linear(rat(5), rat(3)) * Poly::linear(rat(5), rat(4)) * rat(-5);
    return make_operator({Poly::x().pow(4), p1});
}

TEST_CASE("self-duality holds for the quintic and breaks under perturbation") {
    ThetaOperator op = quintic();
    CHECK(check_selfdual(op));
    // bump one coefficient of P1
    std::vector<Poly> terms = op.terms();
    terms[1] = terms[1] + Poly::x();
    CHECK(!check_selfdual(make_operator(std::move(terms))));
    // wrong order
    CHECK_THROWS_AS(check_selfdual(make_operator({Poly::x().pow(3), Poly::one()})),
                    WrongOrder);
}

TEST_CASE("spectrum analysis of the quintic") {
    SpectrumAnalysis sa = analyze_spectrum(quintic());
    CHECK(sa.pass);
    REQUIRE(sa.lambdas.size() == 4);
    CHECK(sa.lambdas == std::vector<Rat>{rat(1, 5), rat(2, 5), rat(3, 5), rat(4, 5)});
    REQUIRE(sa.s.has_value());
    CHECK(*sa.s == 1);
    REQUIRE(sa.cyclo.has_value());
    CHECK(*sa.cyclo == std::vector<int>{5});
}

TEST_CASE("spectrum analysis rejects non-cyclotomic exponents") {
    // P1(-lambda) roots at 1/7 twice and 1/2 twice: {1/7, 1/7} is not a full
    // primitive residue system mod 7
    Poly p1 = Poly::linear(rat(7), rat(-1)).pow(2) * Poly::linear(rat(2), rat(-1)).pow(2);
    ThetaOperator op = make_operator({Poly::x().pow(4), p1.negate_var()});
    SpectrumAnalysis sa = analyze_spectrum(op);
    CHECK(!sa.pass);
}

TEST_CASE("enumerate_spectra(1) gives the 14 hypergeometric rows") {
    auto spectra = enumerate_spectra(rat(1));
    CHECK(spectra.size() == 14);
    // every spectrum is sorted, symmetric with s = 1
    for (const auto& sp : spectra) {
        REQUIRE(sp.lambdas.size() == 4);
        CHECK(std::is_sorted(sp.lambdas.begin(), sp.lambdas.end()));
        CHECK(sp.lambdas[0] + sp.lambdas[3] == 1);
        CHECK(sp.lambdas[1] + sp.lambdas[2] == 1);
        for (const Rat& l : sp.lambdas) CHECK(l > 0);
    }
    // spot checks
    auto has = [&](std::vector<Rat> l) {
        for (const auto& sp : spectra)
            if (sp.lambdas == l) return true;
        return false;
    };
    CHECK(has({rat(1, 5), rat(2, 5), rat(3, 5), rat(4, 5)}));
    CHECK(has({rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)}));
    CHECK(has({rat(1, 12), rat(5, 12), rat(7, 12), rat(11, 12)}));
    CHECK(!has({rat(1, 7), rat(2, 7), rat(5, 7), rat(6, 7)})); // phi_7 has degree 6
}

TEST_CASE("integrality check") {
    CHECK(check_integrality(quintic(), 50).pass);
    // theta^4 - z(theta+1/2)^4 has A_1 = 1/16
    ThetaOperator bad = make_operator(
        {Poly::x().pow(4), Poly::linear(rat(1), rat(1, 2)).pow(4) * rat(-1)});
    IntegralityResult r = check_integrality(bad, 10);
    CHECK(!r.pass);
    CHECK(r.first_bad == 1);
}

TEST_CASE("instanton screen needs depth 20") {
    CHECK_THROWS_AS(check_instantons(yukawa_instantons(quintic(), 10)),
                    InsufficientDepth);
    CHECK(check_instantons(yukawa_instantons(quintic(), 20)));
}

TEST_CASE("classify verdict for the quintic") {
    CyVerdict v = classify(quintic(), 50, 200, 20);
    CHECK(v.c1.pass);
    CHECK(v.c2.pass);
    CHECK(v.c3.pass);
    CHECK(v.c4.pass);
    CHECK(v.c5.pass);
    CHECK(v.overall);
}

TEST_CASE("classify fails gracefully off the MUM locus") {
    Poly p0 = Poly::x().pow(2) * Poly::linear(rat(1), rat(-1)).pow(2);
    CyVerdict v = classify(make_operator({p0, Poly::one()}), 20, 20, 20);
    CHECK(!v.c1.pass);
    CHECK(!v.overall);
}

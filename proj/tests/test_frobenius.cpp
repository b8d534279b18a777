#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "cy/errors.hpp"
#include "cy/frobenius.hpp"
#include "cy/theta_op.hpp"

using namespace cy;

static ThetaOperator quintic() {
    Poly p1 = Poly::linear(rat(5), rat(1)) * Poly::linear(rat(5), rat(2)) *
              Poly::linear(rat(5), rat(3)) * Poly::linear(rat(5), rat(4)) * rat(-5);
    return make_operator({Poly::x().pow(4), p1});
}

// #25: theta^4 - 4z(2theta+1)^2(11theta^2+11theta+3) - 16z^2(2theta+3)^2(2theta+1)^2
static ThetaOperator op25() {
    Poly t1 = Poly::linear(rat(2), rat(1)).pow(2) *
              Poly(std::vector<Rat>{rat(3), rat(11), rat(11)}) * rat(-4);
    Poly t2 = Poly::linear(rat(2), rat(3)).pow(2) * Poly::linear(rat(2), rat(1)).pow(2) *
              rat(-16);
    return make_operator({Poly::x().pow(4), t1, t2});
}

TEST_CASE("holomorphic solution of the quintic") {
    PowerSeries A = holomorphic_coeffs(quintic(), 6);
    // (5n)!/n!^5
    CHECK(A.coeff(0) == 1);
    CHECK(A.coeff(1) == 120);
    CHECK(A.coeff(2) == 113400);
    CHECK(A.coeff(3) == 168168000);
    CHECK(A.coeff(4) == 305540235000);
    CHECK(A.coeff(5) == Rat("623360743125120"));
}

TEST_CASE("non-MUM operator is rejected") {
    // indicial polynomial theta^2(theta-1)^2 at 0
    Poly p0 = Poly::x().pow(2) * Poly::linear(rat(1), rat(-1)).pow(2);
    ThetaOperator bad = make_operator({p0, Poly::one()});
    CHECK(!check_mum(bad));
    CHECK_THROWS_AS(holomorphic_coeffs(bad, 5), NotMUM);
}

// dual numbers a + b*eps with eps^2 = 0, used as an independent oracle for the
// logarithmic companion solution: solve P0(n+eps) Atil_n = -sum P_i(n-i+eps)
// Atil_{n-i} over Q[eps]/(eps^2); then B_n = d/deps Atil_n at 0.
struct Dual {
    Rat a, b;
};
static Dual dmul(const Dual& x, const Dual& y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a};
}
static Dual dadd(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
static Dual ddiv(const Dual& x, const Dual& y) {
    // y.a != 0
    return {x.a / y.a, (x.b * y.a - x.a * y.b) / (y.a * y.a)};
}
static Dual deval(const Poly& p, const Dual& x) {
    Dual acc{rat(0), rat(0)};
    for (int i = p.degree(); i >= 0; --i)
        acc = dadd(dmul(acc, x), Dual{p.coeff(i), rat(0)});
    return acc;
}

static void eps_oracle_check(const ThetaOperator& D, int N) {
    FrobeniusPair pair = frobenius_pair(D, N);
    std::vector<Dual> At{{rat(1), rat(0)}};
    for (int n = 1; n < N; ++n) {
        Dual acc{rat(0), rat(0)};
        for (int i = 1; i <= D.k() && i <= n; ++i)
            acc = dadd(acc, dmul(deval(D.term(i), Dual{rat(n - i), rat(1)}),
                                 At[static_cast<size_t>(n - i)]));
        Dual p0n = deval(D.term(0), Dual{rat(n), rat(1)});
        At.push_back(ddiv(Dual{-acc.a, -acc.b}, p0n));
    }
    for (int n = 0; n < N; ++n) {
        CHECK(pair.A.coeff(n) == At[static_cast<size_t>(n)].a);
        CHECK(pair.B.coeff(n) == At[static_cast<size_t>(n)].b);
    }
}

TEST_CASE("log companion matches the eps-expansion oracle") {
    eps_oracle_check(quintic(), 21);
    eps_oracle_check(op25(), 21);
    // known value: B_1 of the quintic is 770
    CHECK(log_coeffs(quintic(), holomorphic_coeffs(quintic(), 3)).coeff(1) == 770);
}

TEST_CASE("quintic instanton numbers") {
    InstantonReport rep = yukawa_instantons(quintic(), 5);
    REQUIRE(rep.N.size() == 5);
    CHECK(rep.N[0] == 575);
    CHECK(rep.N[1] == 121850);
    CHECK(rep.N[2] == 63441275);
    CHECK(rep.N[3] == Rat("48493506000"));
    CHECK(rep.N[4] == Rat("45861177777525"));
    CHECK(rep.N0 == 1);
}

TEST_CASE("Lambert inversion round trip") {
    // re-sum the extracted N_d into the coupling coefficients
    InstantonReport rep = yukawa_instantons(quintic(), 12);
    for (int m = 1; m <= rep.depth; ++m) {
        Rat cm = 0;
        for (int d = 1; d <= m; ++d)
            if (m % d == 0)
                cm += rep.N[static_cast<size_t>(d - 1)] * rat(d) * rat(d) * rat(d);
        CHECK(cm == rep.K.coeff(m));
    }
}

TEST_CASE("fingerprint") {
    auto [n0, n1, n3] = fingerprint(yukawa_instantons(quintic(), 5));
    CHECK(n0 == 1);
    CHECK(n1 == 575);
    CHECK(n3 == 63441275);
    CHECK_THROWS_AS(fingerprint(yukawa_instantons(quintic(), 2)), InsufficientDepth);
}

TEST_CASE("power exponents of the quintic") {
    FrobeniusPair pair = frobenius_pair(quintic(), 52);
    PowerExponents pe = power_exponents(pair, mirror_map(pair), 50);
    REQUIRE(pe.r.has_value());
    CHECK(*pe.r == 10);
    CHECK(*pe.s == 4);
}

TEST_CASE("kq equivalence by rescaling witness") {
    InstantonReport r1 = yukawa_instantons(quintic(), 12);
    CHECK(kq_equivalent(r1, r1, 12) == Rat(1));
    // fabricate N'_d = N_d lambda^d
    InstantonReport r2 = r1;
    Rat lam = rat(2, 3), p = 1;
    for (auto& v : r2.N) {
        p *= lam;
        v *= p;
    }
    auto w = kq_equivalent(r1, r2, 12);
    REQUIRE(w.has_value());
    CHECK(*w == lam);
    // direction matters: the witness inverts the other way round
    auto winv = kq_equivalent(r2, r1, 12);
    REQUIRE(winv.has_value());
    CHECK(*winv == rat(3, 2));
    // inequivalent after corrupting one deep number
    InstantonReport r3 = r1;
    r3.N[7] += 1;
    CHECK(!kq_equivalent(r1, r3, 12).has_value());
    CHECK_THROWS_AS(kq_equivalent(r1, r2, 20), InsufficientDepth);
}

TEST_CASE("kq equivalence detects thinning") {
    InstantonReport r1 = yukawa_instantons(quintic(), 6);
    // fabricate K(q) -> K(q^2): N'_{2d} = N_d, zero elsewhere
    InstantonReport r2 = r1;
    r2.depth = 12;
    r2.N.assign(12, rat(0));
    for (int d = 1; d <= 6; ++d) r2.N[static_cast<size_t>(2 * d - 1)] = r1.N[static_cast<size_t>(d - 1)];
    auto w = kq_equivalent(r1, r2, 6);
    REQUIRE(w.has_value());
    CHECK(*w == 1);
}

TEST_CASE("indeterminate power exponents") {
    // trivial coupling: fabricated pair with A = 1, B/A = log-free
    std::vector<Rat> one(20, rat(0));
    one[0] = 1;
    FrobeniusPair pair{PowerSeries(one), PowerSeries(std::vector<Rat>(20, rat(0)))};
    PowerExponents pe = power_exponents(pair, mirror_map(pair), 18);
    CHECK(!pe.r.has_value());
    CHECK(!pe.s.has_value());
}

#include "cy/frobenius.hpp"

#include <algorithm>

#include "cy/criteria.hpp"
#include "cy/errors.hpp"

namespace cy {

bool check_mum(const ThetaOperator& D) {
    const Poly& p0 = D.term(0);
    if (p0.degree() != D.order()) return false;
    for (int j = 0; j < p0.degree(); ++j)
        if (p0.coeff(j) != 0) return false;
    return true;
}

PowerSeries holomorphic_coeffs(const ThetaOperator& D, int N) {
    if (!check_mum(D)) throw NotMUM("indicial equation at 0 is not lambda^n");
    const Poly& p0 = D.term(0);
    std::vector<Rat> A(static_cast<size_t>(N), rat(0));
    if (N > 0) A[0] = 1;
    for (int n = 1; n < N; ++n) {
        Rat acc = 0;
        for (int i = 1; i <= D.k() && i <= n; ++i)
            acc += D.term(i).eval(rat(n - i)) * A[static_cast<size_t>(n - i)];
        Rat p0n = p0.eval(rat(n));
        if (p0n == 0) throw VanishingP0AtPositiveInteger("P0 vanishes at n > 0");
        A[static_cast<size_t>(n)] = -acc / p0n;
    }
    return PowerSeries(std::move(A));
}

PowerSeries log_coeffs(const ThetaOperator& D, const PowerSeries& A) {
    if (!check_mum(D)) throw NotMUM("indicial equation at 0 is not lambda^n");
    const Poly& p0 = D.term(0);
    int N = A.trunc();
    std::vector<Poly> dP;
    for (int i = 0; i <= D.k(); ++i) dP.push_back(D.term(i).derivative());
    std::vector<Rat> B(static_cast<size_t>(N), rat(0));
    for (int n = 1; n < N; ++n) {
        Rat acc = 0;
        for (int i = 1; i <= D.k() && i <= n; ++i)
            acc += D.term(i).eval(rat(n - i)) * B[static_cast<size_t>(n - i)];
        for (int i = 0; i <= D.k() && i <= n; ++i)
            acc += dP[static_cast<size_t>(i)].eval(rat(n - i)) * A.coeff(n - i);
        B[static_cast<size_t>(n)] = -acc / p0.eval(rat(n));
    }
    return PowerSeries(std::move(B));
}

FrobeniusPair frobenius_pair(const ThetaOperator& D, int N) {
    PowerSeries A = holomorphic_coeffs(D, N);
    PowerSeries B = log_coeffs(D, A);
    return {std::move(A), std::move(B)};
}

PowerSeries mirror_map(const FrobeniusPair& pair) {
    return (pair.B / pair.A).exp();
}

namespace {

// beta3/beta4 - 6 as a power series; this is z * (a3(z) - 6/z)
PowerSeries pole_free_a3(const ThetaOperator& D, int n) {
    auto beta = classical_beta(D);
    auto poly_series = [n](const Poly& p) {
        std::vector<Rat> c(static_cast<size_t>(n), rat(0));
        for (int i = 0; i < n && i <= p.degree(); ++i)
            c[static_cast<size_t>(i)] = p.coeff(i);
        return PowerSeries(std::move(c));
    };
    return poly_series(beta[3]) / poly_series(beta[4]) -
           PowerSeries::constant(rat(6), n);
}

PowerSeries shift_up(const PowerSeries& f) { // z * f
    std::vector<Rat> c(static_cast<size_t>(f.trunc()) + 1, rat(0));
    for (int i = 0; i < f.trunc(); ++i) c[static_cast<size_t>(i + 1)] = f.coeff(i);
    return PowerSeries(std::move(c));
}

PowerSeries shift_down(const PowerSeries& f) { // f / z, requires f(0) = 0
    std::vector<Rat> c(f.coeffs().begin() + 1, f.coeffs().end());
    return PowerSeries(std::move(c));
}

} // namespace

InstantonReport yukawa_instantons(const ThetaOperator& D, int depth) {
    if (D.order() != 4) throw WrongOrder("instanton recipe needs order 4");
    if (!check_mum(D)) throw NotMUM("instanton recipe needs MUM at 0");
    if (!check_selfdual(D)) throw NotSelfDual("instanton recipe needs Condition 2");
    int M = depth + 2;

    FrobeniusPair pair = frobenius_pair(D, M);
    PowerSeries qz = mirror_map(pair);     // q/z in z
    PowerSeries q_of_z = shift_up(qz);     // q(z), trunc M+1
    PowerSeries z_of_q = q_of_z.reversion(); // z(q), trunc M+1
    PowerSeries R = shift_down(z_of_q);      // z(q)/q, trunc M
    PowerSeries u = z_of_q.derivative() / R; // (q dz/dq)/z, u(0) = 1

    // W(z) = z^{-3} exp(-1/2 int (a3 - 6/z) dz); carry Wt = z^3 W
    PowerSeries h = pole_free_a3(D, M);
    std::vector<Rat> integ(static_cast<size_t>(M), rat(0));
    for (int n = 1; n < M; ++n) integ[static_cast<size_t>(n)] = h.coeff(n) / rat(n);
    PowerSeries Wt = (PowerSeries(std::move(integ)) * rat(-1, 2)).exp();

    PowerSeries zq = z_of_q.truncated(M); // composition argument, zq(0) = 0
    PowerSeries y0q = pair.A.compose(zq);
    PowerSeries K = Wt.compose(zq) * u * u * u / (y0q * y0q);

    InstantonReport rep;
    rep.depth = depth;
    rep.qmap = qz;
    rep.K = K.truncated(depth + 1);
    rep.N.resize(static_cast<size_t>(depth));
    for (int m = 1; m <= depth; ++m) {
        Rat acc = K.coeff(m);
        for (int d = 1; d < m; ++d)
            if (m % d == 0) acc -= rat(d) * rat(d) * rat(d) * rep.N[static_cast<size_t>(d - 1)];
        rep.N[static_cast<size_t>(m - 1)] = acc / (rat(m) * rat(m) * rat(m));
    }
    rep.N0 = 1;
    for (const Rat& v : rep.N) rep.N0 = ilcm(rep.N0, den(v));
    return rep;
}

std::tuple<Int, Int, Int> fingerprint(const InstantonReport& report) {
    if (report.depth < 3) throw InsufficientDepth("fingerprint needs depth >= 3");
    Rat n1 = report.N[0] * report.N0;
    Rat n3 = report.N[2] * report.N0;
    return {report.N0, abs(num(n1)), abs(num(n3))};
}

namespace {

bool verify_rescale(const std::vector<Rat>& n1, const std::vector<Rat>& n2,
                    int depth, const Rat& lam) {
    Rat p = 1;
    for (int d = 1; d <= depth; ++d) {
        p *= lam;
        if (n2[static_cast<size_t>(d - 1)] != n1[static_cast<size_t>(d - 1)] * p)
            return false;
    }
    return true;
}

// n2 is n1 thinned out by factor r (N2_{r d} = N1_d, zero elsewhere)
bool verify_thinning(const std::vector<Rat>& n1, const std::vector<Rat>& n2,
                     int depth, int r) {
    for (int d = 1; d <= depth; ++d) {
        Rat expect = 0;
        if (d % r == 0) expect = n1[static_cast<size_t>(d / r - 1)];
        if (n2[static_cast<size_t>(d - 1)] != expect) return false;
    }
    return true;
}

} // namespace

std::optional<Rat> kq_equivalent(const InstantonReport& r1, const InstantonReport& r2,
                                 int depth) {
    if (r1.depth < depth || r2.depth < depth)
        throw InsufficientDepth("kq_equivalent needs both reports to depth");
    const auto& n1 = r1.N;
    const auto& n2 = r2.N;
    int first = 0; // first index d (1-based) where either is nonzero
    for (int d = 1; d <= depth; ++d)
        if (n1[static_cast<size_t>(d - 1)] != 0 || n2[static_cast<size_t>(d - 1)] != 0) {
            first = d;
            break;
        }
    if (first == 0) return rat(1); // both trivial
    if (n1[static_cast<size_t>(first - 1)] != 0 && n2[static_cast<size_t>(first - 1)] != 0) {
        Rat ratio = n2[static_cast<size_t>(first - 1)] / n1[static_cast<size_t>(first - 1)];
        Int nr, dr;
        if (iroot_exact(num(ratio), static_cast<unsigned long>(first), nr) &&
            iroot_exact(den(ratio), static_cast<unsigned long>(first), dr)) {
            Rat lam(nr, dr);
            lam.canonicalize();
            for (const Rat& cand : {lam, Rat(-lam)}) {
                if (first % 2 == 1 && cand != lam) continue;
                if (verify_rescale(n1, n2, depth, cand)) return cand;
            }
        }
    }
    for (int r = 2; r <= depth; ++r) {
        if (verify_thinning(n1, n2, depth, r)) return rat(1);
        if (verify_thinning(n2, n1, depth, r)) return rat(1);
    }
    return std::nullopt;
}

namespace {

// largest divisor s of the anchor coefficient whose s-th root is integral
std::optional<long> max_power(const PowerSeries& f, int order) {
    PowerSeries g = f.truncated(order);
    int m = 0;
    for (int i = 1; i < g.trunc(); ++i)
        if (g.coeff(i) != 0) { m = i; break; }
    if (m == 0) return std::nullopt; // constant 1: indeterminate
    if (!is_integer(g.coeff(m))) return 1;
    std::vector<Int> divs = divisors(num(g.coeff(m)));
    std::sort(divs.begin(), divs.end(), [](const Int& a, const Int& b) { return a > b; });
    for (const Int& d : divs) {
        if (!d.fits_ulong_p()) continue;
        unsigned long s = d.get_ui();
        PowerSeries root = g.nth_root(s);
        if (root.all_integral()) return static_cast<long>(s);
    }
    return 1;
}

} // namespace

PowerExponents power_exponents(const FrobeniusPair& pair, const PowerSeries& qz,
                               int order) {
    PowerExponents pe;
    pe.r = max_power(qz, order);
    pe.s = max_power(pair.A, order);
    return pe;
}

} // namespace cy

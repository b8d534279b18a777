#include "cy/theta_op.hpp"

#include <cassert>
#include <map>
#include <sstream>

#include "cy/errors.hpp"

namespace cy {

namespace {

// Stirling numbers of the second kind, S(j, m) for j, m <= n
std::vector<std::vector<Rat>> stirling2(int n) {
    std::vector<std::vector<Rat>> s(static_cast<size_t>(n) + 1,
                                    std::vector<Rat>(static_cast<size_t>(n) + 1, rat(0)));
    s[0][0] = 1;
    for (int j = 1; j <= n; ++j)
        for (int m = 1; m <= j; ++m)
            s[static_cast<size_t>(j)][static_cast<size_t>(m)] =
                s[static_cast<size_t>(j - 1)][static_cast<size_t>(m - 1)] +
                rat(m) * s[static_cast<size_t>(j - 1)][static_cast<size_t>(m)];
    return s;
}

// falling factorial theta(theta-1)...(theta-m+1)
Poly falling_factorial(int m) {
    Poly p = Poly::one();
    for (int j = 0; j < m; ++j) p = p * Poly::linear(rat(1), rat(-j));
    return p;
}

// build an operator from a slot map j -> Q_j(theta), shifting so slot 0 is nonzero
ThetaOperator from_slots(std::map<int, Poly> slots) {
    for (auto it = slots.begin(); it != slots.end();) {
        if (it->second.is_zero()) it = slots.erase(it);
        else ++it;
    }
    if (slots.empty()) throw EmptyOperator("all slots vanished");
    int lo = slots.begin()->first;
    int hi = slots.rbegin()->first;
    std::vector<Poly> terms(static_cast<size_t>(hi - lo) + 1);
    for (auto& [j, q] : slots) terms[static_cast<size_t>(j - lo)] = q;
    return normalize(make_operator(std::move(terms)));
}

} // namespace

ThetaOperator ThetaOperator::make(std::vector<Poly> terms) {
    if (terms.empty()) throw EmptyOperator("operator needs at least one term");
    if (terms.front().is_zero() || terms.back().is_zero())
        throw ZeroBoundaryTerm("P_0 and P_k must be nonzero");
    int order = 0;
    for (const auto& p : terms) order = std::max(order, p.degree());
    return ThetaOperator(std::move(terms), order);
}

ThetaOperator make_operator(std::vector<Poly> terms) {
    return ThetaOperator::make(std::move(terms));
}

PowerSeries apply(const ThetaOperator& D, const PowerSeries& f) {
    int n_out = std::max(0, f.trunc() - D.k());
    std::vector<Rat> out(static_cast<size_t>(n_out), rat(0));
    for (int n = 0; n < n_out; ++n) {
        Rat acc = 0;
        for (int i = 0; i <= D.k() && i <= n; ++i)
            acc += D.term(i).eval(rat(n - i)) * f.coeff(n - i);
        out[static_cast<size_t>(n)] = acc;
    }
    return PowerSeries(std::move(out));
}

std::vector<Poly> classical_beta(const ThetaOperator& D) {
    int n = D.order();
    auto s2 = stirling2(n);
    // z^i P_i(theta) = z^i sum_j p_{ij} sum_m S(j,m) z^m (d/dz)^m
    // so beta_m(z) = sum_i z^i sum_j p_{ij} S(j,m)
    std::vector<Poly> beta(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        std::vector<Rat> c(static_cast<size_t>(D.k()) + 1, rat(0));
        for (int i = 0; i <= D.k(); ++i) {
            Rat acc = 0;
            for (int j = m; j <= D.term(i).degree(); ++j)
                acc += D.term(i).coeff(j) * s2[static_cast<size_t>(j)][static_cast<size_t>(m)];
            c[static_cast<size_t>(i)] = acc;
        }
        beta[static_cast<size_t>(m)] = Poly(std::move(c));
    }
    return beta;
}

ClassicalForm to_classical(const ThetaOperator& D) {
    int n = D.order();
    auto beta = classical_beta(D);
    if (beta[static_cast<size_t>(n)].is_zero())
        throw DegenerateLeadingCoefficient("leading d/dz coefficient vanishes");
    ClassicalForm cf;
    Poly zn = Poly::x().pow(static_cast<unsigned>(n));
    Poly lead = zn * beta[static_cast<size_t>(n)];
    cf.a.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Poly zi = Poly::x().pow(static_cast<unsigned>(i));
        cf.a.emplace_back(zi * beta[static_cast<size_t>(i)], lead);
    }
    return cf;
}

Poly indicial(const ThetaOperator& D, IndicialPoint at) {
    if (at == IndicialPoint::Zero) return D.term(0);
    return D.term(D.k()).negate_var();
}

LocalExponents local_exponents(const ThetaOperator& D, const Point& z0) {
    Poly ind;
    if (std::holds_alternative<InfinityPoint>(z0)) {
        ind = indicial(D, IndicialPoint::Infinity);
    } else {
        Rat p = std::get<Rat>(z0);
        if (p == 0) ind = indicial(D, IndicialPoint::Zero);
        else ind = indicial(translate_mum(D, p, rat(0)), IndicialPoint::Zero);
    }
    auto rl = ind.rational_roots();
    LocalExponents out;
    out.point = z0;
    out.roots = rl.roots;
    out.residual = rl.residual;
    for (auto& [r, m] : rl.roots) out.total_multiplicity += m;
    out.total_multiplicity += std::max(0, rl.residual.degree());
    return out;
}

ThetaOperator translate_mum(const ThetaOperator& D, const Rat& z0, const Rat& a) {
    int n = D.order();
    auto beta = classical_beta(D);
    // b_m(z) = z^m beta_m(z); shift z = z0 + w
    std::vector<Poly> c(static_cast<size_t>(n) + 1);
    Poly zlin = Poly::linear(rat(1), z0); // z0 + w
    for (int m = 0; m <= n; ++m)
        c[static_cast<size_t>(m)] = zlin.pow(static_cast<unsigned>(m)) *
                                    beta[static_cast<size_t>(m)].shift(z0);
    // minimal left power of w making every w^i (d/dw)^m term expressible as w^j Q(theta)
    int s = 0;
    for (int m = 0; m <= n; ++m) {
        const Poly& cm = c[static_cast<size_t>(m)];
        if (cm.is_zero()) continue;
        int val = 0;
        while (cm.coeff(val) == 0) ++val;
        s = std::max(s, m - val);
    }
    std::map<int, Poly> slots;
    for (int m = 0; m <= n; ++m) {
        const Poly& cm = c[static_cast<size_t>(m)];
        Poly ff = falling_factorial(m);
        for (int i = 0; i <= cm.degree(); ++i) {
            if (cm.coeff(i) == 0) continue;
            int j = i + s - m;
            slots[j] = slots[j] + ff * cm.coeff(i);
        }
    }
    // conjugation: new unknown is w^{-a} times the old one
    if (a != 0)
        for (auto& [j, q] : slots) q = q.shift(a);
    return from_slots(std::move(slots));
}

ThetaOperator reflect_infinity(const ThetaOperator& D, const Rat& twist) {
    std::map<int, Poly> slots;
    int k = D.k();
    for (int i = 0; i <= k; ++i) {
        Poly q = D.term(k - i).negate_var();
        if (twist != 0) q = q.shift(twist); // Q(theta) -> Q(theta + twist) after w^{-twist} conjugation
        slots[i] = q;
    }
    return from_slots(std::move(slots));
}

ThetaOperator scale_z(const ThetaOperator& D, const Rat& lam) {
    if (lam == 0) throw ZeroScale("scale factor must be nonzero");
    std::vector<Poly> terms;
    Rat f = 1;
    for (int i = 0; i <= D.k(); ++i) {
        terms.push_back(D.term(i) * f);
        f *= lam;
    }
    return make_operator(std::move(terms));
}

ThetaOperator normalize(const ThetaOperator& D) {
    Int l = 1, g = 0;
    for (const auto& p : D.terms())
        for (const auto& coeff : p.coeffs()) {
            l = ilcm(l, den(coeff));
            g = igcd(g, num(coeff));
        }
    // scale so coefficients are integers with overall content 1
    Rat scale(l, g == 0 ? Int(1) : g);
    if (D.term(0).leading() * scale < 0) scale = -scale;
    std::vector<Poly> terms;
    for (const auto& p : D.terms()) terms.push_back(p * scale);
    return make_operator(std::move(terms));
}

ThetaOperator compose(const ThetaOperator& D1, const ThetaOperator& D2) {
    std::map<int, Poly> slots;
    for (int i = 0; i <= D1.k(); ++i)
        for (int j = 0; j <= D2.k(); ++j) {
            Poly t = D1.term(i).shift(rat(j)) * D2.term(j);
            slots[i + j] = slots[i + j] + t;
        }
    return from_slots(std::move(slots));
}

std::optional<Rat> scaling_equivalent(const ThetaOperator& D1, const ThetaOperator& D2) {
    ThetaOperator a = normalize(D1), b = normalize(D2);
    if (a.k() != b.k()) return std::nullopt;
    // overall constant from slot 0
    if (a.term(0).degree() != b.term(0).degree()) return std::nullopt;
    Rat mu = b.term(0).leading() / a.term(0).leading();
    if (!(a.term(0) * mu == b.term(0))) return std::nullopt;
    // candidate lambda from the first matching nonzero slot
    for (int i = 1; i <= a.k(); ++i) {
        if (a.term(i).is_zero() != b.term(i).is_zero()) return std::nullopt;
        if (a.term(i).is_zero()) continue;
        if (a.term(i).degree() != b.term(i).degree()) return std::nullopt;
        Rat pow = b.term(i).leading() / (a.term(i).leading() * mu);
        Int nr, dr;
        std::vector<Rat> cands;
        if (iroot_exact(num(pow), static_cast<unsigned long>(i), nr) &&
            iroot_exact(den(pow), static_cast<unsigned long>(i), dr)) {
            Rat lam(nr, dr);
            lam.canonicalize();
            cands.push_back(lam);
            if (i % 2 == 0) cands.push_back(-lam);
        }
        for (const Rat& lam : cands) {
            if (lam == 0) continue;
            if (normalize(scale_z(a, lam)) == b) return lam;
        }
        return std::nullopt;
    }
    // k = 0 or all higher slots zero: any lambda works, report 1
    return rat(1);
}

std::string ThetaOperator::to_string() const {
    std::ostringstream os;
    for (int i = 0; i <= k(); ++i) {
        if (term(i).is_zero()) continue;
        if (i > 0) os << " + ";
        if (i == 0) os << "(" << term(i).to_string("t") << ")";
        else {
            os << "z";
            if (i > 1) os << "^" << i;
            os << "*(" << term(i).to_string("t") << ")";
        }
    }
    return os.str();
}

} // namespace cy

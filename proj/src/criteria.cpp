#include "cy/criteria.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cy/errors.hpp"

namespace cy {

namespace {

long gcd_l(long a, long b) { return b == 0 ? a : gcd_l(b, a % b); }

int euler_phi(int m) {
    int out = 0;
    for (int j = 1; j <= m; ++j)
        if (gcd_l(j, m) == 1) ++out;
    return out;
}

// fractional parts of the primitive m-th roots' exponents: {j/m : gcd(j,m)=1}
std::vector<Rat> primitive_fracs(int m) {
    if (m == 1) return {rat(0)};
    std::vector<Rat> out;
    for (int j = 1; j < m; ++j)
        if (gcd_l(j, m) == 1) out.push_back(rat(j, m));
    return out;
}

Rat frac_part(const Rat& r) { return r - rfloor(r); }

// decompose fractional parts into complete primitive residue classes
std::optional<std::vector<int>> cyclo_decompose(const std::vector<Rat>& lambdas) {
    std::map<Rat, int> count;
    for (const Rat& l : lambdas) ++count[frac_part(l)];
    std::vector<int> ms;
    while (!count.empty()) {
        Rat f = count.begin()->first;
        if (den(f) > 100) return std::nullopt;
        int m = (f == 0) ? 1 : static_cast<int>(den(f).get_si());
        for (const Rat& g : primitive_fracs(m)) {
            auto it = count.find(g);
            if (it == count.end()) return std::nullopt;
            if (--it->second == 0) count.erase(it);
        }
        ms.push_back(m);
    }
    std::sort(ms.begin(), ms.end());
    return ms;
}

std::string rats_to_string(const std::vector<Rat>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << rat_to_string(v[i]);
    }
    os << "}";
    return os.str();
}

} // namespace

bool check_selfdual(const ThetaOperator& D) {
    if (D.order() != 4) throw WrongOrder("Condition 2 applies to order 4");
    ClassicalForm cf = to_classical(D);
    const RatFunc& a1 = cf.a[1];
    const RatFunc& a2 = cf.a[2];
    const RatFunc& a3 = cf.a[3];
    RatFunc a3p = a3.derivative();
    RatFunc rhs = a2 * a3 * rat(1, 2) - a3 * a3 * a3 * rat(1, 8) + a2.derivative() -
                  a3 * a3p * rat(3, 4) - a3p.derivative() * rat(1, 2);
    return a1 == rhs;
}

SpectrumAnalysis analyze_spectrum(const ThetaOperator& D) {
    SpectrumAnalysis out;
    if (D.order() != 4) {
        out.reason = "operator order is not 4";
        return out;
    }
    Poly ind = indicial(D, IndicialPoint::Infinity);
    auto rl = ind.rational_roots();
    if (rl.residual.degree() > 0) {
        out.reason = "indicial equation at infinity has non-rational roots";
        return out;
    }
    for (auto& [r, m] : rl.roots)
        for (int j = 0; j < m; ++j) out.lambdas.push_back(r);
    std::sort(out.lambdas.begin(), out.lambdas.end());
    if (out.lambdas.size() != 4) {
        out.reason = "expected 4 exponents at infinity";
        return out;
    }
    if (out.lambdas.front() <= 0) {
        out.reason = "spectrum not strictly positive: " + rats_to_string(out.lambdas);
        return out;
    }
    Rat s14 = out.lambdas[0] + out.lambdas[3];
    Rat s23 = out.lambdas[1] + out.lambdas[2];
    if (s14 != s23) {
        out.reason = "spectrum not symmetric: " + rat_to_string(s14) + " != " + rat_to_string(s23);
        return out;
    }
    out.s = s14;
    auto cyc = cyclo_decompose(out.lambdas);
    if (!cyc) {
        out.reason = "exponents are not a union of primitive residue classes";
        return out;
    }
    out.cyclo = *cyc;
    out.pass = true;
    out.reason = "spectrum " + rats_to_string(out.lambdas) + ", s = " + rat_to_string(s14);
    return out;
}

std::vector<Spectrum> enumerate_spectra(const Rat& s) {
    if (s <= 0) return {};
    // cyclotomic products of total phi-degree 4
    static const std::vector<int> pool = {1, 2, 3, 4, 5, 6, 8, 10, 12};
    std::vector<std::vector<int>> products;
    std::vector<int> cur;
    auto rec = [&](auto&& self, size_t start, int left) -> void {
        if (left == 0) {
            products.push_back(cur);
            return;
        }
        for (size_t i = start; i < pool.size(); ++i) {
            int d = euler_phi(pool[i]);
            if (d > left) continue;
            cur.push_back(pool[i]);
            self(self, i, left - d);
            cur.pop_back();
        }
    };
    rec(rec, 0, 4);

    long kmax = rfloor(s).get_si();
    std::set<std::vector<Rat>> seen;
    std::vector<Spectrum> out;
    for (const auto& prod : products) {
        std::vector<Rat> fracs;
        for (int m : prod)
            for (const Rat& f : primitive_fracs(m)) fracs.push_back(f);
        // independent integer shifts of each exponent
        std::vector<long> k(4, 0);
        auto shift = [&](auto&& self, size_t idx) -> void {
            if (idx == 4) {
                std::vector<Rat> l(4);
                for (size_t i = 0; i < 4; ++i) l[i] = fracs[i] + rat(k[i]);
                std::sort(l.begin(), l.end());
                if (l[0] <= 0) return;
                if (l[0] + l[3] != s || l[1] + l[2] != s) return;
                if (seen.insert(l).second) {
                    std::vector<int> ms(prod);
                    std::sort(ms.begin(), ms.end());
                    out.push_back({std::move(l), std::move(ms)});
                }
                return;
            }
            for (long v = 0; v <= kmax; ++v) {
                k[idx] = v;
                self(self, idx + 1);
            }
        };
        shift(shift, 0);
    }
    std::sort(out.begin(), out.end(),
              [](const Spectrum& a, const Spectrum& b) { return a.lambdas < b.lambdas; });
    return out;
}

IntegralityResult check_integrality(const ThetaOperator& D, int N) {
    PowerSeries A = holomorphic_coeffs(D, N);
    for (int n = 0; n < N; ++n)
        if (!is_integer(A.coeff(n))) return {false, n};
    return {true, -1};
}

bool check_instantons(const InstantonReport& report) {
    if (report.depth < 20) throw InsufficientDepth("instanton check needs depth >= 20");
    Int l15 = 1, l20 = 1;
    for (int d = 1; d <= 20; ++d) {
        Int dn = den(report.N[static_cast<size_t>(d - 1)]);
        if (d <= 15) l15 = ilcm(l15, dn);
        l20 = ilcm(l20, dn);
    }
    return l15 == l20 && l20 < 100;
}

CyVerdict classify(const ThetaOperator& D, int N, int M, int depth) {
    CyVerdict v;
    v.c1.pass = check_mum(D);
    v.c1.detail = v.c1.pass ? "P0 = alpha*lambda^order" : "indicial equation at 0 is not lambda^order";

    try {
        v.c2.pass = check_selfdual(D);
        v.c2.detail = v.c2.pass ? "self-duality identity holds" : "self-duality identity fails";
    } catch (const WrongOrder&) {
        v.c2.detail = "operator order is not 4";
    }

    SpectrumAnalysis sa = analyze_spectrum(D);
    v.c3.pass = sa.pass;
    v.c3.detail = sa.reason;

    int conf = std::max(N, M);
    if (v.c1.pass) {
        IntegralityResult ir = check_integrality(D, conf);
        v.c4.pass = ir.pass;
        if (ir.pass) v.c4.detail = "A_0..A_" + std::to_string(conf - 1) + " integral";
        else v.c4.detail = "first non-integral coefficient at n = " + std::to_string(ir.first_bad);
    } else {
        v.c4.detail = "skipped: Condition 1 fails";
    }

    if (v.c1.pass && v.c2.pass) {
        try {
            InstantonReport rep = yukawa_instantons(D, std::max(depth, 20));
            v.c5.pass = check_instantons(rep);
            v.c5.detail = v.c5.pass ? "denominator lcm stable, N0 = " + rep.N0.get_str()
                                    : "instanton denominators unstable or lcm >= 100";
        } catch (const Error& e) {
            v.c5.detail = std::string("instanton recipe failed: ") + e.what();
        }
    } else {
        v.c5.detail = "skipped: Conditions 1-2 must hold";
    }

    v.overall = v.c1.pass && v.c2.pass && v.c3.pass && v.c4.pass && v.c5.pass;
    return v;
}

} // namespace cy

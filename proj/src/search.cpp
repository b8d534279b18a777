#include "cy/search.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "cy/criteria.hpp"
#include "cy/errors.hpp"
#include "cy/frobenius.hpp"
#include "cy/ratfunc.hpp"

namespace cy {

Family family_from_string(const std::string& s) {
    if (s == "had2") return Family::had2;
    if (s == "had3") return Family::had3;
    if (s == "gen4") return Family::gen4;
    if (s == "fact4") return Family::fact4;
    throw InvalidSpectrumParams("unknown family '" + s + "'");
}

std::string family_to_string(Family f) {
    switch (f) {
        case Family::had2: return "had2";
        case Family::had3: return "had3";
        case Family::gen4: return "gen4";
        case Family::fact4: return "fact4";
    }
    return "?";
}

namespace {

Rat getp(const FamilyPoint& pt, const std::string& name, const Rat& def) {
    auto it = pt.params.find(name);
    return it == pt.params.end() ? def : it->second;
}

Rat getp(const FamilyPoint& pt, const std::string& name) {
    auto it = pt.params.find(name);
    if (it == pt.params.end())
        throw InvalidSpectrumParams("missing parameter '" + name + "'");
    return it->second;
}

// (v theta + u)(x theta + w)(x theta + 2x - w)(v theta + 2v - u)
Poly spectrum_quartic(const Rat& u, const Rat& v, const Rat& w, const Rat& x) {
    if (v <= 0 || x <= 0 || u <= 0 || w <= 0 || u >= 2 * v || w >= 2 * x)
        throw InvalidSpectrumParams("spectrum exponents must lie in (0, 2)");
    return Poly::linear(v, u) * Poly::linear(x, w) * Poly::linear(x, 2 * x - w) *
           Poly::linear(v, 2 * v - u);
}

ThetaOperator build(std::vector<Poly> terms) {
    while (terms.size() > 1 && terms.back().is_zero()) terms.pop_back();
    return make_operator(std::move(terms));
}

} // namespace

ThetaOperator family_instantiate(const FamilyPoint& point) {
    Rat A = getp(point, "A"), B = getp(point, "B");
    Rat c = getp(point, "c", rat(1)), d = getp(point, "d", rat(0));
    Poly th = Poly::x();
    switch (point.family) {
        case Family::had2: {
            Poly p1 = Poly(std::vector<Rat>{B, A, A}) * (-c);
            Poly p2 = Poly::linear(rat(1), rat(1)).pow(2) * (-d);
            return build({th.pow(2), p1, p2});
        }
        case Family::had3: {
            Poly p1 = Poly::linear(rat(2), rat(1)) * Poly(std::vector<Rat>{B, A, A}) * (-c);
            Poly p2 = Poly::linear(rat(1), rat(1)).pow(3) * (-d);
            return build({th.pow(3), p1, p2});
        }
        case Family::gen4: {
            Rat C = getp(point, "C");
            Poly p1 = Poly(std::vector<Rat>{C, B, B + A, 2 * A, A}) * (-c);
            Poly p2 = spectrum_quartic(getp(point, "u"), getp(point, "v"),
                                       getp(point, "w"), getp(point, "x")) * (-d);
            return build({th.pow(4), p1, p2});
        }
        case Family::fact4: {
            Rat u = getp(point, "u"), v = getp(point, "v");
            Rat w = getp(point, "w"), x = getp(point, "x");
            Poly p1 = Poly::linear(v, u) * Poly::linear(v, v - u) *
                      Poly(std::vector<Rat>{B, A, A}) * (-c);
            Poly p2 = spectrum_quartic(u, v, w, x) * (-d);
            return build({th.pow(4), p1, p2});
        }
    }
    throw InvalidSpectrumParams("unknown family");
}

std::optional<FamilyPoint> rescale_cd(const FamilyPoint& point, int N,
                                      const std::vector<long>& primes) {
    Rat c = getp(point, "c", rat(1));
    if (c == 0) return std::nullopt;
    Rat d0 = getp(point, "d", rat(0)) / (c * c);
    FamilyPoint unit = point;
    unit.params["c"] = rat(1);
    unit.params["d"] = d0;
    PowerSeries A = holomorphic_coeffs(family_instantiate(unit), N + 1);
    // minimal lambda with lambda^n * A_n integral: v_p(lambda) = max ceil(v_p(den)/n)
    std::map<long, long> vp;
    for (int n = 1; n <= N; ++n) {
        Int dn = den(A.coeff(n));
        for (long p : primes) {
            long e = 0;
            while (dn % p == 0) {
                dn /= p;
                ++e;
            }
            if (e > 0) vp[p] = std::max(vp[p], (e + n - 1) / n);
        }
        if (dn != 1) return std::nullopt; // denominator outside the prime list
    }
    Int lam = 1;
    for (auto [p, e] : vp) lam *= ipow(Int(p), static_cast<unsigned long>(e));
    FamilyPoint out = unit;
    out.params["c"] = Rat(lam);
    out.params["d"] = Rat(lam) * Rat(lam) * d0;
    return out;
}

std::vector<Candidate> sweep_step1(const SweepConfig& cfg, int jobs) {
    // lexicographic point enumeration: A, B, (C), c, then d by (p,q,r,t)
    std::vector<Rat> dvals;
    for (int p = 0; p <= cfg.pmax; ++p)
        for (int q = 0; q <= cfg.qmax; ++q)
            for (int r = 0; r <= cfg.rmax; ++r)
                for (int t = 0; t <= cfg.tmax; ++t)
                    dvals.push_back(Rat(ipow(Int(2), static_cast<unsigned long>(p)) *
                                        ipow(Int(3), static_cast<unsigned long>(q)) *
                                        ipow(Int(5), static_cast<unsigned long>(r)) *
                                        ipow(Int(7), static_cast<unsigned long>(t))));
    bool has_C = cfg.family == Family::gen4;
    std::vector<FamilyPoint> points;
    for (long a = cfg.A.lo; a <= cfg.A.hi; ++a)
        for (long b = cfg.B.lo; b <= cfg.B.hi; ++b)
            for (long cc = has_C ? cfg.C.lo : 0; cc <= (has_C ? cfg.C.hi : 0); ++cc)
                for (long cv : cfg.c_values)
                    for (const Rat& dv : dvals) {
                        FamilyPoint pt;
                        pt.family = cfg.family;
                        pt.params["A"] = rat(a);
                        pt.params["B"] = rat(b);
                        if (has_C) pt.params["C"] = rat(cc);
                        pt.params["c"] = rat(cv);
                        pt.params["d"] = dv;
                        if (cfg.family == Family::gen4 || cfg.family == Family::fact4) {
                            pt.params["u"] = cfg.u;
                            pt.params["v"] = cfg.v;
                            pt.params["w"] = cfg.w;
                            pt.params["x"] = cfg.x;
                        }
                        points.push_back(std::move(pt));
                    }

    std::vector<std::optional<Candidate>> results(points.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= points.size()) return;
            try {
                auto rescaled = rescale_cd(points[i], cfg.N);
                if (!rescaled) continue;
                ThetaOperator op = family_instantiate(*rescaled);
                if (!holomorphic_coeffs(op, cfg.M).all_integral()) continue;
                results[i] = Candidate{*rescaled, normalize(op), false, std::nullopt};
            } catch (const Error&) {
                // degenerate point; skip
            }
        }
    };
    int nthreads = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // canonical order with duplicates (same operator after normalize) removed
    std::vector<Candidate> out;
    std::set<std::string> seen;
    for (auto& r : results) {
        if (!r) continue;
        if (seen.insert(r->op.to_string()).second) out.push_back(std::move(*r));
    }
    return out;
}

namespace {

// theta(N / B^m) = z (N' B - m N B') / B^{m+1}
Poly theta_num(const Poly& N, int m, const Poly& B, const Poly& Bprime) {
    return Poly::x() * (N.derivative() * B - N * Bprime * rat(m));
}

// numerator of (sum_i z^i S_i(theta)) applied to N0 / B^j, over B^{j+n}
Poly apply_shifted(const std::vector<Poly>& S, int n, const Poly& N0, int j,
                   const Poly& B, const Poly& Bprime) {
    Poly total;
    Poly zi = Poly::one();
    for (size_t i = 0; i < S.size(); ++i) {
        Poly acc;
        Poly cur = N0;
        int e = j;
        for (int m = 0; m <= S[i].degree(); ++m) {
            if (S[i].coeff(m) != 0)
                acc = acc + cur * S[i].coeff(m) *
                          B.pow(static_cast<unsigned>(j + n - e));
            cur = theta_num(cur, e, B, Bprime);
            ++e;
        }
        total = total + zi * acc;
        zi = zi * Poly::x();
    }
    return total;
}

bool nullspace_nontrivial(std::vector<std::vector<Rat>>& m, size_t cols,
                          std::vector<Rat>& out) {
    size_t rows = m.size(), r = 0;
    std::vector<size_t> pivot_col;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        out.assign(cols, rat(0));
        out[free_c] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            out[pivot_col[i]] = -m[i][free_c];
        return true;
    }
    return false;
}

} // namespace

bool has_first_order_right_factor(const ThetaOperator& D, int search_bound) {
    int n = D.order();
    Poly Bp = classical_beta(D)[static_cast<size_t>(n)].primitive();
    int jmax = Bp.degree() > 0 ? 2 * n : 0;
    std::vector<Rat> alphas;
    for (auto& [r, m] : D.term(0).rational_roots().roots) alphas.push_back(r);
    Poly Bprime = Bp.derivative();
    for (const Rat& alpha : alphas) {
        std::vector<Poly> shifted;
        for (const Poly& p : D.terms()) shifted.push_back(p.shift(alpha));
        for (int j = 0; j <= jmax; ++j) {
            // all images of the basis z^t / B^j share the denominator B^{j+n}
            std::vector<Poly> image;
            int maxdeg = 0;
            for (int t = 0; t <= search_bound; ++t) {
                Poly num = apply_shifted(shifted, n,
                                         Poly::x().pow(static_cast<unsigned>(t)), j,
                                         Bp, Bprime);
                maxdeg = std::max(maxdeg, num.degree());
                image.push_back(std::move(num));
            }
            size_t cols = static_cast<size_t>(search_bound) + 1;
            std::vector<std::vector<Rat>> m(static_cast<size_t>(maxdeg) + 1,
                                            std::vector<Rat>(cols, rat(0)));
            for (size_t t = 0; t < cols; ++t)
                for (int g = 0; g <= image[t].degree(); ++g)
                    m[static_cast<size_t>(g)][t] = image[t].coeff(g);
            std::vector<Rat> sol;
            if (!nullspace_nontrivial(m, cols, sol)) continue;
            // confirm: the solved numerator really is annihilated
            if (apply_shifted(shifted, n, Poly(sol), j, Bp, Bprime).is_zero())
                return true;
        }
    }
    return false;
}

std::vector<Candidate> filter_step2(std::vector<Candidate> cands, int depth) {
    std::vector<Candidate> out;
    for (auto& c : cands) {
        try {
            InstantonReport rep = yukawa_instantons(c.op, std::max(depth, 20));
            if (!check_instantons(rep)) continue;
            if (has_first_order_right_factor(c.op)) continue;
            c.step2_pass = true;
            c.fp = fingerprint(rep);
            out.push_back(std::move(c));
        } catch (const Error&) {
            // recipe failed; drop the candidate
        }
    }
    return out;
}

} // namespace cy

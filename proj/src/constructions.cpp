#include "cy/constructions.hpp"

#include <map>

namespace cy {

PowerSeries hadamard_series(const PowerSeries& f, const PowerSeries& g) {
    return PowerSeries::hadamard(f, g);
}

namespace {

// one nullspace vector of the (rows x cols) system, or empty if trivial only
std::vector<Rat> nullspace_vector(std::vector<std::vector<Rat>> m, size_t cols) {
    size_t rows = m.size();
    std::vector<size_t> pivot_col;
    size_t r = 0;
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
    // first free column gives a nullspace vector
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rat> v(cols, rat(0));
        v[free_c] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -m[i][free_c];
        return v;
    }
    return {};
}

} // namespace

std::optional<ThetaOperator> fit_operator(const PowerSeries& A, const FitSpec& spec) {
    for (int total = 0; total <= spec.max_order + spec.max_degree; ++total) {
        for (int rho = 0; rho <= std::min(total, spec.max_order); ++rho) {
            int delta = total - rho;
            if (delta > spec.max_degree) continue;
            size_t cols = static_cast<size_t>(rho + 1) * static_cast<size_t>(delta + 1);
            if (A.trunc() < static_cast<int>(cols) + spec.guard + delta) continue;
            // unknowns q_{i,j} (z^i theta^j); equation per reportable coefficient:
            // sum_{i,j} q_{i,j} (n-i)^j A_{n-i} = 0
            int n_eqs = A.trunc() - delta;
            std::vector<std::vector<Rat>> m(
                static_cast<size_t>(n_eqs), std::vector<Rat>(cols, rat(0)));
            for (int n = 0; n < n_eqs; ++n) {
                for (int i = 0; i <= delta && i <= n; ++i) {
                    Rat base = rat(n - i);
                    Rat p = A.coeff(n - i);
                    for (int j = 0; j <= rho; ++j) {
                        m[static_cast<size_t>(n)][static_cast<size_t>(i * (rho + 1) + j)] = p;
                        p *= base;
                    }
                }
            }
            std::vector<Rat> v = nullspace_vector(std::move(m), cols);
            if (v.empty()) continue;
            std::map<int, Poly> nonzero;
            for (int i = 0; i <= delta; ++i) {
                std::vector<Rat> c(v.begin() + i * (rho + 1),
                                   v.begin() + (i + 1) * (rho + 1));
                Poly q{std::move(c)};
                if (!q.is_zero()) nonzero[i] = std::move(q);
            }
            if (nonzero.empty()) continue;
            int lo = nonzero.begin()->first, hi = nonzero.rbegin()->first;
            std::vector<Poly> terms(static_cast<size_t>(hi - lo) + 1);
            for (auto& [i, q] : nonzero) terms[static_cast<size_t>(i - lo)] = std::move(q);
            ThetaOperator op = normalize(make_operator(std::move(terms)));
            if (apply(op, A).is_zero()) return op;
        }
    }
    return std::nullopt;
}

} // namespace cy

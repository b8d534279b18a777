#include "cy/series.hpp"

#include <cassert>
#include <sstream>

#include "cy/errors.hpp"

namespace cy {

PowerSeries PowerSeries::constant(const Rat& c, int n) {
    std::vector<Rat> v(static_cast<size_t>(n), rat(0));
    if (n > 0) v[0] = c;
    return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::identity(int n) {
    std::vector<Rat> v(static_cast<size_t>(n), rat(0));
    if (n > 1) v[1] = rat(1);
    return PowerSeries(std::move(v));
}

bool PowerSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

PowerSeries PowerSeries::truncated(int n) const {
    if (n >= trunc()) return *this;
    return PowerSeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + n));
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    int n = std::min(trunc(), o.trunc());
    std::vector<Rat> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)] + o.coeffs_[static_cast<size_t>(i)];
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const { return *this + (-o); }

PowerSeries PowerSeries::operator-() const {
    std::vector<Rat> c(coeffs_);
    for (auto& v : c) v = -v;
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    int n = std::min(trunc(), o.trunc());
    std::vector<Rat> c(static_cast<size_t>(n), rat(0));
    for (int i = 0; i < n; ++i) {
        if (coeffs_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; i + j < n; ++j)
            c[static_cast<size_t>(i + j)] += coeffs_[static_cast<size_t>(i)] * o.coeffs_[static_cast<size_t>(j)];
    }
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::operator*(const Rat& k) const {
    std::vector<Rat> c(coeffs_);
    for (auto& v : c) v *= k;
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::operator/(const PowerSeries& o) const {
    int n = std::min(trunc(), o.trunc());
    if (n == 0) return PowerSeries();
    if (o.coeff(0) == 0) throw DivisionByZeroSeries("series division by series with zero constant term");
    // forward recursion: c_n = (f_n - sum_{j<n} c_j g_{n-j}) / g_0
    std::vector<Rat> c(static_cast<size_t>(n), rat(0));
    for (int i = 0; i < n; ++i) {
        Rat acc = coeff(i);
        for (int j = 0; j < i; ++j)
            acc -= c[static_cast<size_t>(j)] * o.coeff(i - j);
        c[static_cast<size_t>(i)] = acc / o.coeff(0);
    }
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::derivative() const {
    if (trunc() <= 1) return PowerSeries();
    std::vector<Rat> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        c[i - 1] = coeffs_[i] * rat(static_cast<long>(i));
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::integrate() const {
    std::vector<Rat> c(coeffs_.size() + 1, rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        c[i + 1] = coeffs_[i] / rat(static_cast<long>(i + 1));
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::exp() const {
    int n = trunc();
    if (n == 0) return PowerSeries();
    if (coeff(0) != 0) throw BadConstantTerm("exp needs f(0) = 0");
    // g' = f' g, solved term by term
    std::vector<Rat> g(static_cast<size_t>(n), rat(0));
    g[0] = 1;
    for (int m = 1; m < n; ++m) {
        Rat acc = 0; // m * g_m = sum_{j=1..m} j * f_j * g_{m-j}
        for (int j = 1; j <= m; ++j)
            acc += rat(j) * coeff(j) * g[static_cast<size_t>(m - j)];
        g[static_cast<size_t>(m)] = acc / rat(m);
    }
    return PowerSeries(std::move(g));
}

PowerSeries PowerSeries::log() const {
    int n = trunc();
    if (n == 0) return PowerSeries();
    if (coeff(0) != 1) throw BadConstantTerm("log needs f(0) = 1");
    // (log f)' = f'/f then integrate
    PowerSeries d = derivative() / truncated(n - 1);
    PowerSeries l = d.integrate();
    return l.truncated(n);
}

PowerSeries PowerSeries::reversion() const {
    int n = trunc();
    if (n == 0) return PowerSeries();
    if (coeff(0) != 0) throw NotInvertible("reversion needs f(0) = 0");
    if (n >= 2 && coeff(1) == 0) throw NotInvertible("reversion needs f'(0) != 0");
    if (n == 1) return PowerSeries(std::vector<Rat>{rat(0)});
    // determine g term by term from f(g(q)) = q
    std::vector<Rat> g(static_cast<size_t>(n), rat(0));
    g[1] = rat(1) / coeff(1);
    for (int m = 2; m < n; ++m) {
        // compose with current partial g (unknown g_m set to 0), then correct
        PowerSeries part(std::vector<Rat>(g.begin(), g.begin() + m + 1));
        PowerSeries comp = compose(part.truncated(n)); // uses only known terms for q^m
        // f(g)_m = f_1 * g_m + (terms from lower g); with g_m = 0 we get the defect
        g[static_cast<size_t>(m)] = -comp.coeff(m) / coeff(1);
    }
    return PowerSeries(std::move(g));
}

PowerSeries PowerSeries::nth_root(unsigned long s) const {
    int n = trunc();
    if (n == 0) return PowerSeries();
    if (coeff(0) != 1) throw BadConstantTerm("nth_root needs f(0) = 1");
    assert(s >= 1);
    PowerSeries l = log();
    return (l * Rat(1, s)).exp();
}

PowerSeries PowerSeries::compose(const PowerSeries& g) const {
    int n = std::min(trunc(), g.trunc());
    if (n == 0) return PowerSeries();
    assert(g.coeff(0) == 0);
    PowerSeries gt = g.truncated(n);
    // Horner
    PowerSeries acc = PowerSeries::constant(rat(0), n);
    for (int i = trunc() - 1; i >= 0; --i) {
        acc = acc * gt;
        acc = acc + PowerSeries::constant(coeff(i), n);
    }
    return acc;
}

PowerSeries PowerSeries::hadamard(const PowerSeries& f, const PowerSeries& g) {
    int n = std::min(f.trunc(), g.trunc());
    std::vector<Rat> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = f.coeff(i) * g.coeff(i);
    return PowerSeries(std::move(c));
}

bool PowerSeries::all_integral(int* first_bad) const {
    for (int i = 0; i < trunc(); ++i) {
        if (!is_integer(coeff(i))) {
            if (first_bad) *first_bad = i;
            return false;
        }
    }
    return true;
}

std::string PowerSeries::to_string(const std::string& var, int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    bool first = true;
    for (int i = 0; i < trunc(); ++i) {
        if (coeff(i) == 0) continue;
        if (max_terms >= 0 && shown >= max_terms) { os << " + ..."; break; }
        Rat c = coeff(i);
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = abs(c);
        if (i == 0 || a != 1) os << rat_to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        ++shown;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << trunc() << ")";
    return os.str();
}

} // namespace cy

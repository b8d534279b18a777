#pragma once

#include <optional>
#include <tuple>

#include "cy/series.hpp"
#include "cy/theta_op.hpp"

namespace cy {

// holomorphic solution y0 = sum A_n z^n (A_0 = 1) and the log companion
// y1 = y0 log z + sum B_n z^n (B_0 = 0)
struct FrobeniusPair {
    PowerSeries A;
    PowerSeries B;
};

struct InstantonReport {
    PowerSeries qmap;     // q/z, constant term 1
    PowerSeries K;        // normalized coupling in q, K(0) = 1
    std::vector<Rat> N;   // N_1 .. N_depth
    Int N0;               // lcm of denominators of N_1..N_depth
    int depth = 0;
};

struct PowerExponents {
    std::optional<long> r; // nullopt = indeterminate (series is 1)
    std::optional<long> s;
};

bool check_mum(const ThetaOperator& D);

PowerSeries holomorphic_coeffs(const ThetaOperator& D, int N);

PowerSeries log_coeffs(const ThetaOperator& D, const PowerSeries& A);

FrobeniusPair frobenius_pair(const ThetaOperator& D, int N);

// q/z = exp(g / y0)
PowerSeries mirror_map(const FrobeniusPair& pair);

InstantonReport yukawa_instantons(const ThetaOperator& D, int depth);

// (N0, |N0*N1|, |N0*N3|)
std::tuple<Int, Int, Int> fingerprint(const InstantonReport& report);

// q-rescaling / thinning equivalence of two couplings; returns the witness lambda
std::optional<Rat> kq_equivalent(const InstantonReport& r1, const InstantonReport& r2,
                                 int depth);

PowerExponents power_exponents(const FrobeniusPair& pair, const PowerSeries& qz,
                               int order);

} // namespace cy

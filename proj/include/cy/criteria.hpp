#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cy/frobenius.hpp"
#include "cy/theta_op.hpp"

namespace cy {

struct SpectrumAnalysis {
    std::vector<Rat> lambdas;          // sorted roots of P_k(-lambda), with multiplicity
    std::optional<Rat> s;              // lambda1+lambda4 = lambda2+lambda3, if symmetric
    std::optional<std::vector<int>> cyclo; // cyclotomic indices m, sorted (e.g. {3,6})
    bool pass = false;
    std::string reason;
};

struct Spectrum {
    std::vector<Rat> lambdas;  // sorted, size 4
    std::vector<int> cyclo;    // sorted cyclotomic indices
};

struct ConditionResult {
    bool pass = false;
    std::string detail;
};

struct CyVerdict {
    ConditionResult c1, c2, c3, c4, c5;
    bool overall = false;
};

struct IntegralityResult {
    bool pass = false;
    int first_bad = -1; // first n with non-integral A_n, -1 when pass
};

bool check_selfdual(const ThetaOperator& D);

SpectrumAnalysis analyze_spectrum(const ThetaOperator& D);

std::vector<Spectrum> enumerate_spectra(const Rat& s);

IntegralityResult check_integrality(const ThetaOperator& D, int N);

bool check_instantons(const InstantonReport& report);

CyVerdict classify(const ThetaOperator& D, int N, int M, int depth);

} // namespace cy

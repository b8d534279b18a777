#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cy/rat.hpp"
#include "cy/theta_op.hpp"

namespace cy {

// binomial-sum formula AST: sums, binomials, factorials, harmonic numbers,
// Pochhammer symbols, integer powers
struct FormulaAst {
    enum class Kind { Num, Var, Add, Sub, Mul, Div, Neg, Pow, Call, Sum };
    Kind kind;
    Rat value;                // Num
    std::string name;         // Var / Call name / Sum loop variable
    std::vector<std::shared_ptr<const FormulaAst>> args;
    // Pow: args = {base, exponent}; Sum: args = {lo, hi, body}
};

using AstPtr = std::shared_ptr<const FormulaAst>;

AstPtr formula_parse(const std::string& text);

Rat formula_eval(const AstPtr& ast, long n);

// evaluation with an explicit environment (used by the oracle interpreter)
Rat formula_eval_env(const AstPtr& ast, std::map<std::string, Rat>& env);

// H(a) = sum_{j<=a} 1/j, H(0) = 0
Rat harmonic(long a);

Rat binomial(const Rat& a, long b);

struct VerifyResult {
    bool pass = false;
    long first_mismatch = -1;
};

// A_n of D against the formula (base cases override small n)
VerifyResult verify_entry(const ThetaOperator& D, const AstPtr& ast, int N,
                          const std::vector<std::pair<long, Rat>>& base_cases = {});

} // namespace cy

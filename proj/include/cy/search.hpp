#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cy/theta_op.hpp"

namespace cy {

enum class Family { had2, had3, gen4, fact4 };

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

struct FamilyPoint {
    Family family;
    std::map<std::string, Rat> params; // A, B, (C), c, d and u, v, w, x where used
};

struct ParamRange {
    long lo = 1, hi = 0; // empty by default
};

struct SweepConfig {
    Family family = Family::fact4;
    ParamRange A, B, C;              // C only for gen4
    std::vector<long> c_values = {1};
    int pmax = 0, qmax = 0, rmax = 0, tmax = 0; // d = 2^p 3^q 5^r 7^t
    Rat u, v, w, x;                  // spectrum parameters for gen4/fact4
    int N = 50;                      // screen length
    int M = 1000;                    // confirm length
};

struct Candidate {
    FamilyPoint point; // rescaled
    ThetaOperator op;
    bool step2_pass = false;
    std::optional<std::tuple<Int, Int, Int>> fp;
};

ThetaOperator family_instantiate(const FamilyPoint& point);

// normalize to c = 1, screen denominators over the allowed primes, and return
// the point rescaled by the minimal integralizing lambda; nullopt = reject
std::optional<FamilyPoint> rescale_cd(const FamilyPoint& point, int N,
                                      const std::vector<long>& primes = {2, 3, 5, 7});

std::vector<Candidate> sweep_step1(const SweepConfig& cfg, int jobs = 1);

bool has_first_order_right_factor(const ThetaOperator& D, int search_bound = 24);

std::vector<Candidate> filter_step2(std::vector<Candidate> cands, int depth = 20);

} // namespace cy

#pragma once

#include <span>
#include <vector>

#include "ned/core.hpp"

namespace ned {

// Scores within this distance of the optimum count as tied; true ties land
// exactly on each other, the slack only absorbs float noise.
inline constexpr double kTieEps = 1e-12;

// Symbol frequencies of a vector over a fixed alphabet. freqs[k] is an exact
// multiple of 1/denom; denom is the number of symbols counted.
struct EmpiricalDistribution {
    std::vector<double> freqs;
    long long denom = 0;
};

// occurrences of y in v; y must belong to the alphabet
int count_symbol(const FeatureVector& v, Symbol y, const Alphabet& a);

// empirical distribution of v (v non-empty, all symbols in the alphabet)
EmpiricalDistribution empirical(const FeatureVector& v, const Alphabet& a);

// (sum_k |p_k - q_k|^r)^(1/r), r >= 1; equal-length inputs
double minkowski(std::span<const double> p, std::span<const double> q, double r);

// indexes whose value is within tol of the minimum (resp. maximum); -inf
// scores are handled so a uniformly -inf profile ties everyone
std::vector<int> argmin_ties(std::span<const double> vals, double tol = kTieEps);
std::vector<int> argmax_ties(std::span<const double> vals, double tol = kTieEps);

}  // namespace ned

#pragma once

#include <vector>

#include "ned/core.hpp"

namespace ned {

// Hoeffding-style error bounds for the nearest-empirical-distribution rule.
// All of them exponentiate a separation radius eps: labels are provably
// distinguishable once every per-symbol frequency deviation stays below eps,
// and each bound charges 2*exp(-2*m*eps^2) per deviation event with m the
// relevant sample size (n for the test vector, n*t^(1/3) per training
// empirical after splitting the concatenated sample).
// Bounds are not clamped to [0,1]; small-n values above 1 are vacuous.

// positionwise average conditional distribution of one label,
// mean[y] = (1/n) sum_i p_i(y | x)
std::vector<double> mean_distribution(const SourceModel& m, Label label);

// separation radius from realized training empiricals:
// min_{i != j} ||P_hat_i - mean_j||_r / ((2 + t^(-1/3)) |Y|^(1/r))
double trained_epsilon(const SourceModel& m, const TrainingSet& ts, double r);

// two-term bound for a realized training set:
// 2|Y| e^(-2 n eps^2) + 2|Y| e^(-2 n t^(1/3) eps^2)
double trained_bound(double eps, int n, int t, int alphabet_size);

// t -> infinity limit: radius min_{i != j} ||mean_i - mean_j||_r / (2 |Y|^(1/r)),
// bound 2|Y| e^(-2 n eps^2)
double limit_epsilon(const SourceModel& m, double r);

// training-free version, worst-cased over training realizations:
// radius min ||mean_i - mean_j||_r / (2 (1 + t^(-1/3)) |Y|^(1/r)),
// bound 2|Y| e^(-2 n eps^2) + 2|X||Y| e^(-2 n t^(1/3) eps^2)
double prior_epsilon(const SourceModel& m, double r, int t);

enum class BoundKind { trained, limit, prior };

struct BoundReport {
    BoundKind kind;
    double epsilon;
    double bound;
};

BoundReport limit_bound(const SourceModel& m, double r, int n);
BoundReport prior_bound(const SourceModel& m, double r, int n, int t);

// large-n envelope of the training-free bound when the radius shrinks like
// |Y|^(-1/r) with |Y| ~ n^m: n^m * exp(-n^(1 - 2m/r)); decays iff r > 2m
double asymptotic_envelope(int n, int m, double r);

}  // namespace ned

#pragma once

#include <stdexcept>

#include "ned/baselines.hpp"
#include "ned/core.hpp"
#include "ned/harness.hpp"

namespace ned {

struct OracleOptions {
    int knn_k = 1;
    KnnMetric metric = KnnMetric::euclidean;
    bool nb_add_one = false;
};

struct InstanceTooLarge : std::runtime_error {
    explicit InstanceTooLarge(double terms);
    double term_count;
};

// Exact misclassification probability of a classifier on a model: enumerates
// every training realization and every test vector, weighting each by its
// product probability with the true label uniform over the label set. Random
// tie-breaks contribute their exact fractional mass (1 - hits/|tie set|), and
// for knn the boundary subset is averaged in closed form, so the value has no
// Monte Carlo variance at all. Guarded to |Y|^(n*t*|X|) * |Y|^n <= 1e8 terms.
double exact_error_oracle(const SourceModel& model, int t, double r, ClassifierKind kind,
                          OracleOptions opts = {});

}  // namespace ned

#pragma once

#include <utility>
#include <vector>

#include "ned/core.hpp"
#include "ned/empirical.hpp"
#include "ned/rng.hpp"

namespace ned {

// Nearest-empirical-distribution rule: the empirical distribution of the test
// vector is compared against the empirical distribution of each label's
// concatenated training data, and the label at minimum Minkowski distance
// wins. Ties within kTieEps are broken uniformly at random.
//
// Distances are evaluated by merging the test vector's sparse symbol counts
// with each label's sparse training counts, so one classification costs
// O(n log n + |X| * support) rather than O(|X| * |Y|). Per-symbol deviations
// come from the exact integer counts, every term enters the power sum
// positively, and a test vector whose empirical equals the training one gets
// distance exactly zero; agreement between truly tied labels is far inside
// the kTieEps tolerance.
class NedClassifier {
public:
    NedClassifier(const TrainingSet& ts, double r);

    Label classify(const FeatureVector& v, Rng& rng) const;

    // distance from empirical(v) to each label's training empirical, in
    // label-set order
    std::vector<double> distances(const FeatureVector& v) const;

    double r() const { return r_; }

private:
    double pow_r(double x) const;

    Alphabet alphabet_;
    LabelSet labels_;
    double r_;
    long long denom_ = 0;  // n * t, the per-label training sample size
    // per label: (symbol index, count) for every symbol the label trained on,
    // ascending index
    std::vector<std::vector<std::pair<int, long long>>> train_counts_;
};

// one-shot form of the rule above
Label ned_classify(const TrainingSet& ts, const FeatureVector& v, double r, Rng& rng);

}  // namespace ned

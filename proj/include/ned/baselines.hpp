#pragma once

#include <vector>

#include "ned/core.hpp"
#include "ned/empirical.hpp"
#include "ned/rng.hpp"

namespace ned {

// Pooled per-label symbol estimate: count of y across the label's
// concatenated training data over n*t. Numerically identical to
// empirical(concat_training(...)).freqs; add_one enables Laplace smoothing
// ((count+1)/(n*t+|Y|)), off by default.
std::vector<double> nb_estimate(const TrainingSet& ts, Label label, bool add_one = false);

// Naive Bayes with the pooled estimate used at every position: score(x) =
// sum_k log p_hat(v_k | x), log 0 = -inf. Argmax ties, including the
// all -inf profile from unseen symbols, are broken uniformly at random.
class NaiveBayesClassifier {
public:
    NaiveBayesClassifier(const TrainingSet& ts, bool add_one = false);

    Label classify(const FeatureVector& v, Rng& rng) const;
    std::vector<double> log_scores(const FeatureVector& v) const;  // label-set order

private:
    Alphabet alphabet_;
    LabelSet labels_;
    std::vector<std::vector<double>> logp_;  // per label index
};

Label nb_classify(const TrainingSet& ts, const FeatureVector& v, Rng& rng, bool add_one = false);

enum class KnnMetric { euclidean, hamming };

// squared Euclidean distance on raw symbol codes, or Hamming count; exact
// integer arithmetic so distance ties are exact
long long pair_dist2(const FeatureVector& a, const FeatureVector& b, KnnMetric metric);

// k-nearest-neighbour vote over all |X|*t training vectors. Vectors tied at
// the distance boundary are admitted uniformly at random, and vote ties are
// again broken uniformly.
class KnnClassifier {
public:
    KnnClassifier(const TrainingSet& ts, int k, KnnMetric metric = KnnMetric::euclidean);

    Label classify(const FeatureVector& v, Rng& rng) const;

private:
    LabelSet labels_;
    int n_;
    int k_;
    KnnMetric metric_;
    std::vector<FeatureVector> vectors_;  // label-major, as in the training set
    std::vector<int> owner_;              // label index per vector
};

Label knn_classify(const TrainingSet& ts, const FeatureVector& v, int k, Rng& rng,
                   KnnMetric metric = KnnMetric::euclidean);

}  // namespace ned

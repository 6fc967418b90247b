#include "ned/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ned {

std::vector<double> nb_estimate(const TrainingSet& ts, Label label, bool add_one) {
    const auto concat = concat_training(ts, label);
    std::vector<long long> counts(static_cast<size_t>(ts.alphabet().size()), 0);
    for (Symbol s : concat) ++counts[static_cast<size_t>(ts.alphabet().index_of(s))];
    const double denom = static_cast<double>(concat.size()) +
                         (add_one ? static_cast<double>(ts.alphabet().size()) : 0.0);
    std::vector<double> out(counts.size());
    for (size_t y = 0; y < counts.size(); ++y)
        out[y] = (static_cast<double>(counts[y]) + (add_one ? 1.0 : 0.0)) / denom;
    return out;
}

NaiveBayesClassifier::NaiveBayesClassifier(const TrainingSet& ts, bool add_one)
    : alphabet_(ts.alphabet()), labels_(ts.labels()) {
    if (labels_.size() < 2) throw std::invalid_argument("nb: need at least 2 labels");
    logp_.reserve(static_cast<size_t>(labels_.size()));
    for (int l = 0; l < labels_.size(); ++l) {
        const auto p = nb_estimate(ts, labels_.label(l), add_one);
        std::vector<double> lp(p.size());
        for (size_t y = 0; y < p.size(); ++y)
            lp[y] = p[y] > 0.0 ? std::log(p[y]) : -std::numeric_limits<double>::infinity();
        logp_.push_back(std::move(lp));
    }
}

std::vector<double> NaiveBayesClassifier::log_scores(const FeatureVector& v) const {
    if (v.empty()) throw std::invalid_argument("nb: empty test vector");
    std::vector<int> idx;
    idx.reserve(v.size());
    for (Symbol s : v) idx.push_back(alphabet_.index_of(s));
    std::vector<double> out(static_cast<size_t>(labels_.size()), 0.0);
    for (int l = 0; l < labels_.size(); ++l) {
        double s = 0.0;
        const auto& lp = logp_[static_cast<size_t>(l)];
        for (int k : idx) s += lp[static_cast<size_t>(k)];
        out[static_cast<size_t>(l)] = s;
    }
    return out;
}

Label NaiveBayesClassifier::classify(const FeatureVector& v, Rng& rng) const {
    const auto s = log_scores(v);
    const auto ties = argmax_ties(s, kTieEps);
    const int pick = ties.size() == 1
                         ? ties[0]
                         : ties[static_cast<size_t>(rng.below(ties.size()))];
    return labels_.label(pick);
}

Label nb_classify(const TrainingSet& ts, const FeatureVector& v, Rng& rng, bool add_one) {
    return NaiveBayesClassifier(ts, add_one).classify(v, rng);
}

long long pair_dist2(const FeatureVector& a, const FeatureVector& b, KnnMetric metric) {
    if (a.size() != b.size()) throw std::invalid_argument("knn: vector length mismatch");
    long long d = 0;
    if (metric == KnnMetric::euclidean) {
        for (size_t i = 0; i < a.size(); ++i) {
            const long long diff = static_cast<long long>(a[i]) - b[i];
            d += diff * diff;
        }
    } else {
        for (size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    }
    return d;
}

KnnClassifier::KnnClassifier(const TrainingSet& ts, int k, KnnMetric metric)
    : labels_(ts.labels()), n_(ts.n()), k_(k), metric_(metric), vectors_(ts.all()) {
    if (labels_.size() < 2) throw std::invalid_argument("knn: need at least 2 labels");
    const int total = static_cast<int>(vectors_.size());
    if (k_ < 1 || k_ > total)
        throw std::invalid_argument("knn: k must be in [1, " + std::to_string(total) + "]");
    owner_.resize(vectors_.size());
    for (size_t m = 0; m < vectors_.size(); ++m)
        owner_[m] = static_cast<int>(m / static_cast<size_t>(ts.t()));
}

Label KnnClassifier::classify(const FeatureVector& v, Rng& rng) const {
    if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("knn: test vector length must match training n");
    const size_t total = vectors_.size();
    std::vector<long long> d2(total);
    for (size_t m = 0; m < total; ++m) d2[m] = pair_dist2(v, vectors_[m], metric_);

    std::vector<int> order(total);
    for (size_t m = 0; m < total; ++m) order[m] = static_cast<int>(m);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d2[a] < d2[b]; });

    const long long boundary = d2[static_cast<size_t>(order[k_ - 1])];
    std::vector<long long> votes(static_cast<size_t>(labels_.size()), 0);
    std::vector<int> group;
    int need = k_;
    for (size_t m = 0; m < total; ++m) {
        const int idx = order[m];
        if (d2[idx] < boundary) {
            ++votes[static_cast<size_t>(owner_[idx])];
            --need;
        } else if (d2[idx] == boundary) {
            group.push_back(idx);
        }
    }
    // fill the remaining slots with a uniform subset of the boundary group
    for (int pick = 0; pick < need; ++pick) {
        const size_t j = pick + rng.below(group.size() - static_cast<size_t>(pick));
        std::swap(group[static_cast<size_t>(pick)], group[j]);
        ++votes[static_cast<size_t>(owner_[group[static_cast<size_t>(pick)]])];
    }

    std::vector<double> tally(votes.begin(), votes.end());
    const auto ties = argmax_ties(tally, 0.5);  // integer votes, exact ties
    const int pick = ties.size() == 1
                         ? ties[0]
                         : ties[static_cast<size_t>(rng.below(ties.size()))];
    return labels_.label(pick);
}

Label knn_classify(const TrainingSet& ts, const FeatureVector& v, int k, Rng& rng,
                   KnnMetric metric) {
    return KnnClassifier(ts, k, metric).classify(v, rng);
}

}  // namespace ned

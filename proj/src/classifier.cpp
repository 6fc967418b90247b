#include "ned/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ned {

NedClassifier::NedClassifier(const TrainingSet& ts, double r)
    : alphabet_(ts.alphabet()), labels_(ts.labels()), r_(r) {
    if (!(r_ >= 1.0)) throw std::invalid_argument("ned: r must be >= 1");
    if (labels_.size() < 2) throw std::invalid_argument("ned: need at least 2 labels");
    denom_ = static_cast<long long>(ts.n()) * ts.t();
    train_counts_.resize(static_cast<size_t>(labels_.size()));
    std::vector<long long> counts(static_cast<size_t>(alphabet_.size()));
    for (int l = 0; l < labels_.size(); ++l) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int c = 0; c < ts.t(); ++c)
            for (Symbol s : ts.vec(l, c)) ++counts[static_cast<size_t>(alphabet_.index_of(s))];
        auto& sup = train_counts_[static_cast<size_t>(l)];
        for (int y = 0; y < alphabet_.size(); ++y)
            if (counts[static_cast<size_t>(y)] > 0) sup.emplace_back(y, counts[static_cast<size_t>(y)]);
    }
}

double NedClassifier::pow_r(double x) const {
    if (r_ == 1.0) return x;
    if (r_ == 2.0) return x * x;
    return std::pow(x, r_);
}

std::vector<double> NedClassifier::distances(const FeatureVector& v) const {
    if (v.empty()) throw std::invalid_argument("ned: empty test vector");
    std::vector<int> idx;
    idx.reserve(v.size());
    for (Symbol s : v) idx.push_back(alphabet_.index_of(s));
    std::sort(idx.begin(), idx.end());
    // run-length encode into (symbol index, count)
    std::vector<std::pair<int, long long>> vc;
    for (size_t i = 0; i < idx.size();) {
        size_t j = i;
        while (j < idx.size() && idx[j] == idx[i]) ++j;
        vc.emplace_back(idx[i], static_cast<long long>(j - i));
        i = j;
    }

    const long long nv = static_cast<long long>(v.size());
    const double cross = static_cast<double>(nv) * static_cast<double>(denom_);
    std::vector<double> out(static_cast<size_t>(labels_.size()));
    for (int l = 0; l < labels_.size(); ++l) {
        const auto& tc = train_counts_[static_cast<size_t>(l)];
        double s = 0.0;
        size_t i = 0, j = 0;  // i walks vc, j walks tc
        while (i < vc.size() || j < tc.size()) {
            if (j == tc.size() || (i < vc.size() && vc[i].first < tc[j].first)) {
                s += pow_r(static_cast<double>(vc[i].second) / static_cast<double>(nv));
                ++i;
            } else if (i == vc.size() || tc[j].first < vc[i].first) {
                s += pow_r(static_cast<double>(tc[j].second) / static_cast<double>(denom_));
                ++j;
            } else {
                // both sides hold the symbol: deviation from exact counts
                const long long num = std::abs(vc[i].second * denom_ - tc[j].second * nv);
                if (num != 0) s += pow_r(static_cast<double>(num) / cross);
                ++i;
                ++j;
            }
        }
        if (r_ == 1.0)
            out[static_cast<size_t>(l)] = s;
        else if (r_ == 2.0)
            out[static_cast<size_t>(l)] = std::sqrt(s);
        else
            out[static_cast<size_t>(l)] = std::pow(s, 1.0 / r_);
    }
    return out;
}

Label NedClassifier::classify(const FeatureVector& v, Rng& rng) const {
    const auto d = distances(v);
    const auto ties = argmin_ties(d, kTieEps);
    const int pick = ties.size() == 1
                         ? ties[0]
                         : ties[static_cast<size_t>(rng.below(ties.size()))];
    return labels_.label(pick);
}

Label ned_classify(const TrainingSet& ts, const FeatureVector& v, double r, Rng& rng) {
    return NedClassifier(ts, r).classify(v, rng);
}

}  // namespace ned

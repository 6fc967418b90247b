#include "ned/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ned {

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw std::invalid_argument("alphabet: empty");
    contiguous_ = true;
    for (size_t i = 1; i < symbols_.size(); ++i) {
        if (symbols_[i] != symbols_[0] + static_cast<Symbol>(i)) {
            contiguous_ = false;
            break;
        }
    }
    if (!contiguous_) {
        index_.reserve(symbols_.size());
        for (size_t i = 0; i < symbols_.size(); ++i) {
            if (!index_.emplace(symbols_[i], static_cast<int>(i)).second)
                throw std::invalid_argument("alphabet: duplicate symbol " + std::to_string(symbols_[i]));
        }
    }
}

Alphabet Alphabet::range(Symbol lo, Symbol hi) {
    if (hi < lo) throw std::invalid_argument("alphabet: bad range");
    std::vector<Symbol> s;
    s.reserve(static_cast<size_t>(hi) - lo + 1);
    for (Symbol v = lo; v <= hi; ++v) s.push_back(v);
    return Alphabet(std::move(s));
}

int Alphabet::index_of(Symbol s) const {
    const int i = find(s);
    if (i < 0) throw std::invalid_argument("symbol " + std::to_string(s) + " not in alphabet");
    return i;
}

LabelSet::LabelSet(std::vector<Label> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("label set: empty");
    for (size_t i = 0; i < labels_.size(); ++i)
        for (size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j])
                throw std::invalid_argument("label set: duplicate label " + std::to_string(labels_[i]));
}

int LabelSet::find(Label l) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == l) return static_cast<int>(i);
    return -1;
}

int LabelSet::index_of(Label l) const {
    const int i = find(l);
    if (i < 0) throw std::invalid_argument("label " + std::to_string(l) + " not in label set");
    return i;
}

SourceModel::SourceModel(Alphabet alphabet, LabelSet labels, int n, std::vector<double> cond)
    : alphabet_(std::move(alphabet)), labels_(std::move(labels)), n_(n), cond_(std::move(cond)) {
    if (n_ < 1) throw std::invalid_argument("model: n must be >= 1");
    const size_t want = static_cast<size_t>(n_) * labels_.size() * alphabet_.size();
    if (cond_.size() != want)
        throw std::invalid_argument("model: cond has " + std::to_string(cond_.size()) +
                                    " entries, expected " + std::to_string(want));
    const int Y = alphabet_.size();
    for (int i = 0; i < n_; ++i) {
        for (int x = 0; x < labels_.size(); ++x) {
            const auto r = row(i, x);
            double sum = 0.0;
            for (int y = 0; y < Y; ++y) {
                const double p = r[static_cast<size_t>(y)];
                if (!(p >= 0.0) || p > 1.0)
                    throw std::invalid_argument("model: probability out of [0,1] at position " +
                                                std::to_string(i));
                sum += p;
            }
            if (std::abs(sum - 1.0) > kRowSumEps)
                throw std::invalid_argument("model: row does not sum to 1 at position " +
                                            std::to_string(i) + ", label index " + std::to_string(x));
        }
    }
    // cumulative rows for inverse-cdf sampling; force the last entry to 1 so a
    // uniform draw in [0,1) always lands inside the table
    cum_.resize(cond_.size());
    for (int i = 0; i < n_; ++i) {
        for (int x = 0; x < labels_.size(); ++x) {
            const size_t base = offset(i, x);
            double acc = 0.0;
            for (int y = 0; y < Y; ++y) {
                acc += cond_[base + static_cast<size_t>(y)];
                cum_[base + static_cast<size_t>(y)] = acc;
            }
            cum_[base + static_cast<size_t>(Y) - 1] = 1.0;
        }
    }
}

TrainingSet::TrainingSet(Alphabet alphabet, LabelSet labels, int n, int t,
                         std::vector<FeatureVector> vectors)
    : alphabet_(std::move(alphabet)), labels_(std::move(labels)), n_(n), t_(t),
      vectors_(std::move(vectors)) {
    if (n_ < 1) throw std::invalid_argument("training set: n must be >= 1");
    if (t_ < 1) throw std::invalid_argument("training set: t must be >= 1");
    const size_t want = static_cast<size_t>(labels_.size()) * t_;
    if (vectors_.size() != want)
        throw std::invalid_argument("training set: got " + std::to_string(vectors_.size()) +
                                    " vectors, expected " + std::to_string(want) +
                                    " (t per label)");
    for (const auto& v : vectors_) {
        if (v.size() != static_cast<size_t>(n_))
            throw std::invalid_argument("training set: vector length " + std::to_string(v.size()) +
                                        ", expected " + std::to_string(n_));
        for (Symbol s : v)
            if (!alphabet_.contains(s))
                throw std::invalid_argument("training set: symbol " + std::to_string(s) +
                                            " not in alphabet");
    }
}

FeatureVector concat_training(const TrainingSet& ts, Label label) {
    const int l = ts.labels().index_of(label);
    FeatureVector out;
    out.reserve(static_cast<size_t>(ts.n()) * ts.t());
    for (int c = 0; c < ts.t(); ++c) {
        const auto& v = ts.vec(l, c);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

}  // namespace ned

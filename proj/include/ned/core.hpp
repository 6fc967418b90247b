#pragma once

#include <span>
#include <unordered_map>
#include <vector>

namespace ned {

using Symbol = int;
using Label = int;

// feature vector: one symbol per position, positions are not identically
// distributed in general
using FeatureVector = std::vector<Symbol>;

// Finite ordered symbol set. The order fixes the index space shared by model
// rows and empirical distributions. Contiguous integer alphabets (the common
// case) get an O(1) lookup path.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Symbol> symbols);
    static Alphabet range(Symbol lo, Symbol hi);  // inclusive, contiguous

    int size() const { return static_cast<int>(symbols_.size()); }
    Symbol symbol(int index) const { return symbols_[static_cast<size_t>(index)]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    // index of s, or -1 when absent
    int find(Symbol s) const {
        if (contiguous_) {
            if (symbols_.empty() || s < symbols_.front() || s > symbols_.back()) return -1;
            return s - symbols_.front();
        }
        auto it = index_.find(s);
        return it == index_.end() ? -1 : it->second;
    }
    bool contains(Symbol s) const { return find(s) >= 0; }
    int index_of(Symbol s) const;  // throws std::invalid_argument when absent

    bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

private:
    std::vector<Symbol> symbols_;
    bool contiguous_ = true;
    std::unordered_map<Symbol, int> index_;  // only populated when not contiguous
};

// Ordered set of class labels.
class LabelSet {
public:
    LabelSet() = default;
    explicit LabelSet(std::vector<Label> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    Label label(int index) const { return labels_[static_cast<size_t>(index)]; }
    const std::vector<Label>& labels() const { return labels_; }

    int find(Label l) const;
    bool contains(Label l) const { return find(l) >= 0; }
    int index_of(Label l) const;  // throws when absent

    bool operator==(const LabelSet& o) const { return labels_ == o.labels_; }

private:
    std::vector<Label> labels_;
};

// Categorical source: independent positions, each with its own conditional
// distribution per label. Storage is row-major, cond[(i*|X| + x)*|Y| + y];
// cumulative rows are precomputed so sampling is a binary search. Immutable
// after construction, safe to share across threads.
class SourceModel {
public:
    SourceModel(Alphabet alphabet, LabelSet labels, int n, std::vector<double> cond);

    int n() const { return n_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const LabelSet& labels() const { return labels_; }
    int alphabet_size() const { return alphabet_.size(); }
    int num_labels() const { return labels_.size(); }

    // p(y | x) at position i, all arguments as indexes
    double prob(int position, int label_index, int symbol_index) const {
        return cond_[offset(position, label_index) + static_cast<size_t>(symbol_index)];
    }
    std::span<const double> row(int position, int label_index) const {
        return {cond_.data() + offset(position, label_index), static_cast<size_t>(alphabet_.size())};
    }
    std::span<const double> cum_row(int position, int label_index) const {
        return {cum_.data() + offset(position, label_index), static_cast<size_t>(alphabet_.size())};
    }
    const std::vector<double>& cond() const { return cond_; }

private:
    size_t offset(int position, int label_index) const {
        return (static_cast<size_t>(position) * labels_.size() + label_index) * alphabet_.size();
    }

    Alphabet alphabet_;
    LabelSet labels_;
    int n_ = 0;
    std::vector<double> cond_;
    std::vector<double> cum_;
};

// Labeled training data: exactly t vectors of length n per label, stored
// label-major (label index l owns slots [l*t, (l+1)*t)).
class TrainingSet {
public:
    TrainingSet(Alphabet alphabet, LabelSet labels, int n, int t,
                std::vector<FeatureVector> vectors);

    const Alphabet& alphabet() const { return alphabet_; }
    const LabelSet& labels() const { return labels_; }
    int n() const { return n_; }
    int t() const { return t_; }

    const FeatureVector& vec(int label_index, int copy) const {
        return vectors_[static_cast<size_t>(label_index) * t_ + copy];
    }
    const std::vector<FeatureVector>& all() const { return vectors_; }

private:
    Alphabet alphabet_;
    LabelSet labels_;
    int n_ = 0;
    int t_ = 0;
    std::vector<FeatureVector> vectors_;
};

// All t training vectors of one label joined end to end (length n*t).
FeatureVector concat_training(const TrainingSet& ts, Label label);

// shared tolerance for probability row sums
inline constexpr double kRowSumEps = 1e-12;

}  // namespace ned

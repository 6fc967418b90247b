#include "ned/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ned {

namespace {

std::vector<Label> label_ids(int m) {
    std::vector<Label> l(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) l[static_cast<size_t>(i)] = i + 1;
    return l;
}

}  // namespace

SourceModel gen_iid_model(int alphabet_size, int num_labels, int n, Rng& rng) {
    if (alphabet_size < 2) throw std::invalid_argument("iid model: alphabet_size must be >= 2");
    if (num_labels < 2) throw std::invalid_argument("iid model: num_labels must be >= 2");
    if (n < 1) throw std::invalid_argument("iid model: n must be >= 1");
    std::vector<std::vector<double>> rows(static_cast<size_t>(num_labels));
    for (int x = 0; x < num_labels; ++x) {
        auto& row = rows[static_cast<size_t>(x)];
        row.resize(static_cast<size_t>(alphabet_size));
        double sum = 0.0;
        for (double& p : row) {
            p = rng.uniform01();
            sum += p;
        }
        for (double& p : row) p /= sum;
    }
    std::vector<double> cond;
    cond.reserve(static_cast<size_t>(n) * num_labels * alphabet_size);
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < num_labels; ++x)
            cond.insert(cond.end(), rows[static_cast<size_t>(x)].begin(), rows[static_cast<size_t>(x)].end());
    return SourceModel(Alphabet::range(0, alphabet_size - 1), LabelSet(label_ids(num_labels)), n,
                       std::move(cond));
}

SourceModel gen_overlapping_model(int n) {
    if (n < 1) throw std::invalid_argument("overlapping model: n must be >= 1");
    const int Y = 2 * n + 1;
    std::vector<double> cond(static_cast<size_t>(n) * 2 * Y, 0.0);
    for (int i = 1; i <= n; ++i) {
        double* tri = cond.data() + static_cast<size_t>(i - 1) * 2 * Y;
        double* flat = tri + Y;
        const double peak2 = static_cast<double>(i + 1) * (i + 1);
        const double unif = 1.0 / static_cast<double>(2 * i + 1);
        for (int y = -i; y <= i; ++y) {
            const int k = y + n;  // symbol y sits at index y + n
            tri[k] = static_cast<double>(i + 1 - std::abs(y)) / peak2;
            flat[k] = unif;
        }
    }
    return SourceModel(Alphabet::range(-n, n), LabelSet(label_ids(2)), n, std::move(cond));
}

SourceModel gen_nonoverlapping_model(int n) {
    if (n < 1) throw std::invalid_argument("non-overlapping model: n must be >= 1");
    const int Y = (n + 1) * (n + 1) - 1;
    std::vector<double> cond(static_cast<size_t>(n) * 2 * Y, 0.0);
    for (int i = 1; i <= n; ++i) {
        double* tri = cond.data() + static_cast<size_t>(i - 1) * 2 * Y;
        double* flat = tri + Y;
        const int lo = i * i;             // window {i^2 .. (i+1)^2 - 1}
        const int centre = i * i + i;
        const double peak2 = static_cast<double>(i + 1) * (i + 1);
        const double unif = 1.0 / static_cast<double>(2 * i + 1);
        for (int s = lo; s <= (i + 1) * (i + 1) - 1; ++s) {
            const int k = s - 1;  // symbol s sits at index s - 1
            tri[k] = static_cast<double>(i + 1 - std::abs(s - centre)) / peak2;
            flat[k] = unif;
        }
    }
    return SourceModel(Alphabet::range(1, Y), LabelSet(label_ids(2)), n, std::move(cond));
}

FeatureVector sample_vector(const SourceModel& m, Label label, Rng& rng) {
    const int x = m.labels().index_of(label);
    FeatureVector v(static_cast<size_t>(m.n()));
    for (int i = 0; i < m.n(); ++i) {
        const auto cum = m.cum_row(i, x);
        const double u = rng.uniform01();
        const auto it = std::upper_bound(cum.begin(), cum.end(), u);
        const int k = static_cast<int>(it - cum.begin());
        v[static_cast<size_t>(i)] = m.alphabet().symbol(k);
    }
    return v;
}

TrainingSet sample_training(const SourceModel& m, int t, Rng& rng) {
    if (t < 1) throw std::invalid_argument("sample_training: t must be >= 1");
    std::vector<FeatureVector> vecs;
    vecs.reserve(static_cast<size_t>(m.num_labels()) * t);
    for (int l = 0; l < m.num_labels(); ++l) {
        Rng sub = rng.child(static_cast<std::uint64_t>(l));
        for (int c = 0; c < t; ++c) vecs.push_back(sample_vector(m, m.labels().label(l), sub));
    }
    return TrainingSet(m.alphabet(), m.labels(), m.n(), t, std::move(vecs));
}

}  // namespace ned

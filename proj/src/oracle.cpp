#include "ned/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "ned/classifier.hpp"
#include "ned/io.hpp"

namespace ned {

InstanceTooLarge::InstanceTooLarge(double terms)
    : std::runtime_error("oracle: instance needs about " + fmt_double(terms) +
                         " weighted terms, limit is 1e8"),
      term_count(terms) {}

namespace {

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / i;
    return r;
}

// expected output distribution of the knn vote given exact distances:
// boundary-tied vectors are admitted as a uniform random subset, which makes
// the admitted label counts multivariate hypergeometric
void knn_output_probs(const std::vector<long long>& d2, const std::vector<int>& owner, int X,
                      int k, std::vector<double>& q) {
    std::vector<int> order(d2.size());
    for (size_t m = 0; m < d2.size(); ++m) order[m] = static_cast<int>(m);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d2[a] < d2[b]; });
    const long long boundary = d2[static_cast<size_t>(order[k - 1])];

    std::vector<int> base(static_cast<size_t>(X), 0);   // votes fixed below the boundary
    std::vector<int> bcount(static_cast<size_t>(X), 0); // boundary group per label
    int need = k;
    int btotal = 0;
    for (size_t m = 0; m < d2.size(); ++m) {
        if (d2[m] < boundary) {
            ++base[static_cast<size_t>(owner[m])];
            --need;
        } else if (d2[m] == boundary) {
            ++bcount[static_cast<size_t>(owner[m])];
            ++btotal;
        }
    }

    std::fill(q.begin(), q.end(), 0.0);
    const double denom = binom(btotal, need);
    std::vector<int> takes(static_cast<size_t>(X), 0);
    std::vector<double> tally(static_cast<size_t>(X));
    // enumerate admitted-count compositions label by label
    std::function<void(int, int, double)> rec = [&](int x, int left, double w) {
        if (x == X - 1) {
            if (left > bcount[static_cast<size_t>(x)]) return;
            takes[static_cast<size_t>(x)] = left;
            w *= binom(bcount[static_cast<size_t>(x)], left);
            if (w <= 0.0) return;
            for (int i = 0; i < X; ++i)
                tally[static_cast<size_t>(i)] =
                    static_cast<double>(base[static_cast<size_t>(i)] + takes[static_cast<size_t>(i)]);
            const auto winners = argmax_ties(tally, 0.5);
            const double share = w / denom / static_cast<double>(winners.size());
            for (int win : winners) q[static_cast<size_t>(win)] += share;
            return;
        }
        const int cap = std::min(left, bcount[static_cast<size_t>(x)]);
        for (int take = 0; take <= cap; ++take) {
            takes[static_cast<size_t>(x)] = take;
            rec(x + 1, left - take, w * binom(bcount[static_cast<size_t>(x)], take));
        }
    };
    rec(0, need, 1.0);
}

}  // namespace

double exact_error_oracle(const SourceModel& model, int t, double r, ClassifierKind kind,
                          OracleOptions opts) {
    if (t < 1) throw std::invalid_argument("oracle: t must be >= 1");
    if (!(r >= 1.0)) throw std::invalid_argument("oracle: r must be >= 1");
    const int X = model.num_labels();
    const int Y = model.alphabet_size();
    const int n = model.n();
    if (X < 2) throw std::invalid_argument("oracle: need at least 2 labels");
    if (kind == ClassifierKind::knn && (opts.knn_k < 1 || opts.knn_k > X * t))
        throw std::invalid_argument("oracle: knn_k must be in [1, |X|*t]");

    const int slots = n * t * X;
    const double terms = std::pow(static_cast<double>(Y), static_cast<double>(slots)) *
                         std::pow(static_cast<double>(Y), static_cast<double>(n));
    if (!(terms <= 1e8)) throw InstanceTooLarge(terms);

    std::vector<FeatureVector> vecs(static_cast<size_t>(X) * t,
                                    FeatureVector(static_cast<size_t>(n)));
    double total = 0.0;

    // probability stack for the test vector, one running product per label
    std::vector<double> pstack(static_cast<size_t>(n + 1) * X);
    FeatureVector v(static_cast<size_t>(n));
    std::vector<double> q(static_cast<size_t>(X));

    std::function<void(int, double, const std::function<void(const FeatureVector&)>&)> rec_test =
        [&](int d, double train_w, const std::function<void(const FeatureVector&)>& fill_q) {
            if (d == n) {
                fill_q(v);  // classifier output distribution for v
                double term = 0.0;
                for (int x = 0; x < X; ++x)
                    term += pstack[static_cast<size_t>(n) * X + x] * (1.0 - q[static_cast<size_t>(x)]);
                total += train_w * term / static_cast<double>(X);
                return;
            }
            for (int j = 0; j < Y; ++j) {
                bool alive = false;
                for (int x = 0; x < X; ++x) {
                    const double p =
                        pstack[static_cast<size_t>(d) * X + x] * model.prob(d, x, j);
                    pstack[static_cast<size_t>(d + 1) * X + x] = p;
                    alive = alive || p > 0.0;
                }
                if (!alive) continue;
                v[static_cast<size_t>(d)] = model.alphabet().symbol(j);
                rec_test(d + 1, train_w, fill_q);
            }
        };

    auto eval_training = [&](double w) {
        const TrainingSet ts(model.alphabet(), model.labels(), n, t, vecs);
        for (int x = 0; x < X; ++x) pstack[static_cast<size_t>(x)] = 1.0;
        switch (kind) {
            case ClassifierKind::ned: {
                const NedClassifier cls(ts, r);
                rec_test(0, w, [&](const FeatureVector& tv) {
                    const auto d = cls.distances(tv);
                    const auto ties = argmin_ties(d, kTieEps);
                    std::fill(q.begin(), q.end(), 0.0);
                    const double share = 1.0 / static_cast<double>(ties.size());
                    for (int i : ties) q[static_cast<size_t>(i)] = share;
                });
                break;
            }
            case ClassifierKind::nb: {
                const NaiveBayesClassifier cls(ts, opts.nb_add_one);
                rec_test(0, w, [&](const FeatureVector& tv) {
                    const auto s = cls.log_scores(tv);
                    const auto ties = argmax_ties(s, kTieEps);
                    std::fill(q.begin(), q.end(), 0.0);
                    const double share = 1.0 / static_cast<double>(ties.size());
                    for (int i : ties) q[static_cast<size_t>(i)] = share;
                });
                break;
            }
            case ClassifierKind::knn: {
                std::vector<int> owner(vecs.size());
                for (size_t m = 0; m < vecs.size(); ++m)
                    owner[m] = static_cast<int>(m / static_cast<size_t>(t));
                std::vector<long long> d2(vecs.size());
                rec_test(0, w, [&](const FeatureVector& tv) {
                    for (size_t m = 0; m < vecs.size(); ++m)
                        d2[m] = pair_dist2(tv, vecs[m], opts.metric);
                    knn_output_probs(d2, owner, X, opts.knn_k, q);
                });
                break;
            }
        }
    };

    std::function<void(int, double)> rec_train = [&](int slot, double w) {
        if (slot == slots) {
            eval_training(w);
            return;
        }
        const int label = slot / (n * t);
        const int rem = slot % (n * t);
        const int pos = rem % n;
        const int vecidx = label * t + rem / n;
        for (int j = 0; j < Y; ++j) {
            const double p = model.prob(pos, label, j);
            if (p <= 0.0) continue;
            vecs[static_cast<size_t>(vecidx)][static_cast<size_t>(pos)] = model.alphabet().symbol(j);
            rec_train(slot + 1, w * p);
        }
    };
    rec_train(0, 1.0);
    return total;
}

}  // namespace ned

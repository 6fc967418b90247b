#include "ned/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ned/empirical.hpp"

namespace ned {

namespace {

// min over ordered pairs i != j of ||P_i - Q_j||_r
double min_cross_distance(const std::vector<std::vector<double>>& P,
                          const std::vector<std::vector<double>>& Q, double r) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < P.size(); ++i)
        for (size_t j = 0; j < Q.size(); ++j) {
            if (i == j) continue;
            const double d = minkowski(P[i], Q[j], r);
            if (d < best) best = d;
        }
    return best;
}

std::vector<std::vector<double>> all_means(const SourceModel& m) {
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<size_t>(m.num_labels()));
    for (int l = 0; l < m.num_labels(); ++l)
        out.push_back(mean_distribution(m, m.labels().label(l)));
    return out;
}

void check_r(double r) {
    if (!(r >= 1.0)) throw std::invalid_argument("bounds: r must be >= 1");
}

void check_two_labels(const SourceModel& m) {
    if (m.num_labels() < 2) throw std::invalid_argument("bounds: need at least 2 labels");
}

}  // namespace

std::vector<double> mean_distribution(const SourceModel& m, Label label) {
    const int x = m.labels().index_of(label);
    std::vector<double> out(static_cast<size_t>(m.alphabet_size()), 0.0);
    for (int i = 0; i < m.n(); ++i) {
        const auto r = m.row(i, x);
        for (int y = 0; y < m.alphabet_size(); ++y) out[static_cast<size_t>(y)] += r[static_cast<size_t>(y)];
    }
    const double inv = 1.0 / static_cast<double>(m.n());
    for (double& v : out) v *= inv;
    return out;
}

double trained_epsilon(const SourceModel& m, const TrainingSet& ts, double r) {
    check_r(r);
    check_two_labels(m);
    if (!(ts.alphabet() == m.alphabet()) || !(ts.labels() == m.labels()) || ts.n() != m.n())
        throw std::invalid_argument("bounds: training set does not match model");
    std::vector<std::vector<double>> emps;
    emps.reserve(static_cast<size_t>(m.num_labels()));
    for (int l = 0; l < m.num_labels(); ++l)
        emps.push_back(empirical(concat_training(ts, m.labels().label(l)), m.alphabet()).freqs);
    const double dmin = min_cross_distance(emps, all_means(m), r);
    const double denom = (2.0 + std::pow(static_cast<double>(ts.t()), -1.0 / 3.0)) *
                         std::pow(static_cast<double>(m.alphabet_size()), 1.0 / r);
    return dmin / denom;
}

double trained_bound(double eps, int n, int t, int alphabet_size) {
    if (!(eps >= 0.0)) throw std::invalid_argument("bounds: eps must be >= 0");
    if (n < 1 || t < 1 || alphabet_size < 1) throw std::invalid_argument("bounds: bad n, t or |Y|");
    const double y2 = 2.0 * static_cast<double>(alphabet_size);
    const double ne2 = 2.0 * static_cast<double>(n) * eps * eps;
    return y2 * std::exp(-ne2) + y2 * std::exp(-ne2 * std::cbrt(static_cast<double>(t)));
}

double limit_epsilon(const SourceModel& m, double r) {
    check_r(r);
    check_two_labels(m);
    const auto means = all_means(m);
    const double dmin = min_cross_distance(means, means, r);
    return dmin / (2.0 * std::pow(static_cast<double>(m.alphabet_size()), 1.0 / r));
}

double prior_epsilon(const SourceModel& m, double r, int t) {
    check_r(r);
    check_two_labels(m);
    if (t < 1) throw std::invalid_argument("bounds: t must be >= 1");
    const auto means = all_means(m);
    const double dmin = min_cross_distance(means, means, r);
    const double denom = 2.0 * (1.0 + std::pow(static_cast<double>(t), -1.0 / 3.0)) *
                         std::pow(static_cast<double>(m.alphabet_size()), 1.0 / r);
    return dmin / denom;
}

BoundReport limit_bound(const SourceModel& m, double r, int n) {
    if (n < 1) throw std::invalid_argument("bounds: n must be >= 1");
    const double eps = limit_epsilon(m, r);
    const double b = 2.0 * static_cast<double>(m.alphabet_size()) *
                     std::exp(-2.0 * static_cast<double>(n) * eps * eps);
    return {BoundKind::limit, eps, b};
}

BoundReport prior_bound(const SourceModel& m, double r, int n, int t) {
    if (n < 1) throw std::invalid_argument("bounds: n must be >= 1");
    const double eps = prior_epsilon(m, r, t);
    const double ne2 = 2.0 * static_cast<double>(n) * eps * eps;
    const double b = 2.0 * static_cast<double>(m.alphabet_size()) * std::exp(-ne2) +
                     2.0 * static_cast<double>(m.num_labels()) * static_cast<double>(m.alphabet_size()) *
                         std::exp(-ne2 * std::cbrt(static_cast<double>(t)));
    return {BoundKind::prior, eps, b};
}

double asymptotic_envelope(int n, int m, double r) {
    if (n < 1 || m < 1) throw std::invalid_argument("envelope: n and m must be >= 1");
    check_r(r);
    const double nn = static_cast<double>(n);
    return std::pow(nn, static_cast<double>(m)) *
           std::exp(-std::pow(nn, 1.0 - 2.0 * static_cast<double>(m) / r));
}

}  // namespace ned

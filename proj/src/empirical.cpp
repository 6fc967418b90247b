#include "ned/empirical.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ned {

int count_symbol(const FeatureVector& v, Symbol y, const Alphabet& a) {
    a.index_of(y);  // reject symbols outside the alphabet
    int c = 0;
    for (Symbol s : v) c += (s == y);
    return c;
}

EmpiricalDistribution empirical(const FeatureVector& v, const Alphabet& a) {
    if (v.empty()) throw std::invalid_argument("empirical: empty vector");
    std::vector<long long> counts(static_cast<size_t>(a.size()), 0);
    for (Symbol s : v) ++counts[static_cast<size_t>(a.index_of(s))];
    EmpiricalDistribution e;
    e.denom = static_cast<long long>(v.size());
    e.freqs.resize(counts.size());
    const double inv = 1.0 / static_cast<double>(e.denom);
    for (size_t k = 0; k < counts.size(); ++k) e.freqs[k] = static_cast<double>(counts[k]) * inv;
    return e;
}

double minkowski(std::span<const double> p, std::span<const double> q, double r) {
    if (p.size() != q.size()) throw std::invalid_argument("minkowski: length mismatch");
    if (!(r >= 1.0)) throw std::invalid_argument("minkowski: r must be >= 1");
    if (r == 1.0) {
        double s = 0.0;
        for (size_t k = 0; k < p.size(); ++k) s += std::abs(p[k] - q[k]);
        return s;
    }
    if (r == 2.0) {
        double s = 0.0;
        for (size_t k = 0; k < p.size(); ++k) {
            const double d = p[k] - q[k];
            s += d * d;
        }
        return std::sqrt(s);
    }
    double s = 0.0;
    for (size_t k = 0; k < p.size(); ++k) s += std::pow(std::abs(p[k] - q[k]), r);
    return std::pow(s, 1.0 / r);
}

std::vector<int> argmin_ties(std::span<const double> vals, double tol) {
    if (vals.empty()) throw std::invalid_argument("argmin_ties: empty");
    double best = vals[0];
    for (double v : vals)
        if (v < best) best = v;
    std::vector<int> out;
    for (size_t i = 0; i < vals.size(); ++i)
        if (vals[i] <= best + tol) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> argmax_ties(std::span<const double> vals, double tol) {
    if (vals.empty()) throw std::invalid_argument("argmax_ties: empty");
    double best = vals[0];
    for (double v : vals)
        if (v > best) best = v;
    std::vector<int> out;
    const bool deg = best == -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < vals.size(); ++i)
        if (deg || vals[i] >= best - tol) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace ned

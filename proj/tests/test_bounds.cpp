#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "ned/bounds.hpp"
#include "ned/datagen.hpp"

using namespace ned;

namespace {

// both labels are point masses on opposite symbols, every position
SourceModel point_mass_model(int n) {
    std::vector<double> cond;
    for (int i = 0; i < n; ++i) {
        cond.insert(cond.end(), {1.0, 0.0});   // label 1
        cond.insert(cond.end(), {0.0, 1.0});   // label 2
    }
    return SourceModel(Alphabet::range(0, 1), LabelSet(std::vector<Label>{1, 2}), n, cond);
}

TrainingSet point_mass_training(const SourceModel& m, int t) {
    Rng rng(1);
    return sample_training(m, t, rng);  // deterministic: all rows are point masses
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("mean distribution averages across positions") {
    const std::vector<double> cond{1.0, 0.0, 0.5, 0.5,    // position 1: labels 1,2
                                   0.0, 1.0, 0.5, 0.5};   // position 2
    const SourceModel m(Alphabet::range(0, 1), LabelSet(std::vector<Label>{1, 2}), 2, cond);
    const auto m1 = mean_distribution(m, 1);
    CHECK(m1[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(m1[1] == doctest::Approx(0.5).epsilon(1e-15));
    const auto m2 = mean_distribution(m, 2);
    CHECK(m2[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(mean_distribution(m, 9), std::invalid_argument);
}

TEST_CASE("separation radii on the point-mass pair") {
    const SourceModel m = point_mass_model(9);
    const TrainingSet ts = point_mass_training(m, 1);
    // every cross distance is 2 in l1; denominators 3*2, 2*2, 2*2*2
    CHECK(trained_epsilon(m, ts, 1.0) == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(limit_epsilon(m, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(prior_epsilon(m, 1.0, 1) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("two-term bound, hand values") {
    // eps = 1/3, n = 9, t = 1: both exponents are -2, so the bound is 8 e^-2
    CHECK(trained_bound(1.0 / 3, 9, 1, 2) == doctest::Approx(8.0 * std::exp(-2.0)).epsilon(1e-13));
    // t = 8 scales the training term's exponent by 2
    CHECK(trained_bound(1.0 / 3, 9, 8, 2) ==
          doctest::Approx(4.0 * std::exp(-2.0) + 4.0 * std::exp(-4.0)).epsilon(1e-13));
}

TEST_CASE("limit and prior bounds, hand values") {
    const SourceModel m8 = point_mass_model(8);
    const auto lb = limit_bound(m8, 1.0, 8);
    CHECK(lb.kind == BoundKind::limit);
    CHECK(lb.epsilon == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(lb.bound == doctest::Approx(4.0 * std::exp(-4.0)).epsilon(1e-12));

    const auto pb = prior_bound(m8, 1.0, 8, 1);
    CHECK(pb.kind == BoundKind::prior);
    CHECK(pb.epsilon == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(pb.bound == doctest::Approx(12.0 * std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("identical labels give radius zero and a vacuous bound") {
    const std::vector<double> cond{0.5, 0.5, 0.5, 0.5};
    const SourceModel m(Alphabet::range(0, 1), LabelSet(std::vector<Label>{1, 2}), 1, cond);
    CHECK(limit_epsilon(m, 2.0) == 0.0);
    CHECK(limit_bound(m, 2.0, 50).bound == doctest::Approx(4.0));   // 2|Y|
    CHECK(prior_bound(m, 2.0, 50, 3).bound == doctest::Approx(12.0));  // 2|Y| + 2|X||Y|
}

TEST_CASE("bounds are reported unclamped") {
    const SourceModel m = point_mass_model(1);
    CHECK(limit_bound(m, 1.0, 1).bound > 1.0);
}

TEST_CASE("radius shrinks as alphabets grow") {
    // wider flat supports push the per-symbol separation down
    const double e3 = limit_epsilon(gen_overlapping_model(3), 2.0);
    const double e8 = limit_epsilon(gen_overlapping_model(8), 2.0);
    CHECK(e3 > 0.0);
    CHECK(e8 > 0.0);
    CHECK(e8 < e3);
}

TEST_CASE("training set must match the model") {
    const SourceModel m = point_mass_model(3);
    const TrainingSet wrong_n(Alphabet::range(0, 1), LabelSet(std::vector<Label>{1, 2}), 2, 1,
                              {{0, 0}, {1, 1}});
    CHECK_THROWS_AS(trained_epsilon(m, wrong_n, 2.0), std::invalid_argument);
    const TrainingSet wrong_alpha(Alphabet::range(0, 2), LabelSet(std::vector<Label>{1, 2}), 3, 1,
                                  {{0, 0, 0}, {1, 1, 1}});
    CHECK_THROWS_AS(trained_epsilon(m, wrong_alpha, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(limit_epsilon(m, 0.5), std::invalid_argument);
}

TEST_CASE("asymptotic envelope values") {
    CHECK(asymptotic_envelope(16, 1, 4.0) ==
          doctest::Approx(16.0 * std::exp(-4.0)).epsilon(1e-13));
    // r = 2m collapses the exponent to n^0
    CHECK(asymptotic_envelope(3, 2, 4.0) == doctest::Approx(9.0 / std::exp(1.0)).epsilon(1e-13));
    CHECK(asymptotic_envelope(7, 3, 6.0) == doctest::Approx(343.0 / std::exp(1.0)).epsilon(1e-13));
}

TEST_CASE("envelope decays iff r exceeds 2m") {
    // r > 2m: eventually decreasing toward 0
    double prev = asymptotic_envelope(100, 1, 4.0);
    for (int n : {1000, 10000, 100000}) {
        const double cur = asymptotic_envelope(n, 1, 4.0);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(prev < 1e-100);
    // r < 2m: grows without bound
    CHECK(asymptotic_envelope(10000, 2, 3.0) > asymptotic_envelope(100, 2, 3.0));
    CHECK(asymptotic_envelope(10000, 2, 3.0) > 1e6);
}

}  // TEST_SUITE

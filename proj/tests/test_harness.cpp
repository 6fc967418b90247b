#include <doctest.h>

#include <stdexcept>

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ned/cli.hpp"
#include "ned/datagen.hpp"
#include "ned/harness.hpp"
#include "ned/io.hpp"
#include "ned/oracle.hpp"

using namespace ned;
namespace fs = std::filesystem;

namespace {

fs::path tmpdir() {
    static const fs::path d = [] {
        auto p = fs::temp_directory_path() / ("ned_tests_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return d;
}

// |X|=|Y|=2, n=2, strongly skewed rows; exact error of every classifier
// here is 0.1224 (worked out by enumerating all 16 train/test outcomes)
SourceModel skew_model() {
    const std::vector<double> cond{0.9, 0.1, 0.1, 0.9, 0.9, 0.1, 0.1, 0.9};
    return SourceModel(Alphabet::range(0, 1), LabelSet(std::vector<Label>{1, 2}), 2, cond);
}

ExperimentConfig tiny_cfg() {
    ExperimentConfig cfg;
    cfg.n_grid = {1, 3};
    cfg.reps = 6;
    cfg.tests_per_label = 4;
    cfg.alphabet_size = 3;
    cfg.seed = 77;
    return cfg;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("name parsing round trips") {
    for (Family f : {Family::iid, Family::overlap, Family::nonoverlap, Family::from_file})
        CHECK(parse_family(to_string(f)) == f);
    for (ClassifierKind c : {ClassifierKind::ned, ClassifierKind::nb, ClassifierKind::knn})
        CHECK(parse_classifier(to_string(c)) == c);
    for (KnnMetric m : {KnnMetric::euclidean, KnnMetric::hamming})
        CHECK(parse_metric(to_string(m)) == m);
    CHECK_THROWS_AS(parse_family("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_classifier("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_metric("nope"), std::invalid_argument);
}

TEST_CASE("config validation") {
    ExperimentConfig cfg = tiny_cfg();
    CHECK_NOTHROW(cfg.validate());
    cfg.n_grid = {3, 3};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = tiny_cfg();
    cfg.r = 0.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = tiny_cfg();
    cfg.classifiers = {ClassifierKind::ned, ClassifierKind::ned};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = tiny_cfg();
    cfg.family = Family::from_file;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // model_path missing
}

TEST_CASE("config json round trip, unknown keys rejected") {
    ExperimentConfig cfg = tiny_cfg();
    cfg.family = Family::overlap;
    cfg.t = 5;
    cfg.r = 1.5;
    cfg.classifiers = {ClassifierKind::ned, ClassifierKind::knn};
    cfg.knn_k = 3;
    cfg.knn_metric = KnnMetric::hamming;
    cfg.nb_add_one = true;
    cfg.out_path = "x.csv";
    const ExperimentConfig back = config_from_json(config_to_json(cfg));
    CHECK(back.family == cfg.family);
    CHECK(back.n_grid == cfg.n_grid);
    CHECK(back.t == cfg.t);
    CHECK(back.r == cfg.r);
    CHECK(back.tests_per_label == cfg.tests_per_label);
    CHECK(back.reps == cfg.reps);
    CHECK(back.classifiers == cfg.classifiers);
    CHECK(back.knn_k == cfg.knn_k);
    CHECK(back.knn_metric == cfg.knn_metric);
    CHECK(back.nb_add_one == cfg.nb_add_one);
    CHECK(back.seed == cfg.seed);
    CHECK(back.out_path == cfg.out_path);

    CHECK_THROWS_AS(config_from_json(nlohmann::json{{"repz", 3}}), std::runtime_error);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::array()), std::runtime_error);
    // defaults survive an empty object
    const ExperimentConfig dflt = config_from_json(nlohmann::json::object());
    CHECK(dflt.t == 1);
    CHECK(dflt.r == 2.0);
    CHECK(dflt.classifiers.size() == 3);
}

TEST_CASE("model json round trip") {
    const SourceModel m = skew_model();
    const fs::path p = tmpdir() / "m.json";
    save_model(m, p.string());
    const SourceModel back = load_model(p.string());
    CHECK(back.n() == m.n());
    CHECK(back.alphabet() == m.alphabet());
    CHECK(back.labels() == m.labels());
    CHECK(back.cond() == m.cond());

    auto j = model_to_json(m);
    j["cond"][0][0][0] = 0.7;  // break a row sum
    CHECK_THROWS(model_from_json(j));
    CHECK_THROWS_AS(load_model((tmpdir() / "missing.json").string()), std::runtime_error);
}

TEST_CASE("vector csv round trips") {
    const std::vector<FeatureVector> vecs{{0, -3, 7}, {2, 2, 2}};
    const fs::path p = tmpdir() / "v.csv";
    write_vectors_csv(vecs, p.string());
    CHECK(read_vectors_csv(p.string()) == vecs);

    std::ofstream(tmpdir() / "l.csv") << "1,0,1\n2,1,0\n1, 0, 0\n";
    const LabeledVectors lv = read_labeled_csv((tmpdir() / "l.csv").string());
    CHECK(lv.labels == std::vector<Label>{1, 2, 1});
    CHECK(lv.vectors == std::vector<FeatureVector>{{0, 1}, {1, 0}, {0, 0}});
}

TEST_CASE("doubles are written in shortest round-trip form") {
    CHECK(fmt_double(0.1) == "0.1");
    CHECK(fmt_double(1.0) == "1");
    CHECK(fmt_double(-2.5) == "-2.5");
    const double v = 1.0 / 3.0;
    CHECK(std::stod(fmt_double(v)) == v);
}

TEST_CASE("tiny sweep produces one row per (n, classifier)") {
    const ExperimentConfig cfg = tiny_cfg();
    const auto rows = run_experiment(cfg);
    REQUIRE(rows.size() == 6);  // 2 grid points x 3 classifiers
    for (const auto& row : rows) {
        CHECK(row.family == "iid");
        CHECK(row.error_estimate >= 0.0);
        CHECK(row.error_estimate <= 1.0);
        const double trials = double(cfg.reps) * cfg.tests_per_label * 2;
        CHECK(row.std_error ==
              doctest::Approx(std::sqrt(row.error_estimate * (1 - row.error_estimate) / trials)));
        if (row.classifier == "ned") {
            REQUIRE(row.bound_trained_mean.has_value());
            REQUIRE(row.bound_trained_min.has_value());
            REQUIRE(row.bound_trained_max.has_value());
            CHECK(*row.bound_trained_min <= *row.bound_trained_mean);
            CHECK(*row.bound_trained_mean <= *row.bound_trained_max);
            CHECK(row.bound_limit.has_value());
            CHECK(row.bound_prior.has_value());
        } else {
            CHECK(!row.bound_trained_mean.has_value());
            CHECK(!row.bound_limit.has_value());
        }
    }
    CHECK(rows[0].n == 1);
    CHECK(rows[3].n == 3);
}

TEST_CASE("sweeps are reproducible and schedule independent") {
    const ExperimentConfig cfg = tiny_cfg();
    const std::string a = csv_string(run_experiment(cfg));
    const std::string b = csv_string(run_experiment(cfg));
    CHECK(a == b);

    setenv("NED_THREADS", "1", 1);
    const std::string serial = csv_string(run_experiment(cfg));
    setenv("NED_THREADS", "4", 1);
    const std::string parallel = csv_string(run_experiment(cfg));
    unsetenv("NED_THREADS");
    CHECK(serial == a);
    CHECK(parallel == a);

    ExperimentConfig other = cfg;
    other.seed = 78;
    CHECK(csv_string(run_experiment(other)) != a);
}

TEST_CASE("csv layout") {
    const ExperimentConfig cfg = tiny_cfg();
    const auto rows = run_experiment(cfg);
    const std::string csv = csv_string(rows);
    std::istringstream is(csv);
    std::string header;
    std::getline(is, header);
    CHECK(header ==
          "family,n,t,r,classifier,error_estimate,stderr,"
          "bound_trained_mean,bound_trained_min,bound_trained_max,bound_limit,bound_prior,"
          "reps,tests_per_label,seed,"
          "bound_trained_mean_clamped,bound_limit_clamped,bound_prior_clamped");
    size_t lines = 0;
    std::string line;
    while (std::getline(is, line)) {
        ++lines;
        CHECK(std::count(line.begin(), line.end(), ',') == 17);
    }
    CHECK(lines == rows.size());
    CHECK_THROWS_AS(csv_string({}), std::invalid_argument);

    // clamped columns never exceed 1
    for (const auto& row : rows)
        if (row.bound_prior) {
            const std::string f = fmt_double(std::min(1.0, *row.bound_prior));
            CHECK(csv.find(f) != std::string::npos);
        }
}

TEST_CASE("knn_k larger than the training pool is rejected") {
    ExperimentConfig cfg = tiny_cfg();
    cfg.knn_k = 5;  // |X| t = 2
    CHECK_THROWS_AS(run_for_model(cfg, skew_model()), std::invalid_argument);
}

TEST_CASE("oracle matches a full hand enumeration") {
    const SourceModel m = skew_model();
    CHECK(exact_error_oracle(m, 1, 2.0, ClassifierKind::ned) ==
          doctest::Approx(0.1224).epsilon(1e-9));
    CHECK(exact_error_oracle(m, 1, 2.0, ClassifierKind::nb) ==
          doctest::Approx(0.1224).epsilon(1e-9));
    OracleOptions k1;
    CHECK(exact_error_oracle(m, 1, 2.0, ClassifierKind::knn, k1) ==
          doctest::Approx(0.1224).epsilon(1e-9));
}

TEST_CASE("oracle degenerate cases") {
    // indistinguishable labels: every decision is a coin flip
    const std::vector<double> flat{0.5, 0.5, 0.5, 0.5};
    const SourceModel same(Alphabet::range(0, 1), LabelSet(std::vector<Label>{1, 2}), 1, flat);
    for (ClassifierKind k : {ClassifierKind::ned, ClassifierKind::nb, ClassifierKind::knn})
        CHECK(exact_error_oracle(same, 2, 2.0, k) == doctest::Approx(0.5).epsilon(1e-12));

    // disjoint point masses: never wrong
    const std::vector<double> disj{1.0, 0.0, 0.0, 1.0};
    const SourceModel pm(Alphabet::range(0, 1), LabelSet(std::vector<Label>{1, 2}), 1, disj);
    for (ClassifierKind k : {ClassifierKind::ned, ClassifierKind::nb, ClassifierKind::knn})
        CHECK(exact_error_oracle(pm, 1, 2.0, k) == doctest::Approx(0.0));
}

TEST_CASE("oracle rejects oversized instances") {
    Rng rng(5);
    const SourceModel big = gen_iid_model(6, 2, 10, rng);
    CHECK_THROWS_AS(exact_error_oracle(big, 10, 2.0, ClassifierKind::ned), InstanceTooLarge);
    try {
        exact_error_oracle(big, 10, 2.0, ClassifierKind::ned);
    } catch (const InstanceTooLarge& e) {
        CHECK(e.term_count > 1e8);
    }
}

TEST_CASE("monte carlo agrees with the oracle") {
    const SourceModel m = skew_model();
    ExperimentConfig cfg;
    cfg.family = Family::from_file;  // label only; model passed directly
    cfg.reps = 4000;
    cfg.tests_per_label = 1;
    cfg.seed = 2026;
    const auto rows = run_for_model(cfg, m);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        // 5 sigma with a cushion for shared-training correlation
        CHECK(std::abs(row.error_estimate - 0.1224) < 0.021);
    }
}

TEST_CASE("cli rejects bad usage") {
    std::ostringstream out, err;
    CHECK(run_cli({"bogus"}, out, err) == 2);
    CHECK(run_cli({"classify"}, out, err) == 2);          // missing required
    CHECK(run_cli({"simulate", "--weird"}, out, err) == 2);
    CHECK(run_cli({"oracle", "--model", (tmpdir() / "absent.json").string()}, out, err) == 1);
    CHECK(run_cli({"simulate", "--family", "nope"}, out, err) == 2);
}

TEST_CASE("cli help exits cleanly") {
    std::ostringstream out, err;
    CHECK(run_cli({"--help"}, out, err) == 0);
    CHECK(out.str().find("simulate") != std::string::npos);
}

TEST_CASE("cli oracle and bound print values") {
    const fs::path mp = tmpdir() / "skew.json";
    save_model(skew_model(), mp.string());
    std::ostringstream out, err;
    CHECK(run_cli({"oracle", "--model", mp.string(), "--t", "1", "--classifier", "ned"}, out,
                  err) == 0);
    CHECK(std::stod(out.str()) == doctest::Approx(0.1224).epsilon(1e-9));

    std::ostringstream bout, berr;
    CHECK(run_cli({"bound", "--model", mp.string(), "--t", "1", "--r", "2"}, bout, berr) == 0);
    const std::string s = bout.str();
    CHECK(s.find("trained epsilon=") != std::string::npos);
    CHECK(s.find("limit epsilon=") != std::string::npos);
    CHECK(s.find("prior epsilon=") != std::string::npos);
}

TEST_CASE("cli classify labels obvious vectors") {
    const fs::path train = tmpdir() / "train.csv";
    const fs::path test = tmpdir() / "test.csv";
    const fs::path pred = tmpdir() / "pred.txt";
    std::ofstream(train) << "1,0,0,1\n2,5,5,4\n1,1,0,0\n2,4,5,5\n";
    std::ofstream(test) << "0,1,0\n5,4,5\n";
    std::ostringstream out, err;
    CHECK(run_cli({"classify", "--train", train.string(), "--test", test.string(), "--out",
                   pred.string()}, out, err) == 0);
    CHECK(read_file(pred.string()) == "1\n2\n");

    // same through stdout, other classifiers
    std::ostringstream o2, e2;
    CHECK(run_cli({"classify", "--train", train.string(), "--test", test.string(),
                   "--classifier", "knn", "--knn-k", "3"}, o2, e2) == 0);
    CHECK(o2.str() == "1\n2\n");
    std::ostringstream o3, e3;
    CHECK(run_cli({"classify", "--train", train.string(), "--test", test.string(),
                   "--classifier", "nb"}, o3, e3) == 0);
    CHECK(o3.str() == "1\n2\n");

    // unbalanced labels are rejected
    std::ofstream(train) << "1,0,0,1\n2,5,5,4\n1,1,0,0\n";
    std::ostringstream o4, e4;
    CHECK(run_cli({"classify", "--train", train.string(), "--test", test.string()}, o4, e4) == 2);
}

TEST_CASE("cli simulate honors config files and overrides") {
    const fs::path cfgp = tmpdir() / "cfg.json";
    const fs::path outp = tmpdir() / "sweep.csv";
    {
        ExperimentConfig cfg = tiny_cfg();
        cfg.out_path = outp.string();
        std::ofstream(cfgp) << config_to_json(cfg).dump(2);
    }
    std::ostringstream out, err;
    CHECK(run_cli({"simulate", "--config", cfgp.string()}, out, err) == 0);
    CHECK(out.str().find("wrote 6 rows") != std::string::npos);
    const std::string direct = csv_string(run_experiment([&] {
        ExperimentConfig c = tiny_cfg();
        c.out_path = outp.string();
        return c;
    }()));
    CHECK(read_file(outp.string()) == direct);

    // --reps overrides the config value, grid comes from the file
    std::ostringstream o2, e2;
    CHECK(run_cli({"simulate", "--config", cfgp.string(), "--reps", "3"}, o2, e2) == 0);
    ExperimentConfig c2 = tiny_cfg();
    c2.reps = 3;
    CHECK(read_file(outp.string()) == csv_string(run_experiment(c2)));
}

}  // TEST_SUITE

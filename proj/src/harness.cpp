#include "ned/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

#include "ned/bounds.hpp"
#include "ned/classifier.hpp"
#include "ned/datagen.hpp"
#include "ned/io.hpp"
#include "ned/rng.hpp"

namespace ned {

std::string to_string(Family f) {
    switch (f) {
        case Family::iid: return "iid";
        case Family::overlap: return "overlap";
        case Family::nonoverlap: return "nonoverlap";
        case Family::from_file: return "from-file";
    }
    return "?";
}

std::string to_string(ClassifierKind c) {
    switch (c) {
        case ClassifierKind::ned: return "ned";
        case ClassifierKind::nb: return "nb";
        case ClassifierKind::knn: return "knn";
    }
    return "?";
}

std::string to_string(KnnMetric m) {
    return m == KnnMetric::euclidean ? "euclidean" : "hamming";
}

Family parse_family(const std::string& s) {
    if (s == "iid") return Family::iid;
    if (s == "overlap") return Family::overlap;
    if (s == "nonoverlap") return Family::nonoverlap;
    if (s == "from-file") return Family::from_file;
    throw std::invalid_argument("unknown family '" + s + "'");
}

ClassifierKind parse_classifier(const std::string& s) {
    if (s == "ned") return ClassifierKind::ned;
    if (s == "nb") return ClassifierKind::nb;
    if (s == "knn") return ClassifierKind::knn;
    throw std::invalid_argument("unknown classifier '" + s + "'");
}

KnnMetric parse_metric(const std::string& s) {
    if (s == "euclidean") return KnnMetric::euclidean;
    if (s == "hamming") return KnnMetric::hamming;
    throw std::invalid_argument("unknown knn metric '" + s + "'");
}

void ExperimentConfig::validate() const {
    if (t < 1) throw std::invalid_argument("config: t must be >= 1");
    if (!(r >= 1.0)) throw std::invalid_argument("config: r must be >= 1");
    if (reps < 1) throw std::invalid_argument("config: reps must be >= 1");
    if (tests_per_label < 1) throw std::invalid_argument("config: tests_per_label must be >= 1");
    if (classifiers.empty()) throw std::invalid_argument("config: no classifiers enabled");
    for (size_t i = 0; i < classifiers.size(); ++i)
        for (size_t j = i + 1; j < classifiers.size(); ++j)
            if (classifiers[i] == classifiers[j])
                throw std::invalid_argument("config: duplicate classifier");
    const bool knn_on =
        std::find(classifiers.begin(), classifiers.end(), ClassifierKind::knn) != classifiers.end();
    if (knn_on && knn_k < 1) throw std::invalid_argument("config: knn_k must be >= 1");
    if (family == Family::from_file) {
        if (model_path.empty()) throw std::invalid_argument("config: from-file family needs model_path");
        return;
    }
    if (n_grid.empty()) throw std::invalid_argument("config: empty n grid");
    int prev = 0;
    for (int n : n_grid) {
        if (n < 1) throw std::invalid_argument("config: n must be >= 1");
        if (n <= prev) throw std::invalid_argument("config: n grid must be strictly ascending");
        prev = n;
    }
    if (family == Family::iid) {
        if (alphabet_size < 2) throw std::invalid_argument("config: alphabet_size must be >= 2");
        if (num_labels < 2) throw std::invalid_argument("config: num_labels must be >= 2");
    }
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    if (!j.is_object()) throw std::runtime_error("config json: expected an object");
    for (const auto& [key, val] : j.items()) {
        if (key == "family") cfg.family = parse_family(val.get<std::string>());
        else if (key == "n_grid") cfg.n_grid = val.get<std::vector<int>>();
        else if (key == "t") cfg.t = val.get<int>();
        else if (key == "r") cfg.r = val.get<double>();
        else if (key == "alphabet_size") cfg.alphabet_size = val.get<int>();
        else if (key == "num_labels") cfg.num_labels = val.get<int>();
        else if (key == "tests_per_label") cfg.tests_per_label = val.get<int>();
        else if (key == "reps") cfg.reps = val.get<int>();
        else if (key == "classifiers") {
            cfg.classifiers.clear();
            for (const auto& c : val) cfg.classifiers.push_back(parse_classifier(c.get<std::string>()));
        } else if (key == "knn_k") cfg.knn_k = val.get<int>();
        else if (key == "knn_metric") cfg.knn_metric = parse_metric(val.get<std::string>());
        else if (key == "nb_add_one") cfg.nb_add_one = val.get<bool>();
        else if (key == "seed") cfg.seed = val.get<std::uint64_t>();
        else if (key == "model_path") cfg.model_path = val.get<std::string>();
        else if (key == "out") cfg.out_path = val.get<std::string>();
        else throw std::runtime_error("config json: unknown key '" + key + "'");
    }
    return cfg;
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["family"] = to_string(cfg.family);
    j["n_grid"] = cfg.n_grid;
    j["t"] = cfg.t;
    j["r"] = cfg.r;
    j["alphabet_size"] = cfg.alphabet_size;
    j["num_labels"] = cfg.num_labels;
    j["tests_per_label"] = cfg.tests_per_label;
    j["reps"] = cfg.reps;
    nlohmann::json cl = nlohmann::json::array();
    for (ClassifierKind c : cfg.classifiers) cl.push_back(to_string(c));
    j["classifiers"] = std::move(cl);
    j["knn_k"] = cfg.knn_k;
    j["knn_metric"] = to_string(cfg.knn_metric);
    j["nb_add_one"] = cfg.nb_add_one;
    j["seed"] = cfg.seed;
    if (!cfg.model_path.empty()) j["model_path"] = cfg.model_path;
    if (!cfg.out_path.empty()) j["out"] = cfg.out_path;
    return j;
}

namespace {

// substream roles; every draw in a run is reachable as
// Rng(seed).child(role).child(n).child(rep)[.child(...)], independent of
// thread scheduling
enum : std::uint64_t { kModelStream = 1, kTrainStream = 2, kTestStream = 3, kTieStream = 4 };

int resolve_threads(int reps) {
    int want = 0;
    if (const char* env = std::getenv("NED_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) want = static_cast<int>(v);
    }
    if (want == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        want = hw ? static_cast<int>(hw) : 1;
    }
    return std::min(want, reps);
}

struct RepOut {
    std::vector<double> err;  // per enabled classifier, fraction of wrong labels
    double tbound = 0.0;      // trained bound for this training realization
};

RepOut run_rep(const ExperimentConfig& cfg, const SourceModel& model, int rep) {
    const Rng root(cfg.seed);
    const int n = model.n();
    Rng train_rng = root.child(kTrainStream).child(static_cast<std::uint64_t>(n))
                        .child(static_cast<std::uint64_t>(rep));
    Rng test_rng = root.child(kTestStream).child(static_cast<std::uint64_t>(n))
                       .child(static_cast<std::uint64_t>(rep));
    const TrainingSet ts = sample_training(model, cfg.t, train_rng);

    const int X = model.num_labels();
    std::vector<FeatureVector> tests;
    tests.reserve(static_cast<size_t>(X) * cfg.tests_per_label);
    for (int l = 0; l < X; ++l) {
        Rng sub = test_rng.child(static_cast<std::uint64_t>(l));
        for (int i = 0; i < cfg.tests_per_label; ++i)
            tests.push_back(sample_vector(model, model.labels().label(l), sub));
    }

    RepOut out;
    out.err.resize(cfg.classifiers.size(), 0.0);
    for (size_t ci = 0; ci < cfg.classifiers.size(); ++ci) {
        const ClassifierKind kind = cfg.classifiers[ci];
        // tie stream keyed by the classifier kind, so enabling or dropping
        // other classifiers never shifts this one's decisions
        Rng tie = root.child(kTieStream).child(static_cast<std::uint64_t>(n))
                      .child(static_cast<std::uint64_t>(rep))
                      .child(static_cast<std::uint64_t>(kind));
        long long errors = 0;
        auto tally = [&](const auto& cls) {
            size_t ti = 0;
            for (int l = 0; l < X; ++l) {
                const Label truth = model.labels().label(l);
                for (int i = 0; i < cfg.tests_per_label; ++i, ++ti)
                    errors += cls.classify(tests[ti], tie) != truth;
            }
        };
        switch (kind) {
            case ClassifierKind::ned: tally(NedClassifier(ts, cfg.r)); break;
            case ClassifierKind::nb: tally(NaiveBayesClassifier(ts, cfg.nb_add_one)); break;
            case ClassifierKind::knn: tally(KnnClassifier(ts, cfg.knn_k, cfg.knn_metric)); break;
        }
        out.err[ci] = static_cast<double>(errors) /
                      (static_cast<double>(cfg.tests_per_label) * X);
        if (kind == ClassifierKind::ned)
            out.tbound = trained_bound(trained_epsilon(model, ts, cfg.r), n, cfg.t,
                                       model.alphabet_size());
    }
    return out;
}

void check_against_model(const ExperimentConfig& cfg, const SourceModel& model) {
    if (model.num_labels() < 2) throw std::invalid_argument("run: model needs at least 2 labels");
    const bool knn_on = std::find(cfg.classifiers.begin(), cfg.classifiers.end(),
                                  ClassifierKind::knn) != cfg.classifiers.end();
    if (knn_on && cfg.knn_k > model.num_labels() * cfg.t)
        throw std::invalid_argument("run: knn_k exceeds the training set size |X|*t");
}

}  // namespace

std::vector<ResultRow> run_for_model(const ExperimentConfig& cfg, const SourceModel& model) {
    check_against_model(cfg, model);
    const int reps = cfg.reps;
    std::vector<RepOut> outs(static_cast<size_t>(reps));
    const int workers = resolve_threads(reps);
    if (workers <= 1) {
        for (int rep = 0; rep < reps; ++rep) outs[static_cast<size_t>(rep)] = run_rep(cfg, model, rep);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int rep = w; rep < reps; rep += workers)
                    outs[static_cast<size_t>(rep)] = run_rep(cfg, model, rep);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<ResultRow> rows;
    rows.reserve(cfg.classifiers.size());
    const double trials = static_cast<double>(cfg.reps) * cfg.tests_per_label * model.num_labels();
    for (size_t ci = 0; ci < cfg.classifiers.size(); ++ci) {
        const ClassifierKind kind = cfg.classifiers[ci];
        double sum = 0.0;
        for (const auto& o : outs) sum += o.err[ci];
        const double p = sum / reps;
        ResultRow row;
        row.family = to_string(cfg.family);
        row.n = model.n();
        row.t = cfg.t;
        row.r = cfg.r;
        row.classifier = to_string(kind);
        row.error_estimate = p;
        row.std_error = std::sqrt(p * (1.0 - p) / trials);
        row.reps = cfg.reps;
        row.tests_per_label = cfg.tests_per_label;
        row.seed = cfg.seed;
        if (kind == ClassifierKind::ned) {
            double mn = std::numeric_limits<double>::infinity();
            double mx = -std::numeric_limits<double>::infinity();
            double s = 0.0;
            for (const auto& o : outs) {
                s += o.tbound;
                mn = std::min(mn, o.tbound);
                mx = std::max(mx, o.tbound);
            }
            row.bound_trained_mean = s / reps;
            row.bound_trained_min = mn;
            row.bound_trained_max = mx;
            row.bound_limit = limit_bound(model, cfg.r, model.n()).bound;
            row.bound_prior = prior_bound(model, cfg.r, model.n(), cfg.t).bound;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<ResultRow> rows;
    if (cfg.family == Family::from_file) {
        const SourceModel model = load_model(cfg.model_path);
        return run_for_model(cfg, model);
    }
    const Rng root(cfg.seed);
    for (int n : cfg.n_grid) {
        const SourceModel model = [&]() -> SourceModel {
            switch (cfg.family) {
                case Family::overlap: return gen_overlapping_model(n);
                case Family::nonoverlap: return gen_nonoverlapping_model(n);
                default: {
                    Rng mr = root.child(kModelStream).child(static_cast<std::uint64_t>(n));
                    return gen_iid_model(cfg.alphabet_size, cfg.num_labels, n, mr);
                }
            }
        }();
        auto part = run_for_model(cfg, model);
        rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
    }
    return rows;
}

namespace {

const char* kCsvHeader =
    "family,n,t,r,classifier,error_estimate,stderr,"
    "bound_trained_mean,bound_trained_min,bound_trained_max,bound_limit,bound_prior,"
    "reps,tests_per_label,seed,"
    "bound_trained_mean_clamped,bound_limit_clamped,bound_prior_clamped";

std::string opt_field(const std::optional<double>& v) {
    return v ? fmt_double(*v) : std::string();
}

std::string opt_clamped(const std::optional<double>& v) {
    return v ? fmt_double(std::min(1.0, *v)) : std::string();
}

}  // namespace

std::string csv_string(const std::vector<ResultRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("csv: no rows");
    std::string s(kCsvHeader);
    s += '\n';
    for (const auto& row : rows) {
        s += row.family;
        s += ',';
        s += std::to_string(row.n);
        s += ',';
        s += std::to_string(row.t);
        s += ',';
        s += fmt_double(row.r);
        s += ',';
        s += row.classifier;
        s += ',';
        s += fmt_double(row.error_estimate);
        s += ',';
        s += fmt_double(row.std_error);
        s += ',';
        s += opt_field(row.bound_trained_mean);
        s += ',';
        s += opt_field(row.bound_trained_min);
        s += ',';
        s += opt_field(row.bound_trained_max);
        s += ',';
        s += opt_field(row.bound_limit);
        s += ',';
        s += opt_field(row.bound_prior);
        s += ',';
        s += std::to_string(row.reps);
        s += ',';
        s += std::to_string(row.tests_per_label);
        s += ',';
        s += std::to_string(row.seed);
        s += ',';
        s += opt_clamped(row.bound_trained_mean);
        s += ',';
        s += opt_clamped(row.bound_limit);
        s += ',';
        s += opt_clamped(row.bound_prior);
        s += '\n';
    }
    return s;
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path) {
    write_file(path, csv_string(rows));
}

}  // namespace ned

#include "ned/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ned/bounds.hpp"
#include "ned/classifier.hpp"
#include "ned/datagen.hpp"
#include "ned/harness.hpp"
#include "ned/io.hpp"
#include "ned/oracle.hpp"

namespace ned {

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

nlohmann::json parse_json_file(const std::string& path) {
    try {
        return nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"nearest-empirical-distribution classification toolkit"};
    app.require_subcommand(1);

    // simulate ------------------------------------------------------------
    auto* sim = app.add_subcommand("simulate",
                                   "Monte Carlo sweep; writes error rates and bounds as CSV");
    std::string s_config, s_family = "iid", s_classifiers = "ned,nb,knn";
    std::string s_metric = "euclidean", s_model, s_out;
    int s_nmin = 1, s_nmax = 100, s_nstep = 1, s_t = 1, s_alpha = 6, s_labels = 2;
    int s_tests = 1000, s_reps = 1000, s_k = 1;
    double s_r = 2.0;
    std::uint64_t s_seed = 1;
    bool s_smooth = false;
    auto* o_config = sim->add_option("--config", s_config, "JSON config; explicit flags override");
    auto* o_family = sim->add_option("--family", s_family, "iid | overlap | nonoverlap | from-file");
    auto* o_nmin = sim->add_option("--n-min", s_nmin, "smallest feature length");
    auto* o_nmax = sim->add_option("--n-max", s_nmax, "largest feature length");
    auto* o_nstep = sim->add_option("--n-step", s_nstep, "feature length increment");
    auto* o_t = sim->add_option("--t", s_t, "training vectors per label");
    auto* o_r = sim->add_option("--r", s_r, "Minkowski order, >= 1");
    auto* o_alpha = sim->add_option("--alphabet-size", s_alpha, "alphabet size (iid family)");
    auto* o_labels = sim->add_option("--labels", s_labels, "label count (iid family)");
    auto* o_tests = sim->add_option("--tests-per-label", s_tests, "test vectors per label per rep");
    auto* o_reps = sim->add_option("--reps", s_reps, "replications per n");
    auto* o_cls = sim->add_option("--classifiers", s_classifiers, "comma list from ned,nb,knn");
    auto* o_k = sim->add_option("--knn-k", s_k, "neighbour count");
    auto* o_metric = sim->add_option("--knn-metric", s_metric, "euclidean | hamming");
    auto* o_smooth = sim->add_flag("--nb-smoothing", s_smooth, "add-one smoothing for naive Bayes");
    auto* o_seed = sim->add_option("--seed", s_seed, "master seed");
    auto* o_model = sim->add_option("--model", s_model, "model JSON (from-file family)");
    auto* o_out = sim->add_option("--out", s_out, "output CSV path (default results.csv)");

    // bound ---------------------------------------------------------------
    auto* bnd = app.add_subcommand("bound", "print separation radii and error bounds for a model");
    std::string b_model;
    int b_n = 0, b_t = 1;
    double b_r = 2.0;
    std::uint64_t b_seed = 1;
    bnd->add_option("--model", b_model, "model JSON file")->required();
    bnd->add_option("--n", b_n, "evaluation length (default: the model's n)");
    bnd->add_option("--t", b_t, "training vectors per label");
    bnd->add_option("--r", b_r, "Minkowski order, >= 1");
    bnd->add_option("--seed", b_seed, "seed for the trained-bound training draw");

    // classify --------------------------------------------------------------
    auto* cls = app.add_subcommand("classify",
                                   "label test vectors given labeled training vectors");
    std::string c_train, c_test, c_cls = "ned", c_metric = "euclidean", c_out;
    double c_r = 2.0;
    int c_k = 1, c_amin = 0, c_amax = 0;
    std::uint64_t c_seed = 1;
    bool c_smooth = false;
    cls->add_option("--train", c_train, "CSV rows: label,code1,...,codeN")->required();
    cls->add_option("--test", c_test, "CSV rows: code1,...,codeN")->required();
    cls->add_option("--classifier", c_cls, "ned | nb | knn");
    cls->add_option("--r", c_r, "Minkowski order, >= 1");
    cls->add_option("--knn-k", c_k, "neighbour count");
    cls->add_option("--knn-metric", c_metric, "euclidean | hamming");
    cls->add_flag("--nb-smoothing", c_smooth, "add-one smoothing for naive Bayes");
    cls->add_option("--seed", c_seed, "tie-break seed");
    auto* o_amin = cls->add_option("--alphabet-min", c_amin, "smallest symbol code");
    auto* o_amax = cls->add_option("--alphabet-max", c_amax, "largest symbol code");
    cls->add_option("--out", c_out, "write predictions here instead of stdout");

    // oracle ----------------------------------------------------------------
    auto* orc = app.add_subcommand("oracle", "exact error probability by full enumeration");
    std::string x_model, x_cls = "ned", x_metric = "euclidean";
    int x_t = 1, x_k = 1;
    double x_r = 2.0;
    orc->add_option("--model", x_model, "model JSON file")->required();
    orc->add_option("--t", x_t, "training vectors per label");
    orc->add_option("--r", x_r, "Minkowski order, >= 1");
    orc->add_option("--classifier", x_cls, "ned | nb | knn");
    orc->add_option("--knn-k", x_k, "neighbour count");
    orc->add_option("--knn-metric", x_metric, "euclidean | hamming");

    try {
        std::vector<std::string> storage;
        storage.reserve(args.size() + 1);
        storage.push_back("nedsim");
        storage.insert(storage.end(), args.begin(), args.end());
        std::vector<char*> argv;
        argv.reserve(storage.size());
        for (auto& a : storage) argv.push_back(a.data());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) {
            ExperimentConfig cfg;
            bool have_grid = false;
            if (o_config->count()) {
                cfg = config_from_json(parse_json_file(s_config));
                have_grid = !cfg.n_grid.empty();
            }
            if (o_family->count()) cfg.family = parse_family(s_family);
            if (o_t->count()) cfg.t = s_t;
            if (o_r->count()) cfg.r = s_r;
            if (o_alpha->count()) cfg.alphabet_size = s_alpha;
            if (o_labels->count()) cfg.num_labels = s_labels;
            if (o_tests->count()) cfg.tests_per_label = s_tests;
            if (o_reps->count()) cfg.reps = s_reps;
            if (o_cls->count()) {
                cfg.classifiers.clear();
                for (const auto& name : split_csv(s_classifiers))
                    cfg.classifiers.push_back(parse_classifier(name));
            }
            if (o_k->count()) cfg.knn_k = s_k;
            if (o_metric->count()) cfg.knn_metric = parse_metric(s_metric);
            if (o_smooth->count()) cfg.nb_add_one = s_smooth;
            if (o_seed->count()) cfg.seed = s_seed;
            if (o_model->count()) cfg.model_path = s_model;
            if (o_out->count()) cfg.out_path = s_out;
            if (cfg.out_path.empty()) cfg.out_path = "results.csv";
            if (o_nmin->count() || o_nmax->count() || o_nstep->count() || !have_grid) {
                if (s_nstep < 1) throw std::invalid_argument("simulate: --n-step must be >= 1");
                cfg.n_grid.clear();
                for (int n = s_nmin; n <= s_nmax; n += s_nstep) cfg.n_grid.push_back(n);
            }
            const auto rows = run_experiment(cfg);
            emit_csv(rows, cfg.out_path);
            out << "wrote " << rows.size() << " rows to " << cfg.out_path << "\n";
            return 0;
        }

        if (bnd->parsed()) {
            const SourceModel m = load_model(b_model);
            const int n = b_n > 0 ? b_n : m.n();
            Rng rng(b_seed);
            const TrainingSet ts = sample_training(m, b_t, rng);
            const double te = trained_epsilon(m, ts, b_r);
            out << "trained epsilon=" << fmt_double(te)
                << " bound=" << fmt_double(trained_bound(te, n, b_t, m.alphabet_size())) << "\n";
            const auto lb = limit_bound(m, b_r, n);
            out << "limit epsilon=" << fmt_double(lb.epsilon) << " bound=" << fmt_double(lb.bound)
                << "\n";
            const auto pb = prior_bound(m, b_r, n, b_t);
            out << "prior epsilon=" << fmt_double(pb.epsilon) << " bound=" << fmt_double(pb.bound)
                << "\n";
            return 0;
        }

        if (cls->parsed()) {
            const auto train = read_labeled_csv(c_train);
            const auto tests = read_vectors_csv(c_test);
            if (train.vectors.empty()) throw std::runtime_error(c_train + ": no training rows");

            std::vector<Label> order;  // labels in first-appearance order
            for (Label l : train.labels)
                if (std::find(order.begin(), order.end(), l) == order.end()) order.push_back(l);
            if (order.size() < 2)
                throw std::invalid_argument("classify: training data must cover >= 2 labels");
            const size_t per = train.labels.size() / order.size();
            for (Label l : order) {
                const size_t c = static_cast<size_t>(std::count(train.labels.begin(),
                                                                train.labels.end(), l));
                if (c != per)
                    throw std::invalid_argument(
                        "classify: every label needs the same number of training vectors");
            }

            Symbol lo = 0, hi = 0;
            if (o_amin->count() != o_amax->count())
                throw std::invalid_argument("classify: give both --alphabet-min and --alphabet-max");
            if (o_amin->count()) {
                lo = c_amin;
                hi = c_amax;
            } else {
                bool first = true;
                auto scan = [&](const FeatureVector& v) {
                    for (Symbol s : v) {
                        if (first) {
                            lo = hi = s;
                            first = false;
                        } else {
                            lo = std::min(lo, s);
                            hi = std::max(hi, s);
                        }
                    }
                };
                for (const auto& v : train.vectors) scan(v);
                for (const auto& v : tests) scan(v);
                if (first) throw std::runtime_error("classify: no symbols found");
            }

            std::vector<FeatureVector> grouped;
            grouped.reserve(train.vectors.size());
            for (Label l : order)
                for (size_t i = 0; i < train.vectors.size(); ++i)
                    if (train.labels[i] == l) grouped.push_back(train.vectors[i]);
            const int n = static_cast<int>(train.vectors.front().size());
            const TrainingSet ts(Alphabet::range(lo, hi), LabelSet(order), n,
                                 static_cast<int>(per), std::move(grouped));

            Rng tie(c_seed);
            std::ostringstream lines;
            const ClassifierKind kind = parse_classifier(c_cls);
            if (kind == ClassifierKind::ned) {
                const NedClassifier c(ts, c_r);
                for (const auto& v : tests) lines << c.classify(v, tie) << "\n";
            } else if (kind == ClassifierKind::nb) {
                const NaiveBayesClassifier c(ts, c_smooth);
                for (const auto& v : tests) lines << c.classify(v, tie) << "\n";
            } else {
                const KnnClassifier c(ts, c_k, parse_metric(c_metric));
                for (const auto& v : tests) lines << c.classify(v, tie) << "\n";
            }
            if (!c_out.empty())
                write_file(c_out, lines.str());
            else
                out << lines.str();
            return 0;
        }

        if (orc->parsed()) {
            const SourceModel m = load_model(x_model);
            OracleOptions opts;
            opts.knn_k = x_k;
            opts.metric = parse_metric(x_metric);
            out << fmt_double(exact_error_oracle(m, x_t, x_r, parse_classifier(x_cls), opts))
                << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace ned

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ned/baselines.hpp"
#include "ned/core.hpp"

namespace ned {

enum class Family { iid, overlap, nonoverlap, from_file };
enum class ClassifierKind { ned, nb, knn };

std::string to_string(Family f);
std::string to_string(ClassifierKind c);
std::string to_string(KnnMetric m);
Family parse_family(const std::string& s);
ClassifierKind parse_classifier(const std::string& s);
KnnMetric parse_metric(const std::string& s);

// Everything a run needs. Replications are driven entirely by (seed, n, rep)
// substreams, so results do not depend on scheduling; NED_THREADS caps the
// worker count.
struct ExperimentConfig {
    Family family = Family::iid;
    std::vector<int> n_grid;  // ascending feature lengths; ignored for from_file
    int t = 1;
    double r = 2.0;
    int alphabet_size = 6;  // iid family only
    int num_labels = 2;     // iid family only
    int tests_per_label = 1000;
    int reps = 1000;
    std::vector<ClassifierKind> classifiers = {ClassifierKind::ned, ClassifierKind::nb,
                                               ClassifierKind::knn};
    int knn_k = 1;
    KnnMetric knn_metric = KnnMetric::euclidean;
    bool nb_add_one = false;
    std::uint64_t seed = 1;
    std::string model_path;  // from_file family
    std::string out_path;    // optional CSV destination used by the CLI

    void validate() const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);

// One aggregated line of a run: a (family, n, classifier) cell. Bound fields
// are populated only on ned rows; trained-bound stats are over per-rep
// realizations, the limit/prior bounds depend only on the model.
struct ResultRow {
    std::string family;
    int n = 0;
    int t = 0;
    double r = 0.0;
    std::string classifier;
    double error_estimate = 0.0;
    double std_error = 0.0;
    std::optional<double> bound_trained_mean;
    std::optional<double> bound_trained_min;
    std::optional<double> bound_trained_max;
    std::optional<double> bound_limit;
    std::optional<double> bound_prior;
    int reps = 0;
    int tests_per_label = 0;
    std::uint64_t seed = 0;
};

// full sweep over cfg.n_grid (or the file model's n)
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

// one sweep cell for an explicit model; cfg.family only labels the rows
std::vector<ResultRow> run_for_model(const ExperimentConfig& cfg, const SourceModel& model);

// CSV with a fixed header; unset bounds are empty fields, numbers are
// shortest-round-trip so identical runs are byte identical
std::string csv_string(const std::vector<ResultRow>& rows);
void emit_csv(const std::vector<ResultRow>& rows, const std::string& path);

}  // namespace ned

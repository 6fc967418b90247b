#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ned/core.hpp"

namespace ned {

// model file layout:
// {"n": 2, "labels": [1,2], "alphabet": [0,1,2],
//  "cond": [ per position: [ per label: [p(y) per symbol] ] ]}
nlohmann::json model_to_json(const SourceModel& m);
SourceModel model_from_json(const nlohmann::json& j);
void save_model(const SourceModel& m, const std::string& path);
SourceModel load_model(const std::string& path);

// feature vectors as CSV rows of integer codes
void write_vectors_csv(const std::vector<FeatureVector>& vecs, const std::string& path);
std::vector<FeatureVector> read_vectors_csv(const std::string& path);

// rows of the form "label,code1,...,codeN"
struct LabeledVectors {
    std::vector<Label> labels;
    std::vector<FeatureVector> vectors;
};
LabeledVectors read_labeled_csv(const std::string& path);

// shortest decimal form that parses back to the same double
std::string fmt_double(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ned

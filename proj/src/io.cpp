#include "ned/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace ned {

namespace {

std::vector<long long> parse_int_row(const std::string& line, const std::string& path) {
    std::vector<long long> out;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
        long long v = 0;
        auto res = std::from_chars(p, end, v);
        if (res.ec != std::errc())
            throw std::runtime_error(path + ": bad integer in row '" + line + "'");
        out.push_back(v);
        p = res.ptr;
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
        if (p < end) {
            if (*p != ',') throw std::runtime_error(path + ": expected ',' in row '" + line + "'");
            ++p;
        }
    }
    return out;
}

}  // namespace

nlohmann::json model_to_json(const SourceModel& m) {
    nlohmann::json j;
    j["n"] = m.n();
    j["labels"] = m.labels().labels();
    j["alphabet"] = m.alphabet().symbols();
    nlohmann::json cond = nlohmann::json::array();
    for (int i = 0; i < m.n(); ++i) {
        nlohmann::json per_label = nlohmann::json::array();
        for (int x = 0; x < m.num_labels(); ++x) {
            const auto r = m.row(i, x);
            per_label.push_back(std::vector<double>(r.begin(), r.end()));
        }
        cond.push_back(std::move(per_label));
    }
    j["cond"] = std::move(cond);
    return j;
}

SourceModel model_from_json(const nlohmann::json& j) {
    for (const char* key : {"n", "labels", "alphabet", "cond"})
        if (!j.contains(key)) throw std::runtime_error(std::string("model json: missing '") + key + "'");
    const int n = j.at("n").get<int>();
    Alphabet alphabet(j.at("alphabet").get<std::vector<Symbol>>());
    LabelSet labels(j.at("labels").get<std::vector<Label>>());
    const auto& cond = j.at("cond");
    if (!cond.is_array() || static_cast<int>(cond.size()) != n)
        throw std::runtime_error("model json: cond must have one entry per position");
    std::vector<double> flat;
    flat.reserve(static_cast<size_t>(n) * labels.size() * alphabet.size());
    for (const auto& per_label : cond) {
        if (!per_label.is_array() || static_cast<int>(per_label.size()) != labels.size())
            throw std::runtime_error("model json: cond entry must have one row per label");
        for (const auto& row : per_label) {
            auto vals = row.get<std::vector<double>>();
            if (static_cast<int>(vals.size()) != alphabet.size())
                throw std::runtime_error("model json: row length does not match alphabet");
            flat.insert(flat.end(), vals.begin(), vals.end());
        }
    }
    return SourceModel(std::move(alphabet), std::move(labels), n, std::move(flat));
}

void save_model(const SourceModel& m, const std::string& path) {
    write_file(path, model_to_json(m).dump());
}

SourceModel load_model(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return model_from_json(j);
}

void write_vectors_csv(const std::vector<FeatureVector>& vecs, const std::string& path) {
    std::ostringstream os;
    for (const auto& v : vecs) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << ',';
            os << v[i];
        }
        os << '\n';
    }
    write_file(path, os.str());
}

std::vector<FeatureVector> read_vectors_csv(const std::string& path) {
    std::istringstream is(read_file(path));
    std::vector<FeatureVector> out;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto row = parse_int_row(line, path);
        FeatureVector v(row.begin(), row.end());
        out.push_back(std::move(v));
    }
    return out;
}

LabeledVectors read_labeled_csv(const std::string& path) {
    std::istringstream is(read_file(path));
    LabeledVectors out;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto row = parse_int_row(line, path);
        if (row.size() < 2) throw std::runtime_error(path + ": row needs a label and at least one code");
        out.labels.push_back(static_cast<Label>(row[0]));
        out.vectors.emplace_back(row.begin() + 1, row.end());
    }
    return out;
}

std::string fmt_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    if (f.bad()) throw std::runtime_error("read failed: " + path);
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace ned

#include "steerkit/measurement_set.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "steerkit/errors.hpp"

namespace steerkit {

namespace {

void check_directions(const std::vector<Vec3>& dirs) {
    if (dirs.empty()) {
        throw ValidationError("measurement set must contain at least one direction");
    }
    for (size_t j = 0; j < dirs.size(); ++j) {
        const Vec3& v = dirs[j];
        if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z)) {
            throw ValidationError("direction " + std::to_string(j) + " has non-finite components");
        }
        if (std::abs(v.norm() - 1.0) > kUnitNormTol) {
            std::ostringstream msg;
            msg << "direction " << j << " is not unit length (||b|| = " << v.norm() << ")";
            throw ValidationError(msg.str());
        }
    }
}

}  // namespace

MeasurementSet::MeasurementSet(std::vector<Vec3> directions, std::string label)
    : directions_(std::move(directions)), label_(std::move(label)) {
    check_directions(directions_);
}

MeasurementSet MeasurementSet::renormalized(std::vector<Vec3> directions, std::string label,
                                            double* max_delta) {
    double worst = 0.0;
    for (auto& v : directions) {
        const double n = v.norm();
        if (!(n > 0.0) || !std::isfinite(n)) {
            throw ValidationError("cannot renormalize a zero or non-finite direction");
        }
        worst = std::max(worst, std::abs(n - 1.0));
        v = v / n;
    }
    if (max_delta != nullptr) *max_delta = worst;
    return MeasurementSet(std::move(directions), std::move(label));
}

std::string to_json(const MeasurementSet& set) {
    nlohmann::json j;
    j["label"] = set.label();
    auto& dirs = j["directions"] = nlohmann::json::array();
    for (const Vec3& v : set.directions()) {
        dirs.push_back({v.x, v.y, v.z});
    }
    return j.dump(2);
}

MeasurementSet measurement_set_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("invalid measurement-set JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("directions") || !j["directions"].is_array()) {
        throw ValidationError("measurement-set JSON must be {\"label\":..., \"directions\":[[x,y,z],...]}");
    }
    std::vector<Vec3> dirs;
    for (const auto& row : j["directions"]) {
        if (!row.is_array() || row.size() != 3) {
            throw ValidationError("each direction must be a 3-element array");
        }
        dirs.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    }
    std::string label = j.value("label", std::string{});
    return MeasurementSet(std::move(dirs), std::move(label));
}

MeasurementSet load_measurement_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open measurement-set file: " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return measurement_set_from_json(buf.str());
}

void save_measurement_set(const MeasurementSet& set, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ValidationError("cannot write measurement-set file: " + path);
    }
    out << to_json(set) << "\n";
}

}  // namespace steerkit

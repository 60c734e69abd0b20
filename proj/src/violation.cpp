#include "steerkit/violation.hpp"

#include <cmath>
#include <iomanip>

#include "steerkit/errors.hpp"
#include "steerkit/lhs_bound.hpp"

namespace steerkit {

namespace {

Eigen::Vector3d to_eigen(const Vec3& v) { return {v.x, v.y, v.z}; }

}  // namespace

double quantum_value(const DensityMatrix& rho, const MeasurementSet& alice,
                     const MeasurementSet& bob) {
    if (alice.size() != bob.size()) {
        throw ValidationError("alice and bob must use the same number of settings");
    }
    const CorrelationMatrix t = correlation_matrix(rho);
    double sum = 0.0;
    for (int j = 0; j < bob.size(); ++j) {
        sum += to_eigen(alice[j]).dot(t * to_eigen(bob[j]));
    }
    return sum / bob.size();
}

ViolationResult max_quantum_value(const DensityMatrix& rho, const MeasurementSet& bob) {
    const CorrelationMatrix t = correlation_matrix(rho);
    ViolationResult out;
    out.alice_directions.reserve(static_cast<size_t>(bob.size()));
    double sum = 0.0;
    for (int j = 0; j < bob.size(); ++j) {
        const Eigen::Vector3d tb = t * to_eigen(bob[j]);
        const double norm = tb.norm();
        if (norm > 1e-12) {
            sum += norm;
            out.alice_directions.push_back({tb.x() / norm, tb.y() / norm, tb.z() / norm});
        } else {
            out.alice_directions.push_back(bob[j]);  // any unit vector is optimal here
        }
    }
    out.quantum_value = sum / bob.size();
    return out;
}

ViolationResult detect(const DensityMatrix& rho, const MeasurementSet& bob) {
    ViolationResult out = max_quantum_value(rho, bob);
    out.lhs_bound = lhs_bound(bob).value;
    out.margin = out.quantum_value - out.lhs_bound;
    out.detected = out.margin > 0.0;
    return out;
}

StateParams with_param(StateParams base, const std::string& name, double value) {
    if (name == "v" || name == "V") {
        base.v = value;
    } else if (name == "theta") {
        base.theta = value;
    } else if (name == "gamma") {
        base.gamma = value;
    } else {
        throw ValidationError("unknown sweep parameter: " + name);
    }
    return base;
}

std::vector<SweepRow> sweep(const SweepGrid& grid, const MeasurementSet& bob) {
    if (grid.axis1.values.empty()) {
        throw ValidationError("sweep axis1 has no values");
    }
    const double bound = lhs_bound(bob).value;

    std::vector<SweepRow> rows;
    auto eval = [&](const StateParams& p, double v1, std::optional<double> v2) {
        ViolationResult r = max_quantum_value(make_state(grid.family, p), bob);
        r.lhs_bound = bound;
        r.margin = r.quantum_value - bound;
        r.detected = r.margin > 0.0;
        r.alice_directions.clear();  // keeps sweep tables lean
        rows.push_back({v1, v2, std::move(r)});
    };

    for (double v1 : grid.axis1.values) {
        const StateParams p1 = with_param(grid.base, grid.axis1.name, v1);
        if (grid.axis2) {
            for (double v2 : grid.axis2->values) {
                eval(with_param(p1, grid.axis2->name, v2), v1, v2);
            }
        } else {
            eval(p1, v1, std::nullopt);
        }
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "param1,param2,quantum_value,lhs_bound,margin,detected\n";
    out << std::setprecision(17);
    for (const SweepRow& row : rows) {
        out << row.param1 << ",";
        if (row.param2) out << *row.param2;
        out << "," << row.result.quantum_value << "," << row.result.lhs_bound << ","
            << row.result.margin << "," << (row.result.detected ? 1 : 0) << "\n";
    }
}

CriticalParameter critical_parameter(StateFamily family, const StateParams& base,
                                     const SweepAxis& axis, const MeasurementSet& bob) {
    if (axis.values.size() < 2) {
        throw ValidationError("critical_parameter needs at least two axis values");
    }
    const double bound = lhs_bound(bob).value;
    auto detected_at = [&](double value) {
        const DensityMatrix rho = make_state(family, with_param(base, axis.name, value));
        return max_quantum_value(rho, bob).quantum_value > bound;
    };

    CriticalParameter out;
    for (size_t i = 0; i < axis.values.size(); ++i) {
        if (!detected_at(axis.values[i])) continue;
        out.first_detected_grid_point = axis.values[i];
        if (i == 0) {
            out.bisected = axis.values[0];  // detected from the axis start
            return out;
        }
        double lo = axis.values[i - 1];  // not detected
        double hi = axis.values[i];      // detected
        while (hi - lo > 1e-6) {
            const double mid = 0.5 * (lo + hi);
            (detected_at(mid) ? hi : lo) = mid;
        }
        out.bisected = hi;
        return out;
    }
    return out;
}

}  // namespace steerkit

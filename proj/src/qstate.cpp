#include "steerkit/qstate.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include <json.hpp>

#include "steerkit/errors.hpp"

namespace steerkit {

namespace {

using std::complex;

void require_range(double x, double lo, double hi, const char* name) {
    if (!std::isfinite(x) || x < lo || x > hi) {
        std::ostringstream msg;
        msg << name << " = " << x << " outside [" << lo << ", " << hi << "]";
        throw ValidationError(msg.str());
    }
}

double hermitian_defect(const ComplexMatrix4& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix4& m) : m_(m) {
    if (!m_.allFinite()) {
        throw ValidationError("density matrix has non-finite entries");
    }
    if (hermitian_defect(m_) > kHermitianTol) {
        throw ValidationError("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - complex<double>(1.0, 0.0)) > kTraceTol) {
        throw ValidationError("density matrix trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix4> solver(m_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues()(0) < kPsdTol) {
        std::ostringstream msg;
        msg << "density matrix is not PSD (min eigenvalue " << solver.eigenvalues()(0) << ")";
        throw ValidationError(msg.str());
    }
}

DensityMatrix make_werner(double v) {
    require_range(v, 0.0, 1.0, "V");
    // |Phi-> = (|01> - |10>)/sqrt(2)
    Eigen::Vector4cd phi = Eigen::Vector4cd::Zero();
    phi(1) = 1.0 / std::sqrt(2.0);
    phi(2) = -1.0 / std::sqrt(2.0);
    ComplexMatrix4 m = v * (phi * phi.adjoint()) + (1.0 - v) * 0.25 * ComplexMatrix4::Identity();
    return DensityMatrix(m);
}

DensityMatrix make_generalized_werner(double v, double theta) {
    require_range(v, 0.0, 1.0, "V");
    require_range(theta, 0.0, M_PI / 2.0, "theta");
    const double c = std::cos(theta), s = std::sin(theta);
    ComplexMatrix4 m = ComplexMatrix4::Zero();
    const double noise = (1.0 - v) / 4.0;
    m(0, 0) = noise;
    m(1, 1) = v * c * c + noise;
    m(2, 2) = v * s * s + noise;
    m(3, 3) = noise;
    m(1, 2) = m(2, 1) = -v * s * c;
    return DensityMatrix(m);
}

DensityMatrix make_mems(double gamma) {
    require_range(gamma, 0.0, 1.0, "gamma");
    const double g = (gamma <= 2.0 / 3.0) ? 1.0 / 3.0 : gamma / 2.0;
    ComplexMatrix4 m = ComplexMatrix4::Zero();
    m(0, 0) = m(3, 3) = g;
    m(1, 1) = 1.0 - 2.0 * g;
    m(0, 3) = m(3, 0) = gamma / 2.0;
    return DensityMatrix(m);
}

DensityMatrix make_avn(double v, double theta) {
    require_range(v, 0.0, 1.0, "V");
    if (!std::isfinite(theta) || theta <= 0.0 || theta >= M_PI / 2.0) {
        std::ostringstream msg;
        msg << "theta = " << theta << " outside (0, pi/2)";
        throw ValidationError(msg.str());
    }
    const double c = std::cos(theta), s = std::sin(theta);
    ComplexMatrix4 m = ComplexMatrix4::Zero();
    m(0, 0) = v * c * c;
    m(1, 1) = (1.0 - v) * s * s;
    m(2, 2) = (1.0 - v) * c * c;
    m(3, 3) = v * s * s;
    m(0, 3) = m(3, 0) = v * s * c;
    m(1, 2) = m(2, 1) = (1.0 - v) * s * c;
    return DensityMatrix(m);
}

ComplexMatrix4 partial_transpose(const ComplexMatrix4& m) {
    ComplexMatrix4 out;
    // Index (a,b) with a,b in {0,1}: row = 2a+b. Transpose swaps the second
    // qubit's bra/ket indices: out[ab][cd] = m[ad][cb].
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    out(2 * a + b, 2 * c + d) = m(2 * a + d, 2 * c + b);
    return out;
}

ComplexMatrix4 partial_transpose(const DensityMatrix& rho) { return partial_transpose(rho.matrix()); }

double min_eigenvalue(const ComplexMatrix4& m) {
    if (!m.allFinite()) {
        throw ValidationError("matrix has non-finite entries");
    }
    if (hermitian_defect(m) > 1e-10) {
        throw ValidationError("min_eigenvalue requires a Hermitian matrix");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix4> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

Eigen::Matrix2cd pauli(int k) {
    const complex<double> i_unit(0.0, 1.0);
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    switch (k) {
        case 0: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case 1: m(0, 1) = -i_unit; m(1, 0) = i_unit; break;
        case 2: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
        default: throw ValidationError("pauli index must be 0, 1 or 2");
    }
    return m;
}

CorrelationMatrix correlation_matrix(const DensityMatrix& rho) {
    CorrelationMatrix t;
    for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
            ComplexMatrix4 op;
            const Eigen::Matrix2cd a = pauli(k), b = pauli(l);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    op.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
            t(k, l) = (rho.matrix() * op).trace().real();
            if (std::abs(t(k, l)) > 1.0 + 1e-12) {
                throw ValidationError("correlation entry outside [-1, 1]");
            }
        }
    }
    return t;
}

StateFamily parse_family(const std::string& name) {
    if (name == "werner") return StateFamily::Werner;
    if (name == "generalized_werner" || name == "gw") return StateFamily::GeneralizedWerner;
    if (name == "mems") return StateFamily::Mems;
    if (name == "avn") return StateFamily::Avn;
    throw ValidationError("unknown state family: " + name);
}

std::string family_name(StateFamily family) {
    switch (family) {
        case StateFamily::Werner: return "werner";
        case StateFamily::GeneralizedWerner: return "generalized_werner";
        case StateFamily::Mems: return "mems";
        case StateFamily::Avn: return "avn";
    }
    return "?";
}

DensityMatrix make_state(StateFamily family, const StateParams& p) {
    switch (family) {
        case StateFamily::Werner: return make_werner(p.v);
        case StateFamily::GeneralizedWerner: return make_generalized_werner(p.v, p.theta);
        case StateFamily::Mems: return make_mems(p.gamma);
        case StateFamily::Avn: return make_avn(p.v, p.theta);
    }
    throw ValidationError("unknown state family");
}

std::string to_json(const DensityMatrix& rho) {
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (int r = 0; r < 4; ++r) {
        nlohmann::json re_row = nlohmann::json::array(), im_row = nlohmann::json::array();
        for (int c = 0; c < 4; ++c) {
            re_row.push_back(rho.matrix()(r, c).real());
            im_row.push_back(rho.matrix()(r, c).imag());
        }
        re.push_back(re_row);
        im.push_back(im_row);
    }
    nlohmann::json j;
    j["re"] = re;
    j["im"] = im;
    return j.dump(2);
}

}  // namespace steerkit

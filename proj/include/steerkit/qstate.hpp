#pragma once

#include <string>

#include <Eigen/Dense>

namespace steerkit {

using ComplexMatrix4 = Eigen::Matrix4cd;
using CorrelationMatrix = Eigen::Matrix3d;  // T(k,l) = <sigma_k (x) sigma_l>

// Validation tolerances for physical states.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = -1e-9;  // minimal eigenvalue may dip this far

// Two-qubit density matrix in the product basis |00>,|01>,|10>,|11>.
// Construction validates Hermiticity, unit trace and positive semidefiniteness.
class DensityMatrix {
public:
    explicit DensityMatrix(const ComplexMatrix4& m);
    const ComplexMatrix4& matrix() const { return m_; }

private:
    ComplexMatrix4 m_;
};

// Singlet mixed with white noise: V |Phi-><Phi-| + (1-V) I/4.
DensityMatrix make_werner(double v);

// Non-maximally entangled |Phi-(theta)> = cos(theta)|01> - sin(theta)|10>
// mixed with white noise; reduces to make_werner at theta = pi/4.
DensityMatrix make_generalized_werner(double v, double theta);

// Maximally entangled mixed state; g = 1/3 for gamma <= 2/3, gamma/2 above.
DensityMatrix make_mems(double gamma);

// Two-parameter state family used in all-versus-nothing steering arguments.
// V = 1/2 is accepted (the matrix is well-defined there).
DensityMatrix make_avn(double v, double theta);

// Transpose on the second qubit's indices. Hermitian and trace-1 but not
// necessarily PSD, hence the plain matrix return type. The raw overload makes
// the map applicable to its own (possibly non-PSD) output.
ComplexMatrix4 partial_transpose(const ComplexMatrix4& m);
ComplexMatrix4 partial_transpose(const DensityMatrix& rho);

// Smallest eigenvalue of a Hermitian 4x4. Throws ValidationError if the input
// deviates from Hermitian by more than 1e-10.
double min_eigenvalue(const ComplexMatrix4& m);

// T(k,l) = Tr[rho (sigma_k (x) sigma_l)], k,l in {x,y,z}.
CorrelationMatrix correlation_matrix(const DensityMatrix& rho);

// Pauli matrix sigma_k for k in {0,1,2} = {x,y,z}.
Eigen::Matrix2cd pauli(int k);

// State families exposed through the CLI and parameter sweeps.
enum class StateFamily { Werner, GeneralizedWerner, Mems, Avn };

struct StateParams {
    double v = 1.0;                 // mixing fraction, [0,1]
    double theta = 0.78539816339744831;  // pi/4; GW: [0,pi/2], AVN: (0,pi/2)
    double gamma = 1.0;             // MEMS parameter, [0,1]
};

StateFamily parse_family(const std::string& name);
std::string family_name(StateFamily family);
DensityMatrix make_state(StateFamily family, const StateParams& p);

// State JSON: {"re": 4x4 array, "im": 4x4 array}.
std::string to_json(const DensityMatrix& rho);

}  // namespace steerkit

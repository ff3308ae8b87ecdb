#ifndef GE_COHERENT_HPP
#define GE_COHERENT_HPP

#include <cstdint>

#include "ge/operator_core.hpp"

namespace ge {

/// Spin-J irrep of su(2) in the |J,m> basis, m = J, J-1, ..., -J (index 0 is
/// m = J). Generators are in physical normalization: J_z = diag(J, ..., -J).
struct SpinSystem
{
    int twice_j = 0;
    HermitianOperator jx, jy, jz;

    double j() const { return 0.5 * twice_j; }
    Index dim() const { return twice_j + 1; }
    /// Basis vector |J,m>; m must be one of J, J-1, ..., -J.
    ComplexVector basis_state(double m) const;
    std::vector<HermitianOperator> generators() const { return {jx, jy, jz}; }
};

/// Throws std::invalid_argument unless 2J is a nonnegative integer.
SpinSystem spin_system(double j);

/// Spin coherent state: top eigenvector of n.J, with the largest-magnitude
/// amplitude made real positive.
QuantumState scs(const SpinSystem& system, const Eigen::Vector3d& direction);

/// exp(i sum_a theta_a X_a) |reference>.
QuantumState orbit_sample(const ObservableSpace& omega, const QuantumState& reference,
                          std::span<const double> angles);

struct MaxPurityOptions
{
    int restarts = 32;
    std::uint64_t seed = 20070115;
    double step = 0.1;
    int max_iterations = 10000;
    double min_improvement = 1e-10;
};

struct PurityMaximum
{
    double value = 0.0;
    ComplexVector argmax;
};

/// Gradient of sum_a <X_a>^2 at psi in the real sense:
/// d f = Re <grad, d psi> for every perturbation d psi.
ComplexVector purity_gradient(const ObservableSpace& omega, const ComplexVector& psi);

/// Projected gradient ascent of the raw purity over unit vectors with seeded
/// random restarts. The returned value is a lower bound on the true maximum.
PurityMaximum maximize_purity(const ObservableSpace& omega, const MaxPurityOptions& options = {});

/// maximize_purity(...).value on the traceless sector of omega.
double max_purity_estimate(const ObservableSpace& omega, const MaxPurityOptions& options = {});

}  // namespace ge

#endif  // GE_COHERENT_HPP

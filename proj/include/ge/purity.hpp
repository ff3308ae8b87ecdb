#ifndef GE_PURITY_HPP
#define GE_PURITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ge/operator_core.hpp"

namespace ge {

/// Omega-purity of a state, raw and rescaled so that its maximum over pure
/// states is one.
struct PurityReport
{
    double raw = 0.0;            ///< sum_a <X_a>^2 over the full basis
    double rescaled = 0.0;       ///< traceless-sector raw / max_reference
    double max_reference = 0.0;  ///< maximal traceless raw purity used to rescale
    std::string omega_label;
};

/// Which direction of the maximal-purity criterion applies.
enum class TheoremDirection
{
    iff,              ///< irreducible Lie setting: maximal purity <=> unentangled
    sufficient_only,  ///< general subspace: maximal purity => unentangled
};

struct UnentanglementVerdict
{
    bool unentangled = false;
    TheoremDirection direction = TheoremDirection::sufficient_only;
    double rescaled = 0.0;
};

const char* to_string(TheoremDirection d);

/// sum_a Tr(rho X_a) X_a.
HermitianOperator project_onto(const QuantumState& state, const ObservableSpace& omega);
HermitianOperator project_onto(const HermitianOperator& op, const ObservableSpace& omega);

/// sum_a Tr(rho X_a)^2; asserts 0 <= P <= Tr(rho^2).
double omega_purity(const QuantumState& state, const ObservableSpace& omega);

/// Orthonormal basis of the traceless parts of omega's elements. Returns
/// omega itself when it has no identity component.
ObservableSpace traceless_sector(const ObservableSpace& omega);

struct MaxPurityOptions;

/// Rescaled purity. Without a reference the maximum is estimated
/// numerically with `options` (see coherent.hpp).
PurityReport rescaled_purity(const QuantumState& state, const ObservableSpace& omega,
                             std::optional<double> max_reference = std::nullopt);
PurityReport rescaled_purity(const QuantumState& state, const ObservableSpace& omega,
                             const MaxPurityOptions& options);

/// (d0/(d0-1)) * ((1/n) sum_l Tr(rho_l^2) - 1/d0) from single-site reductions.
double local_purity_formula(const QuantumState& psi, int n, Index d0);

/// Meyer-Wallach global entanglement Q = 1 - P_loc for n qubits.
double meyer_wallach_q(const QuantumState& psi);

/// Maximal rescaled purity test. Direction is iff when omega is flagged
/// irreducible_lie, sufficient-only otherwise. Mixed states are rejected.
UnentanglementVerdict is_generalized_unentangled(const QuantumState& psi, const ObservableSpace& omega,
                                                 double max_reference, double tolerance = 1e-8);

/// |<X_a>_1 - <X_a>_2| < tolerance for every basis element.
bool expectations_indistinguishable(const QuantumState& s1, const QuantumState& s2, const ObservableSpace& omega,
                                    double tolerance = 1e-10);

/// sum_a (<X_a^2> - <X_a>^2) over generators in their physical normalization.
double invariant_uncertainty(const QuantumState& psi, const std::vector<HermitianOperator>& generators);

}  // namespace ge

#endif  // GE_PURITY_HPP

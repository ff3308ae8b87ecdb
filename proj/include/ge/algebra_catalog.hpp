#ifndef GE_ALGEBRA_CATALOG_HPP
#define GE_ALGEBRA_CATALOG_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ge/operator_core.hpp"

namespace ge {

/// su(d0) on each of n sites, each generalized Pauli generator padded with
/// normalized identities 1/sqrt(d0) on the other sites. n(d0^2 - 1) elements.
ObservableSpace local_algebra(int n, Index d0);

/// Span of normalized Pauli strings P / sqrt(2^n). Words use I, X, Y, Z and
/// must share one length; duplicates collapse.
ObservableSpace pauli_string_space(std::span<const std::string> words, std::string label = "pauli");

/// {s_z x 1, 1 x s_z, sqrt2 (s_x x s_x + s_y x s_y), sqrt2 (s_x x s_y - s_y x s_x)},
/// s_a = sigma_a / 2: the observables commuting with total S_z that close to u(2).
ObservableSpace z_conserving_u2();

/// {XX, ZZ, XY, YZ}: spans the Bell-state correlators but is not a Lie algebra.
ObservableSpace omega_prime_loc();

/// Three-qubit local algebra su(2)_1 + su(2)_2 + su(2)_3.
ObservableSpace omega1();

/// su(4) on qubits 1,2 plus su(2) on qubit 3: 15 + 3 = 18 elements.
ObservableSpace bilocal_pair_algebra();

/// su(4) on qubits 1,2 alone (15 elements); reproduces the published
/// bi-local purity values.
ObservableSpace bilocal_pair_paper_values();

/// Nearest-neighbour two-body strings on a 3-qubit line (pairs 12, 23).
ObservableSpace omega3();

/// All two-body strings on 3 qubits (pairs 12, 23, 13): 27 elements.
ObservableSpace omega4();

/// su(2) spin-J generators, trace-orthonormalized.
ObservableSpace spin_su2(double j);

/// su(2)_1 + su(2)_2 for two spin-J particles.
ObservableSpace restricted_local_spins(double j);

namespace algebra {
struct Local { int n; Index d0; };
struct PauliSubset { std::vector<std::string> words; std::string label = "custom"; };
struct BilocalPair { bool paper_values = false; };
struct Omega3 {};
struct Omega4 {};
struct OmegaPrimeLoc {};
struct ZConservingU2 {};
struct SpinJ { double j; };
struct SpinPair { double j; };
struct FermionicU2 {};
struct FermionicSo4 {};
struct FullTraceless { Index d; };
struct Custom { std::vector<HermitianOperator> ops; std::string label = "custom"; };
}  // namespace algebra

using AlgebraSpec = std::variant<algebra::Local, algebra::PauliSubset, algebra::BilocalPair, algebra::Omega3,
                                 algebra::Omega4, algebra::OmegaPrimeLoc, algebra::ZConservingU2, algebra::SpinJ,
                                 algebra::SpinPair, algebra::FermionicU2, algebra::FermionicSo4,
                                 algebra::FullTraceless, algebra::Custom>;

ObservableSpace build_algebra(const AlgebraSpec& spec);

enum class ReferenceSource
{
    analytic,        ///< closed form
    cached_numeric,  ///< optimizer result computed once per process
};

struct MaxReference
{
    double value;
    ReferenceSource source;
};

/// Maximal traceless raw purity over pure states, when known in closed form
/// or fixed by a cached optimizer run. Empty for sets without either.
std::optional<MaxReference> reference_max_purity(const AlgebraSpec& spec);

const char* to_string(ReferenceSource s);

}  // namespace ge

#endif  // GE_ALGEBRA_CATALOG_HPP

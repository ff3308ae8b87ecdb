#ifndef GE_OPERATOR_CORE_HPP
#define GE_OPERATOR_CORE_HPP

#include <complex>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace ge {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Fixed numerical tolerances shared by every module.
namespace tol {
inline constexpr double hermitian = 1e-12;   ///< Hermiticity and normalization
inline constexpr double rank = 1e-9;         ///< linear independence cutoff
inline constexpr double equality = 1e-10;    ///< equality assertions
}  // namespace tol

/// Largest Hilbert-space dimension any constructor will build.
inline constexpr Index max_dimension = 1024;

class DimensionError : public std::invalid_argument
{
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

class InvalidOperator : public std::invalid_argument
{
public:
    explicit InvalidOperator(const std::string& what) : std::invalid_argument(what) {}
};

class InvalidState : public std::invalid_argument
{
public:
    explicit InvalidState(const std::string& what) : std::invalid_argument(what) {}
};

/// A Hermitian matrix. Construction checks Hermiticity to tol::hermitian and
/// then stores the exactly symmetrized matrix.
class HermitianOperator
{
public:
    HermitianOperator() = default;
    explicit HermitianOperator(const ComplexMatrix& m);

    const ComplexMatrix& matrix() const { return m_matrix; }
    Index dim() const { return m_matrix.rows(); }
    double trace() const { return m_matrix.trace().real(); }
    /// Frobenius norm, i.e. sqrt(Tr(A^2)).
    double norm() const { return m_matrix.norm(); }

    HermitianOperator operator+(const HermitianOperator& o) const;
    HermitianOperator operator-(const HermitianOperator& o) const;
    HermitianOperator operator*(double s) const;

private:
    ComplexMatrix m_matrix;
};

inline HermitianOperator operator*(double s, const HermitianOperator& a) { return a * s; }

/// Pure amplitude vector or density matrix on a d-dimensional space.
class QuantumState
{
public:
    static QuantumState pure(const ComplexVector& amplitudes);
    static QuantumState density(const ComplexMatrix& rho);

    Index dim() const;
    bool is_pure() const { return std::holds_alternative<ComplexVector>(m_repr); }

    /// Throws InvalidState for density-matrix states.
    const ComplexVector& amplitudes() const;
    /// Density operator; computed as |psi><psi| for pure states.
    ComplexMatrix density_matrix() const;
    /// Tr(rho^2).
    double purity() const;

private:
    explicit QuantumState(std::variant<ComplexVector, ComplexMatrix> repr) : m_repr(std::move(repr)) {}
    std::variant<ComplexVector, ComplexMatrix> m_repr;
};

/// Real span of trace-orthonormal Hermitian operators.
class ObservableSpace
{
public:
    struct Flags
    {
        bool contains_identity = false;
        /// Basis spans an irreducibly represented Lie algebra; enables the
        /// two-sided maximal-purity criterion.
        bool irreducible_lie = false;
    };

    /// Zero-dimensional space on a `dim`-dimensional Hilbert space.
    ObservableSpace(Index dim, std::string label);
    /// Checks Tr(X_a X_b) = delta_ab to tol::equality and tracelessness
    /// unless flags.contains_identity is set.
    ObservableSpace(Index dim, std::vector<HermitianOperator> basis, std::string label, Flags flags);
    ObservableSpace(Index dim, std::vector<HermitianOperator> basis, std::string label)
        : ObservableSpace(dim, std::move(basis), std::move(label), Flags{})
    {
    }

    Index dim() const { return m_dim; }
    std::size_t size() const { return m_basis.size(); }
    bool empty() const { return m_basis.empty(); }
    const std::vector<HermitianOperator>& basis() const { return m_basis; }
    const HermitianOperator& operator[](std::size_t i) const { return m_basis[i]; }
    const std::string& label() const { return m_label; }
    const Flags& flags() const { return m_flags; }

    ObservableSpace relabeled(std::string label) const;
    ObservableSpace with_flags(Flags flags) const;

private:
    Index m_dim;
    std::vector<HermitianOperator> m_basis;
    std::string m_label;
    Flags m_flags;
};

// ---------------------------------------------------------------------------
// Inner products, expectations
// ---------------------------------------------------------------------------

/// Re Tr(a b).
double trace_inner_product(const HermitianOperator& a, const HermitianOperator& b);

/// Tr(rho x); the imaginary part is asserted below 1e-10 and discarded.
double expectation(const QuantumState& state, const HermitianOperator& x);

/// Lie bracket i(XY - YX); Hermitian for Hermitian inputs.
HermitianOperator lie_bracket(const HermitianOperator& x, const HermitianOperator& y);

/// Plain commutator XY - YX.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// ---------------------------------------------------------------------------
// Tensor structure
// ---------------------------------------------------------------------------

/// Kronecker product; works for any scalar type.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(const Eigen::MatrixBase<DerivedA>& a,
                                                                               const Eigen::MatrixBase<DerivedB>& b)
{
    using Scalar = typename DerivedA::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);
/// Product state; pure if both factors are pure.
QuantumState tensor(const QuantumState& a, const QuantumState& b);

/// Reduced density operator on the factors listed in `keep` (0-based, any
/// order; output follows ascending factor order).
QuantumState partial_trace(const QuantumState& state, std::span<const Index> dims, std::span<const Index> keep);

// ---------------------------------------------------------------------------
// Standard operators
// ---------------------------------------------------------------------------

ComplexMatrix identity(Index d);
/// Pauli matrix for 'I', 'X', 'Y' or 'Z'.
ComplexMatrix pauli(char which);
/// Tensor product of Pauli letters, e.g. "XZI"; leftmost letter is site 1.
ComplexMatrix pauli_string(const std::string& word);

/// Trace-orthonormal generalized Gell-Mann basis of traceless Hermitian
/// d x d matrices: symmetric, antisymmetric, then diagonal families.
/// For d = 2 this is sigma_x, sigma_y, sigma_z divided by sqrt(2).
std::vector<HermitianOperator> gell_mann_basis(Index d);

/// The full traceless Hermitian algebra su(d).
ObservableSpace full_traceless_space(Index d);

// ---------------------------------------------------------------------------
// Operator-space utilities
// ---------------------------------------------------------------------------

/// Gram-Schmidt in the trace inner product; drops inputs whose norm after
/// projection falls below tol::rank. Throws if every input is dropped.
ObservableSpace orthonormalize(std::span<const HermitianOperator> ops, std::string label = "span");

/// Component of x orthogonal to span(space).
HermitianOperator projection_residual(const HermitianOperator& x, const ObservableSpace& space);

/// True if every basis element of `sub` lies in span(`super`) to `tolerance`.
bool is_subspace(const ObservableSpace& sub, const ObservableSpace& super, double tolerance = 1e-9);

/// Traceless Hermitian operators commuting with every generator.
ObservableSpace commutant_basis(std::span<const HermitianOperator> generators, Index dim);

/// Smallest space containing the generators and closed under i[X, Y].
ObservableSpace lie_closure(std::span<const HermitianOperator> generators, std::string label = "closure");
ObservableSpace lie_closure(const ObservableSpace& space);

/// exp(i H) for Hermitian H, via eigendecomposition.
ComplexMatrix unitary_exp(const HermitianOperator& h);

// ---------------------------------------------------------------------------
// Random instances (Haar / Hilbert-Schmidt measures)
// ---------------------------------------------------------------------------

ComplexVector random_unit_vector(Index d, std::mt19937_64& rng);
QuantumState random_pure_state(Index d, std::mt19937_64& rng);
QuantumState random_density(Index d, std::mt19937_64& rng);
ComplexMatrix random_unitary(Index d, std::mt19937_64& rng);
HermitianOperator random_hermitian(Index d, std::mt19937_64& rng);

}  // namespace ge

#endif  // GE_OPERATOR_CORE_HPP

#include "ge/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/SVD>

namespace ge {

namespace {

std::string dim_message(const char* what, Index a, Index b)
{
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    return os.str();
}

void require_same_dim(const char* what, Index a, Index b)
{
    if (a != b)
        throw DimensionError(dim_message(what, a, b));
}

bool all_finite(const ComplexMatrix& m)
{
    return m.real().allFinite() && m.imag().allFinite();
}

}  // namespace

// ---------------------------------------------------------------------------
// HermitianOperator
// ---------------------------------------------------------------------------

HermitianOperator::HermitianOperator(const ComplexMatrix& m)
{
    if (m.rows() != m.cols() || m.rows() == 0)
        throw InvalidOperator("operator must be a nonempty square matrix");
    if (!all_finite(m))
        throw InvalidOperator("operator has non-finite entries");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol::hermitian * scale)
        throw InvalidOperator("operator is not Hermitian");
    m_matrix = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const
{
    require_same_dim("operator sum", dim(), o.dim());
    return HermitianOperator(m_matrix + o.m_matrix);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const
{
    require_same_dim("operator difference", dim(), o.dim());
    return HermitianOperator(m_matrix - o.m_matrix);
}

HermitianOperator HermitianOperator::operator*(double s) const
{
    return HermitianOperator(s * m_matrix);
}

// ---------------------------------------------------------------------------
// QuantumState
// ---------------------------------------------------------------------------

QuantumState QuantumState::pure(const ComplexVector& amplitudes)
{
    if (amplitudes.size() == 0)
        throw InvalidState("state vector is empty");
    if (!amplitudes.real().allFinite() || !amplitudes.imag().allFinite())
        throw InvalidState("state vector has non-finite entries");
    if (std::abs(amplitudes.norm() - 1.0) > tol::hermitian)
        throw InvalidState("state vector is not normalized");
    return QuantumState(amplitudes);
}

QuantumState QuantumState::density(const ComplexMatrix& rho)
{
    HermitianOperator h(rho);  // Hermiticity and shape checks
    if (std::abs(h.trace() - 1.0) > tol::hermitian)
        throw InvalidState("density matrix does not have unit trace");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix(), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw InvalidState("density matrix is not positive semidefinite");
    return QuantumState(h.matrix());
}

Index QuantumState::dim() const
{
    if (is_pure())
        return std::get<ComplexVector>(m_repr).size();
    return std::get<ComplexMatrix>(m_repr).rows();
}

const ComplexVector& QuantumState::amplitudes() const
{
    if (!is_pure())
        throw InvalidState("state is not given as a pure amplitude vector");
    return std::get<ComplexVector>(m_repr);
}

ComplexMatrix QuantumState::density_matrix() const
{
    if (is_pure()) {
        const auto& psi = std::get<ComplexVector>(m_repr);
        return psi * psi.adjoint();
    }
    return std::get<ComplexMatrix>(m_repr);
}

double QuantumState::purity() const
{
    if (is_pure())
        return 1.0;
    const auto& rho = std::get<ComplexMatrix>(m_repr);
    return rho.squaredNorm();
}

// ---------------------------------------------------------------------------
// ObservableSpace
// ---------------------------------------------------------------------------

ObservableSpace::ObservableSpace(Index dim, std::string label) : m_dim(dim), m_label(std::move(label))
{
    if (dim < 1)
        throw DimensionError("observable space needs a positive Hilbert dimension");
}

ObservableSpace::ObservableSpace(Index dim, std::vector<HermitianOperator> basis, std::string label, Flags flags)
    : m_dim(dim), m_basis(std::move(basis)), m_label(std::move(label)), m_flags(flags)
{
    if (dim < 1)
        throw DimensionError("observable space needs a positive Hilbert dimension");
    for (std::size_t a = 0; a < m_basis.size(); ++a) {
        require_same_dim("observable space basis", m_basis[a].dim(), dim);
        if (!m_flags.contains_identity && std::abs(m_basis[a].trace()) > tol::equality)
            throw InvalidOperator("basis element " + std::to_string(a) + " of '" + m_label + "' is not traceless");
        for (std::size_t b = 0; b <= a; ++b) {
            const double g = trace_inner_product(m_basis[a], m_basis[b]);
            const double expected = (a == b) ? 1.0 : 0.0;
            if (std::abs(g - expected) > tol::equality)
                throw InvalidOperator("basis of '" + m_label + "' is not trace-orthonormal");
        }
    }
}

ObservableSpace ObservableSpace::relabeled(std::string label) const
{
    ObservableSpace out = *this;
    out.m_label = std::move(label);
    return out;
}

ObservableSpace ObservableSpace::with_flags(Flags flags) const
{
    ObservableSpace out = *this;
    out.m_flags = flags;
    return out;
}

// ---------------------------------------------------------------------------
// Inner products, expectations
// ---------------------------------------------------------------------------

double trace_inner_product(const HermitianOperator& a, const HermitianOperator& b)
{
    require_same_dim("trace_inner_product", a.dim(), b.dim());
    // Tr(AB) = sum_ij A_ij B_ji
    const Complex t = a.matrix().cwiseProduct(b.matrix().transpose()).sum();
    if (std::abs(t.imag()) > 1e-12 * std::max(1.0, a.norm() * b.norm()))
        throw InvalidOperator("trace inner product has a non-vanishing imaginary part");
    return t.real();
}

double expectation(const QuantumState& state, const HermitianOperator& x)
{
    require_same_dim("expectation", state.dim(), x.dim());
    Complex value;
    if (state.is_pure()) {
        const auto& psi = state.amplitudes();
        value = psi.dot(x.matrix() * psi);
    } else {
        value = state.density_matrix().cwiseProduct(x.matrix().transpose()).sum();
    }
    if (std::abs(value.imag()) > tol::equality * std::max(1.0, x.norm()))
        throw InvalidOperator("expectation value has a non-vanishing imaginary part");
    return value.real();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_same_dim("commutator", a.rows(), b.rows());
    return a * b - b * a;
}

HermitianOperator lie_bracket(const HermitianOperator& x, const HermitianOperator& y)
{
    return HermitianOperator(Complex(0.0, 1.0) * commutator(x.matrix(), y.matrix()));
}

// ---------------------------------------------------------------------------
// Tensor structure
// ---------------------------------------------------------------------------

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return kron(a, b);
}

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b)
{
    return HermitianOperator(kron(a.matrix(), b.matrix()));
}

QuantumState tensor(const QuantumState& a, const QuantumState& b)
{
    if (a.is_pure() && b.is_pure()) {
        const ComplexMatrix v = kron(a.amplitudes(), b.amplitudes());
        return QuantumState::pure(v.col(0));
    }
    return QuantumState::density(kron(a.density_matrix(), b.density_matrix()));
}

QuantumState partial_trace(const QuantumState& state, std::span<const Index> dims, std::span<const Index> keep)
{
    if (dims.empty())
        throw DimensionError("partial_trace: empty factor list");
    Index total = 1;
    for (Index d : dims) {
        if (d < 1)
            throw DimensionError("partial_trace: factor dimensions must be positive");
        total *= d;
    }
    if (total != state.dim())
        throw DimensionError(dim_message("partial_trace", total, state.dim()));
    if (keep.empty())
        throw DimensionError("partial_trace: nothing to keep");

    const Index n = static_cast<Index>(dims.size());
    std::vector<bool> kept(n, false);
    for (Index k : keep) {
        if (k < 0 || k >= n || kept[k])
            throw DimensionError("partial_trace: invalid or repeated factor index " + std::to_string(k));
        kept[k] = true;
    }

    // Split every full index into (kept, traced) indices, most significant
    // factor first within each group.
    std::vector<Index> kept_idx(total), traced_idx(total);
    Index kept_dim = 1, traced_dim = 1;
    for (Index f = 0; f < n; ++f)
        (kept[f] ? kept_dim : traced_dim) *= dims[f];
    for (Index i = 0; i < total; ++i) {
        Index rem = i, stride = total, ki = 0, ti = 0;
        for (Index f = 0; f < n; ++f) {
            stride /= dims[f];
            const Index digit = rem / stride;
            rem %= stride;
            if (kept[f])
                ki = ki * dims[f] + digit;
            else
                ti = ti * dims[f] + digit;
        }
        kept_idx[i] = ki;
        traced_idx[i] = ti;
    }

    ComplexMatrix reduced;
    if (state.is_pure()) {
        const auto& psi = state.amplitudes();
        ComplexMatrix m = ComplexMatrix::Zero(kept_dim, traced_dim);
        for (Index i = 0; i < total; ++i)
            m(kept_idx[i], traced_idx[i]) = psi(i);
        reduced = m * m.adjoint();
    } else {
        const ComplexMatrix rho = state.density_matrix();
        std::vector<Index> full(kept_dim * traced_dim);
        for (Index i = 0; i < total; ++i)
            full[kept_idx[i] * traced_dim + traced_idx[i]] = i;
        reduced = ComplexMatrix::Zero(kept_dim, kept_dim);
        for (Index a = 0; a < kept_dim; ++a)
            for (Index b = 0; b < kept_dim; ++b)
                for (Index t = 0; t < traced_dim; ++t)
                    reduced(a, b) += rho(full[a * traced_dim + t], full[b * traced_dim + t]);
    }
    // Renormalize away rounding so the density invariants hold exactly.
    reduced = 0.5 * (reduced + reduced.adjoint());
    reduced /= reduced.trace().real();
    return QuantumState::density(reduced);
}

// ---------------------------------------------------------------------------
// Standard operators
// ---------------------------------------------------------------------------

ComplexMatrix identity(Index d)
{
    return ComplexMatrix::Identity(d, d);
}

ComplexMatrix pauli(char which)
{
    const Complex i(0.0, 1.0);
    ComplexMatrix m(2, 2);
    switch (which) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw InvalidOperator(std::string("unknown Pauli letter '") + which + "'");
    }
    return m;
}

ComplexMatrix pauli_string(const std::string& word)
{
    if (word.empty())
        throw InvalidOperator("empty Pauli word");
    ComplexMatrix out = pauli(word.front());
    for (std::size_t k = 1; k < word.size(); ++k)
        out = kron(out, pauli(word[k]));
    return out;
}

std::vector<HermitianOperator> gell_mann_basis(Index d)
{
    if (d < 1)
        throw DimensionError("gell_mann_basis: dimension must be positive");
    const Complex i(0.0, 1.0);
    const double r2 = std::sqrt(0.5);
    std::vector<HermitianOperator> out;
    out.reserve(static_cast<std::size_t>(d * d - 1));
    for (Index j = 0; j < d; ++j)
        for (Index k = j + 1; k < d; ++k) {
            ComplexMatrix m = ComplexMatrix::Zero(d, d);
            m(j, k) = m(k, j) = r2;
            out.emplace_back(m);
        }
    for (Index j = 0; j < d; ++j)
        for (Index k = j + 1; k < d; ++k) {
            ComplexMatrix m = ComplexMatrix::Zero(d, d);
            m(j, k) = -i * r2;
            m(k, j) = i * r2;
            out.emplace_back(m);
        }
    for (Index l = 1; l < d; ++l) {
        ComplexMatrix m = ComplexMatrix::Zero(d, d);
        const double norm = std::sqrt(static_cast<double>(l * (l + 1)));
        for (Index j = 0; j < l; ++j)
            m(j, j) = 1.0 / norm;
        m(l, l) = -static_cast<double>(l) / norm;
        out.emplace_back(m);
    }
    return out;
}

ObservableSpace full_traceless_space(Index d)
{
    return ObservableSpace(d, gell_mann_basis(d), "su(" + std::to_string(d) + ")",
                           ObservableSpace::Flags{.contains_identity = false, .irreducible_lie = true});
}

// ---------------------------------------------------------------------------
// Operator-space utilities
// ---------------------------------------------------------------------------

namespace {

// Modified Gram-Schmidt with one reorthogonalization pass. Returns false if
// the residual norm drops below tol::rank.
bool orthogonalize_against(ComplexMatrix& v, const std::vector<HermitianOperator>& basis)
{
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) {
            const double c = b.matrix().cwiseProduct(v.transpose()).sum().real();
            v -= c * b.matrix();
        }
    const double n = v.norm();
    if (n < tol::rank)
        return false;
    v /= n;
    return true;
}

bool has_trace(const std::vector<HermitianOperator>& basis)
{
    return std::any_of(basis.begin(), basis.end(),
                       [](const HermitianOperator& b) { return std::abs(b.trace()) > tol::rank; });
}

}  // namespace

ObservableSpace orthonormalize(std::span<const HermitianOperator> ops, std::string label)
{
    if (ops.empty())
        throw InvalidOperator("orthonormalize: empty operator list");
    const Index d = ops.front().dim();
    std::vector<HermitianOperator> basis;
    for (const auto& op : ops) {
        require_same_dim("orthonormalize", op.dim(), d);
        ComplexMatrix v = op.matrix();
        if (orthogonalize_against(v, basis))
            basis.emplace_back(v);
    }
    if (basis.empty())
        throw InvalidOperator("orthonormalize: all inputs are numerically zero");
    const ObservableSpace::Flags flags{.contains_identity = has_trace(basis), .irreducible_lie = false};
    return ObservableSpace(d, std::move(basis), std::move(label), flags);
}

HermitianOperator projection_residual(const HermitianOperator& x, const ObservableSpace& space)
{
    require_same_dim("projection_residual", x.dim(), space.dim());
    ComplexMatrix v = x.matrix();
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : space.basis())
            v -= trace_inner_product(b, HermitianOperator(v)) * b.matrix();
    return HermitianOperator(v);
}

bool is_subspace(const ObservableSpace& sub, const ObservableSpace& super, double tolerance)
{
    if (sub.dim() != super.dim())
        return false;
    return std::all_of(sub.basis().begin(), sub.basis().end(), [&](const HermitianOperator& x) {
        return projection_residual(x, super).norm() <= tolerance;
    });
}

ObservableSpace commutant_basis(std::span<const HermitianOperator> generators, Index dim)
{
    const auto candidates = gell_mann_basis(dim);
    const std::string label = "commutant";
    if (generators.empty())
        return ObservableSpace(dim, candidates, label);

    // Column a holds the real vectorization of i[G_a, g] for all generators g.
    const Index block = 2 * dim * dim;
    const Index rows = block * static_cast<Index>(generators.size());
    const Index cols = static_cast<Index>(candidates.size());
    Eigen::MatrixXd system = Eigen::MatrixXd::Zero(rows, cols);
    for (Index a = 0; a < cols; ++a)
        for (std::size_t g = 0; g < generators.size(); ++g) {
            require_same_dim("commutant_basis", generators[g].dim(), dim);
            const ComplexMatrix c = commutator(candidates[a].matrix(), generators[g].matrix());
            const Index off = block * static_cast<Index>(g);
            system.block(off, a, dim * dim, 1) = c.real().reshaped();
            system.block(off + dim * dim, a, dim * dim, 1) = c.imag().reshaped();
        }

    Eigen::BDCSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Index rank = 0;
    for (Index k = 0; k < sv.size(); ++k)
        if (sv(k) > tol::rank)
            ++rank;

    std::vector<HermitianOperator> null_ops;
    for (Index k = rank; k < cols; ++k) {
        ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
        for (Index a = 0; a < cols; ++a)
            m += svd.matrixV()(a, k) * candidates[a].matrix();
        null_ops.emplace_back(m);
    }
    if (null_ops.empty())
        return ObservableSpace(dim, label);
    return orthonormalize(null_ops, label);
}

ObservableSpace lie_closure(std::span<const HermitianOperator> generators, std::string label)
{
    if (generators.empty())
        throw InvalidOperator("lie_closure: no generators");
    std::vector<HermitianOperator> basis;
    const Index d = generators.front().dim();
    for (const auto& g : generators) {
        require_same_dim("lie_closure", g.dim(), d);
        ComplexMatrix v = g.matrix();
        if (orthogonalize_against(v, basis))
            basis.emplace_back(v);
    }
    if (basis.empty())
        return ObservableSpace(d, std::move(label));

    // Elements appended during the sweep are bracketed with every earlier one
    // once the outer index reaches them.
    for (std::size_t i = 1; i < basis.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            ComplexMatrix v = lie_bracket(basis[i], basis[j]).matrix();
            if (orthogonalize_against(v, basis))
                basis.emplace_back(v);
        }
    const ObservableSpace::Flags flags{.contains_identity = has_trace(basis), .irreducible_lie = false};
    return ObservableSpace(d, std::move(basis), std::move(label), flags);
}

ObservableSpace lie_closure(const ObservableSpace& space)
{
    if (space.empty())
        return space;
    auto closed = lie_closure(space.basis(), space.label());
    if (closed.size() == space.size())
        return closed.with_flags(space.flags());
    return closed;
}

ComplexMatrix unitary_exp(const HermitianOperator& h)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix());
    const ComplexVector phases = (Complex(0.0, 1.0) * es.eigenvalues().cast<Complex>()).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

namespace {

ComplexMatrix ginibre(Index rows, Index cols, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    return g;
}

}  // namespace

ComplexVector random_unit_vector(Index d, std::mt19937_64& rng)
{
    ComplexVector v = ginibre(d, 1, rng).col(0);
    return v / v.norm();
}

QuantumState random_pure_state(Index d, std::mt19937_64& rng)
{
    return QuantumState::pure(random_unit_vector(d, rng));
}

QuantumState random_density(Index d, std::mt19937_64& rng)
{
    const ComplexMatrix g = ginibre(d, d, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho = 0.5 * (rho + rho.adjoint());
    rho /= rho.trace().real();
    return QuantumState::density(rho);
}

ComplexMatrix random_unitary(Index d, std::mt19937_64& rng)
{
    Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(d, d, rng));
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index k = 0; k < d; ++k) {
        const Complex rkk = r(k, k);
        q.col(k) *= rkk / std::abs(rkk);
    }
    return q;
}

HermitianOperator random_hermitian(Index d, std::mt19937_64& rng)
{
    const ComplexMatrix g = ginibre(d, d, rng);
    return HermitianOperator(0.5 * (g + g.adjoint()));
}

}  // namespace ge

#include "ge/coherent.hpp"

#include <cmath>
#include <stdexcept>

#include "ge/purity.hpp"

namespace ge {

ComplexVector SpinSystem::basis_state(double m) const
{
    const double k = j() - m;
    const long idx = std::lround(k);
    if (std::abs(k - static_cast<double>(idx)) > 1e-9 || idx < 0 || idx > twice_j)
        throw std::invalid_argument("|J,m>: m must be one of J, J-1, ..., -J");
    ComplexVector v = ComplexVector::Zero(dim());
    v(idx) = 1.0;
    return v;
}

SpinSystem spin_system(double j)
{
    const double twice = 2.0 * j;
    const long tj = std::lround(twice);
    if (!std::isfinite(j) || tj < 0 || std::abs(twice - static_cast<double>(tj)) > 1e-12)
        throw std::invalid_argument("spin J must be a nonnegative multiple of 1/2");
    if (tj + 1 > max_dimension)
        throw DimensionError("spin J too large");

    const Index d = tj + 1;
    ComplexMatrix raise = ComplexMatrix::Zero(d, d);
    ComplexMatrix jz = ComplexMatrix::Zero(d, d);
    for (Index k = 0; k < d; ++k) {
        const double m = j - static_cast<double>(k);
        jz(k, k) = m;
        if (k > 0)
            raise(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
    const ComplexMatrix lower = raise.adjoint();
    SpinSystem s;
    s.twice_j = static_cast<int>(tj);
    s.jx = HermitianOperator(0.5 * (raise + lower));
    s.jy = HermitianOperator(Complex(0.0, -0.5) * (raise - lower));
    s.jz = HermitianOperator(jz);
    return s;
}

QuantumState scs(const SpinSystem& system, const Eigen::Vector3d& direction)
{
    if (std::abs(direction.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("scs: direction must be a unit vector");
    const ComplexMatrix nj = direction.x() * system.jx.matrix() + direction.y() * system.jy.matrix() +
                             direction.z() * system.jz.matrix();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(nj);
    const Index top = system.dim() - 1;
    if (top > 0 && es.eigenvalues()(top) - es.eigenvalues()(top - 1) < 0.5)
        throw std::logic_error("scs: degenerate top eigenvalue");
    if (std::abs(es.eigenvalues()(top) - system.j()) > tol::equality)
        throw std::logic_error("scs: top eigenvalue differs from J");

    ComplexVector v = es.eigenvectors().col(top);
    Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    v *= std::conj(v(arg)) / std::abs(v(arg));
    v(arg) = std::abs(v(arg));
    v.normalize();
    return QuantumState::pure(v);
}

QuantumState orbit_sample(const ObservableSpace& omega, const QuantumState& reference, std::span<const double> angles)
{
    if (angles.size() != omega.size())
        throw std::invalid_argument("orbit_sample: need one angle per basis element");
    if (reference.dim() != omega.dim())
        throw DimensionError("orbit_sample: reference state dimension differs from the space");
    ComplexMatrix h = ComplexMatrix::Zero(omega.dim(), omega.dim());
    for (std::size_t a = 0; a < angles.size(); ++a)
        h += angles[a] * omega[a].matrix();
    const ComplexMatrix u = unitary_exp(HermitianOperator(h));
    if (reference.is_pure()) {
        ComplexVector v = u * reference.amplitudes();
        v.normalize();
        return QuantumState::pure(v);
    }
    return QuantumState::density(u * reference.density_matrix() * u.adjoint());
}

namespace {

double raw_value(const ObservableSpace& omega, const ComplexVector& psi)
{
    double f = 0.0;
    for (const auto& x : omega.basis()) {
        const double e = psi.dot(x.matrix() * psi).real();
        f += e * e;
    }
    return f;
}

}  // namespace

ComplexVector purity_gradient(const ObservableSpace& omega, const ComplexVector& psi)
{
    if (psi.size() != omega.dim())
        throw DimensionError("purity_gradient: dimension mismatch");
    ComplexVector g = ComplexVector::Zero(psi.size());
    for (const auto& x : omega.basis()) {
        const ComplexVector xpsi = x.matrix() * psi;
        g += (4.0 * psi.dot(xpsi).real()) * xpsi;
    }
    return g;
}

PurityMaximum maximize_purity(const ObservableSpace& omega, const MaxPurityOptions& options)
{
    if (options.restarts < 1)
        throw std::invalid_argument("maximize_purity: need at least one restart");
    std::mt19937_64 rng(options.seed);
    PurityMaximum best;
    best.value = -1.0;
    for (int r = 0; r < options.restarts; ++r) {
        ComplexVector psi = random_unit_vector(omega.dim(), rng);
        double f = raw_value(omega, psi);
        double step = options.step;
        for (int it = 0; it < options.max_iterations; ++it) {
            const ComplexVector g = purity_gradient(omega, psi);
            const ComplexVector tangent = g - psi.dot(g).real() * psi;
            if (tangent.norm() < 1e-14)
                break;
            const ComplexVector candidate = (psi + step * tangent).normalized();
            const double fc = raw_value(omega, candidate);
            if (fc > f) {
                const double gain = fc - f;
                psi = candidate;
                f = fc;
                if (gain < options.min_improvement)
                    break;
            } else {
                step *= 0.5;
                if (step < 1e-14)
                    break;
            }
        }
        if (f > best.value) {
            best.value = f;
            best.argmax = psi;
        }
    }
    return best;
}

double max_purity_estimate(const ObservableSpace& omega, const MaxPurityOptions& options)
{
    const ObservableSpace sector = traceless_sector(omega);
    if (sector.empty())
        return 0.0;
    const double value = maximize_purity(sector, options).value;
    const double bound = 1.0 - 1.0 / static_cast<double>(omega.dim());
    if (value > bound + 1e-8)
        throw std::logic_error("max_purity_estimate exceeds the 1 - 1/d bound");
    return value;
}

}  // namespace ge

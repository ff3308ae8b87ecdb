#include "ge/purity.hpp"

#include <cmath>
#include <stdexcept>

#include "ge/coherent.hpp"

namespace ge {

const char* to_string(TheoremDirection d)
{
    return d == TheoremDirection::iff ? "iff" : "sufficient";
}

namespace {

void require_dims(const char* what, Index a, Index b)
{
    if (a != b)
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                             std::to_string(b) + ")");
}

void require_reference(double max_reference)
{
    if (!std::isfinite(max_reference) || max_reference <= 0.0)
        throw std::invalid_argument("max_reference must be a positive finite number");
}

}  // namespace

HermitianOperator project_onto(const QuantumState& state, const ObservableSpace& omega)
{
    require_dims("project_onto", state.dim(), omega.dim());
    ComplexMatrix out = ComplexMatrix::Zero(omega.dim(), omega.dim());
    for (const auto& x : omega.basis())
        out += expectation(state, x) * x.matrix();
    return HermitianOperator(out);
}

HermitianOperator project_onto(const HermitianOperator& op, const ObservableSpace& omega)
{
    require_dims("project_onto", op.dim(), omega.dim());
    ComplexMatrix out = ComplexMatrix::Zero(omega.dim(), omega.dim());
    for (const auto& x : omega.basis())
        out += trace_inner_product(op, x) * x.matrix();
    return HermitianOperator(out);
}

double omega_purity(const QuantumState& state, const ObservableSpace& omega)
{
    require_dims("omega_purity", state.dim(), omega.dim());
    double p = 0.0;
    for (const auto& x : omega.basis()) {
        const double e = expectation(state, x);
        p += e * e;
    }
    if (p > state.purity() + tol::equality)
        throw std::logic_error("omega_purity exceeds Tr(rho^2)");
    return p;
}

ObservableSpace traceless_sector(const ObservableSpace& omega)
{
    if (!omega.flags().contains_identity)
        return omega;
    const Index d = omega.dim();
    std::vector<HermitianOperator> parts;
    for (const auto& x : omega.basis())
        parts.emplace_back(x.matrix() - (x.trace() / static_cast<double>(d)) * identity(d));
    // An identity-only space has an empty traceless sector.
    std::vector<HermitianOperator> nonzero;
    for (auto& p : parts)
        if (p.norm() > tol::rank)
            nonzero.push_back(p);
    if (nonzero.empty())
        return ObservableSpace(d, omega.label() + "/traceless");
    auto out = orthonormalize(nonzero, omega.label());
    return out.with_flags({.contains_identity = false, .irreducible_lie = omega.flags().irreducible_lie});
}

namespace {

PurityReport make_report(const QuantumState& state, const ObservableSpace& omega, double max_reference)
{
    require_reference(max_reference);
    PurityReport r;
    r.raw = omega_purity(state, omega);
    r.max_reference = max_reference;
    r.omega_label = omega.label();
    const double sector = omega.flags().contains_identity ? omega_purity(state, traceless_sector(omega)) : r.raw;
    r.rescaled = sector / max_reference;
    if (r.rescaled > 1.0 + 1e-8)
        throw std::invalid_argument("max_reference is smaller than the purity of the given state");
    return r;
}

}  // namespace

PurityReport rescaled_purity(const QuantumState& state, const ObservableSpace& omega,
                             std::optional<double> max_reference)
{
    require_dims("rescaled_purity", state.dim(), omega.dim());
    if (max_reference)
        return make_report(state, omega, *max_reference);
    return rescaled_purity(state, omega, MaxPurityOptions{});
}

PurityReport rescaled_purity(const QuantumState& state, const ObservableSpace& omega,
                             const MaxPurityOptions& options)
{
    require_dims("rescaled_purity", state.dim(), omega.dim());
    return make_report(state, omega, max_purity_estimate(omega, options));
}

double local_purity_formula(const QuantumState& psi, int n, Index d0)
{
    if (!psi.is_pure())
        throw InvalidState("local_purity_formula expects a pure state");
    if (n < 1 || d0 < 2)
        throw std::invalid_argument("local_purity_formula: need n >= 1 and d0 >= 2");
    Index total = 1;
    for (int k = 0; k < n; ++k)
        total *= d0;
    require_dims("local_purity_formula", psi.dim(), total);

    const std::vector<Index> dims(static_cast<std::size_t>(n), d0);
    double mean = 0.0;
    for (Index site = 0; site < n; ++site) {
        const Index keep[] = {site};
        mean += partial_trace(psi, dims, keep).purity();
    }
    mean /= n;
    const double d = static_cast<double>(d0);
    return d / (d - 1.0) * (mean - 1.0 / d);
}

double meyer_wallach_q(const QuantumState& psi)
{
    const Index d = psi.dim();
    int n = 0;
    for (Index v = d; v > 1; v >>= 1) {
        if (v & 1)
            throw DimensionError("meyer_wallach_q: dimension is not a power of two");
        ++n;
    }
    if (n == 0)
        throw DimensionError("meyer_wallach_q: need at least one qubit");
    return 1.0 - local_purity_formula(psi, n, 2);
}

UnentanglementVerdict is_generalized_unentangled(const QuantumState& psi, const ObservableSpace& omega,
                                                 double max_reference, double tolerance)
{
    if (!psi.is_pure())
        throw InvalidState("is_generalized_unentangled decides pure states only");
    const PurityReport report = make_report(psi, omega, max_reference);
    UnentanglementVerdict v;
    v.rescaled = report.rescaled;
    v.unentangled = report.rescaled >= 1.0 - tolerance;
    v.direction = omega.flags().irreducible_lie ? TheoremDirection::iff : TheoremDirection::sufficient_only;
    return v;
}

bool expectations_indistinguishable(const QuantumState& s1, const QuantumState& s2, const ObservableSpace& omega,
                                    double tolerance)
{
    require_dims("expectations_indistinguishable", s1.dim(), s2.dim());
    require_dims("expectations_indistinguishable", s1.dim(), omega.dim());
    for (const auto& x : omega.basis())
        if (std::abs(expectation(s1, x) - expectation(s2, x)) >= tolerance)
            return false;
    return true;
}

double invariant_uncertainty(const QuantumState& psi, const std::vector<HermitianOperator>& generators)
{
    double total = 0.0;
    for (const auto& g : generators) {
        const double mean = expectation(psi, g);
        const double second = expectation(psi, HermitianOperator(g.matrix() * g.matrix()));
        total += second - mean * mean;
    }
    return total;
}

}  // namespace ge

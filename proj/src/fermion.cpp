#include "ge/fermion.hpp"

#include <cmath>
#include <stdexcept>

namespace ge {

ComplexVector FockRegister::vacuum() const
{
    ComplexVector v = ComplexVector::Zero(dim());
    v(0) = 1.0;
    return v;
}

ComplexMatrix FockRegister::occupation(int mode) const
{
    if (mode < 1 || mode > m)
        throw std::invalid_argument("mode index out of range");
    return cdag[mode - 1] * c[mode - 1];
}

FockRegister fock_register(int m)
{
    if (m < 1 || m > 10)
        throw std::invalid_argument("fock_register: mode count must be in [1, 10]");
    FockRegister reg;
    reg.m = m;
    const Index d = reg.dim();
    for (int j = 0; j < m; ++j) {
        ComplexMatrix create = ComplexMatrix::Zero(d, d);
        for (Index s = 0; s < d; ++s) {
            if (s & (Index{1} << j))
                continue;
            int parity = 0;
            for (int k = 0; k < j; ++k)
                parity += static_cast<int>((s >> k) & 1);
            create(s | (Index{1} << j), s) = (parity % 2 == 0) ? 1.0 : -1.0;
        }
        reg.c.push_back(create.adjoint());
        reg.cdag.push_back(create);
    }
    return reg;
}

HermitianOperator number_operator(const FockRegister& reg)
{
    ComplexMatrix n = ComplexMatrix::Zero(reg.dim(), reg.dim());
    for (int j = 1; j <= reg.m; ++j)
        n += reg.occupation(j);
    return HermitianOperator(n);
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return a * b + b * a;
}

namespace {

void require_two_modes(const FockRegister& reg)
{
    if (reg.m != 2)
        throw std::invalid_argument("fermionic u(2)/so(4) algebras are defined for two modes");
}

}  // namespace

ObservableSpace fermionic_u2(const FockRegister& reg)
{
    require_two_modes(reg);
    const Complex i(0.0, 1.0);
    const double r2 = std::sqrt(0.5);
    const ComplexMatrix half = 0.5 * identity(4);
    const ComplexMatrix hop = reg.cdag[0] * reg.c[1];
    std::vector<HermitianOperator> basis{
        HermitianOperator(reg.occupation(1) - half),
        HermitianOperator(reg.occupation(2) - half),
        HermitianOperator(r2 * (hop + hop.adjoint())),
        HermitianOperator(i * r2 * (hop - hop.adjoint())),
    };
    return ObservableSpace(4, std::move(basis), "u2-fermi");
}

ObservableSpace fermionic_so4(const FockRegister& reg)
{
    require_two_modes(reg);
    const Complex i(0.0, 1.0);
    const double r2 = std::sqrt(0.5);
    const ComplexMatrix half = 0.5 * identity(4);
    const ComplexMatrix hop = reg.cdag[0] * reg.c[1];
    const ComplexMatrix pair = reg.cdag[0] * reg.cdag[1];
    std::vector<HermitianOperator> candidates{
        HermitianOperator(r2 * (hop + hop.adjoint())),
        HermitianOperator(i * r2 * (hop - hop.adjoint())),
        HermitianOperator(r2 * (pair + pair.adjoint())),
        HermitianOperator(i * r2 * (pair - pair.adjoint())),
        HermitianOperator(reg.occupation(1) - half),
        HermitianOperator(reg.occupation(2) - half),
    };
    return orthonormalize(candidates, "so4-fermi").with_flags({});
}

QuantumState jw_state_dictionary(const std::string& word)
{
    const FockRegister reg = fock_register(2);
    const ComplexVector vac = reg.vacuum();
    if (word == "00")
        return QuantumState::pure(vac);
    if (word == "01")
        return QuantumState::pure(reg.cdag[0] * vac);
    if (word == "10")
        return QuantumState::pure(reg.cdag[1] * vac);
    if (word == "11")
        return QuantumState::pure(reg.cdag[0] * (reg.cdag[1] * vac));
    throw std::invalid_argument("jw_state_dictionary: expected one of 00, 01, 10, 11, got '" + word + "'");
}

ComplexMatrix jw_dictionary_matrix()
{
    ComplexMatrix u(4, 4);
    const char* words[] = {"00", "01", "10", "11"};
    for (int k = 0; k < 4; ++k)
        u.col(k) = jw_state_dictionary(words[k]).amplitudes();
    return u;
}

QuantumState jw_map(const QuantumState& two_qubit)
{
    if (two_qubit.dim() != 4)
        throw DimensionError("jw_map expects a two-qubit state");
    const ComplexMatrix u = jw_dictionary_matrix();
    if (two_qubit.is_pure())
        return QuantumState::pure(u * two_qubit.amplitudes());
    return QuantumState::density(u * two_qubit.density_matrix() * u.adjoint());
}

}  // namespace ge

#ifndef GE_FERMION_HPP
#define GE_FERMION_HPP

#include <string>
#include <vector>

#include "ge/operator_core.hpp"

namespace ge {

/// Jordan-Wigner fermionic modes on (C^2)^m.
///
/// Occupation basis: mode j (1-based) is bit j-1 of the basis index, so the
/// vacuum is index 0 and c_1^dag |vac> is index 1. Creation operators carry
/// the parity string of all lower-indexed modes,
///   c_j^dag = prod_{k<j} (1 - 2 n_k) * raise_j,
/// which gives S_+^(2) = (1 - 2 n_1) c_2^dag for two modes. All entries are
/// 0 or +-1, so the canonical anticommutation relations hold exactly.
struct FockRegister
{
    int m = 0;
    std::vector<ComplexMatrix> c;     ///< annihilators, index j-1
    std::vector<ComplexMatrix> cdag;  ///< creators, index j-1

    Index dim() const { return Index{1} << m; }
    ComplexVector vacuum() const;
    /// n_j = c_j^dag c_j, 1-based mode index.
    ComplexMatrix occupation(int mode) const;
};

/// Throws std::invalid_argument unless 1 <= m <= 10.
FockRegister fock_register(int m);

/// N = sum_j c_j^dag c_j.
HermitianOperator number_operator(const FockRegister& reg);

/// Anticommutator AB + BA.
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// {n_1 - 1/2, n_2 - 1/2, (c1^dag c2 + c2^dag c1)/sqrt2, i(c1^dag c2 - c2^dag c1)/sqrt2}.
ObservableSpace fermionic_u2(const FockRegister& reg);

/// Hermitian parts of all bilinears c_i^dag c_j, c_i^dag c_j^dag, c_i c_j:
/// six elements spanning so(4).
ObservableSpace fermionic_so4(const FockRegister& reg);

/// Two-qubit word ("00", "01", "10", "11") to the matching Fock state:
/// 00 -> |vac>, 01 -> c1^dag|vac>, 10 -> c2^dag|vac>, 11 -> c1^dag c2^dag|vac>.
QuantumState jw_state_dictionary(const std::string& word);

/// Unitary sending the two-qubit computational basis to the Fock basis
/// through jw_state_dictionary (column k is the image of basis word k).
ComplexMatrix jw_dictionary_matrix();

/// Image of a two-qubit state under the dictionary.
QuantumState jw_map(const QuantumState& two_qubit);

}  // namespace ge

#endif  // GE_FERMION_HPP

#include <doctest.h>

#include <cmath>

#include "ge/algebra_catalog.hpp"
#include "ge/fermion.hpp"
#include "ge/purity.hpp"
#include "ge/state_io.hpp"
#include "support.hpp"

using namespace ge;

TEST_CASE("canonical anticommutation relations hold exactly")
{
    for (int m : {1, 2, 3}) {
        const FockRegister reg = fock_register(m);
        const ComplexMatrix one = identity(reg.dim());
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const ComplexMatrix cc = anticommutator(reg.c[i], reg.cdag[j]);
                CHECK(cc == (i == j ? one : ComplexMatrix::Zero(reg.dim(), reg.dim())));
                CHECK(anticommutator(reg.c[i], reg.c[j]).isZero(0.0));
                CHECK(anticommutator(reg.cdag[i], reg.cdag[j]).isZero(0.0));
            }
    }
    CHECK_THROWS(fock_register(0));
    CHECK_THROWS(fock_register(11));
}

TEST_CASE("vacuum, occupation and pair state")
{
    const FockRegister reg = fock_register(2);
    const ComplexVector vac = reg.vacuum();
    CHECK(vac(0) == Complex(1.0));
    for (int mode = 1; mode <= 2; ++mode)
        CHECK((reg.c[mode - 1] * vac).isZero(0.0));
    CHECK((reg.cdag[0] * vac)(1) == Complex(1.0));
    CHECK((reg.cdag[1] * vac)(2) == Complex(1.0));

    const ComplexVector pair = reg.cdag[0] * (reg.cdag[1] * vac);
    const Index idx = test::oracle().at("pair_state_index").get<Index>();
    CHECK(pair(idx) == Complex(test::oracle_value("pair_state_sign")));
    CHECK(pair.norm() == doctest::Approx(1.0));
    // Reversed order flips the sign.
    CHECK((reg.cdag[1] * (reg.cdag[0] * vac))(idx) == -pair(idx));
    CHECK_THROWS(reg.occupation(3));
}

TEST_CASE("number operator and S_z")
{
    const FockRegister reg = fock_register(2);
    const HermitianOperator n = number_operator(reg);
    const ComplexMatrix sz = 0.5 * (pauli_string("ZI") + pauli_string("IZ"));
    CHECK((n.matrix() - (identity(4) - sz)).norm() < 1e-15);
    const char* words[] = {"00", "01", "10", "11"};
    const double counts[] = {0, 1, 1, 2};
    for (int k = 0; k < 4; ++k)
        CHECK(expectation(jw_state_dictionary(words[k]), n) == doctest::Approx(counts[k]));
}

TEST_CASE("fermionic u(2) matches the z-conserving u(2)")
{
    const FockRegister reg = fock_register(2);
    const ObservableSpace fu2 = fermionic_u2(reg);
    CHECK(fu2.size() == 4);
    CHECK(is_subspace(fu2, z_conserving_u2()));
    CHECK(is_subspace(z_conserving_u2(), fu2));
    CHECK(lie_closure(fu2).size() == 4);
    // Commutes with N.
    const ComplexMatrix n = number_operator(reg).matrix();
    for (const auto& x : fu2.basis())
        CHECK(commutator(x.matrix(), n).norm() < 1e-12);
}

TEST_CASE("fermionic so(4)")
{
    const FockRegister reg = fock_register(2);
    const ObservableSpace so4 = fermionic_so4(reg);
    CHECK(static_cast<int>(so4.size()) == test::oracle().at("so4_dim").get<int>());
    CHECK(lie_closure(so4).size() == so4.size());
    CHECK(is_subspace(fermionic_u2(reg), so4));
    CHECK_THROWS(fermionic_u2(fock_register(3)));
    CHECK_THROWS(fermionic_so4(fock_register(1)));
}

TEST_CASE("qubit to Fock dictionary")
{
    const ComplexMatrix u = jw_dictionary_matrix();
    CHECK((u.adjoint() * u - identity(4)).norm() < 1e-15);
    CHECK_THROWS(jw_state_dictionary("2"));
    CHECK_THROWS_AS(jw_map(test::ket("0")), DimensionError);

    // Bell states keep their u(2) purity through the dictionary.
    const ObservableSpace fu2 = fermionic_u2(fock_register(2));
    for (const char* label : {"phi+", "phi-", "psi+", "psi-"}) {
        const QuantumState q = builtin_state(std::string("bell:") + label);
        const QuantumState f = jw_map(q);
        CHECK(std::abs(omega_purity(q, z_conserving_u2()) - omega_purity(f, fu2)) < 1e-12);
        CHECK(overlap_fidelity(f, builtin_state(std::string("fock:m2:") + label)) == doctest::Approx(1.0));
    }
    // The paired state is u(2)-entangled, the vacuum is not.
    CHECK(std::abs(omega_purity(builtin_state("fock:m2:psi+"), fu2)) < 1e-12);
    CHECK(omega_purity(builtin_state("fock:m2:00"), fu2) > 0.49);

    const QuantumState mixed = QuantumState::density(identity(4) / 4.0);
    CHECK(jw_map(mixed).density_matrix().isApprox(identity(4) / 4.0));
}

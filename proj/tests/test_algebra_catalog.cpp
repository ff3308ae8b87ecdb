#include <doctest.h>

#include <cmath>

#include "ge/algebra_catalog.hpp"
#include "ge/coherent.hpp"
#include "support.hpp"

using namespace ge;

namespace {

void check_orthonormal(const ObservableSpace& s)
{
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(std::abs(s[i].trace()) < 1e-10);
        for (std::size_t j = 0; j < s.size(); ++j)
            CHECK(std::abs(trace_inner_product(s[i], s[j]) - (i == j ? 1.0 : 0.0)) < 1e-10);
    }
}

}  // namespace

TEST_CASE("local algebra sizes")
{
    CHECK(local_algebra(1, 2).size() == 3);
    CHECK(local_algebra(2, 2).size() == 6);
    CHECK(local_algebra(3, 2).size() == 9);
    CHECK(local_algebra(2, 3).size() == 16);
    check_orthonormal(local_algebra(2, 3));
    CHECK(local_algebra(3, 2).flags().irreducible_lie);
    CHECK_THROWS(local_algebra(0, 2));
    CHECK_THROWS(local_algebra(2, 1));
    CHECK_THROWS(local_algebra(11, 2));
}

TEST_CASE("local algebra on two qubits is su(2) + su(2)")
{
    std::vector<std::string> words = {"XI", "YI", "ZI", "IX", "IY", "IZ"};
    const ObservableSpace ref = pauli_string_space(words);
    const ObservableSpace loc = local_algebra(2, 2);
    CHECK(is_subspace(ref, loc));
    CHECK(is_subspace(loc, ref));
}

TEST_CASE("local algebras are Lie closed")
{
    CHECK(lie_closure(local_algebra(2, 2)).size() == 6);
    CHECK(lie_closure(local_algebra(2, 3)).size() == 16);
}

TEST_CASE("pauli string spaces")
{
    std::vector<std::string> w = {"XX", "ZZ", "XY", "YZ"};
    const ObservableSpace s = pauli_string_space(w);
    CHECK(s.size() == 4);
    check_orthonormal(s);
    CHECK(omega_prime_loc().size() == 4);
    // Not a Lie algebra: closing it adds elements.
    CHECK(lie_closure(omega_prime_loc()).size() > 4);

    std::vector<std::string> z = {"Z"};
    CHECK(pauli_string_space(z).size() == 1);

    std::vector<std::string> dup = {"XZ", "XZ", "ZX"};
    CHECK(pauli_string_space(dup).size() == 2);

    std::vector<std::string> bad = {"XQ"};
    CHECK_THROWS(pauli_string_space(bad));
    std::vector<std::string> ragged = {"XX", "X"};
    CHECK_THROWS(pauli_string_space(ragged));
}

TEST_CASE("three-qubit catalogue")
{
    CHECK(omega1().size() == 9);
    CHECK(static_cast<int>(omega4().size()) == test::oracle().at("omega4_dim").get<int>());
    CHECK(omega3().size() == 18);
    CHECK(is_subspace(omega3(), omega4()));

    const ObservableSpace lit = bilocal_pair_algebra();
    CHECK(static_cast<int>(lit.size()) == test::oracle().at("omega2_literal_dim").get<int>());
    check_orthonormal(lit);
    CHECK(is_subspace(omega1(), lit));
    CHECK(lie_closure(lit).size() == lit.size());
    CHECK(bilocal_pair_paper_values().size() == 15);
}

TEST_CASE("z-conserving u(2)")
{
    const ObservableSpace u2 = z_conserving_u2();
    CHECK(u2.size() == 4);
    check_orthonormal(u2);
    CHECK(lie_closure(u2).size() == 4);
    const ComplexMatrix sz = 0.5 * (pauli_string("ZI") + pauli_string("IZ"));
    for (const auto& x : u2.basis())
        CHECK(commutator(x.matrix(), sz).norm() < 1e-12);
    const HermitianOperator zz(pauli_string("ZZ"));
    CHECK(projection_residual(zz, u2).norm() > 0.9 * zz.norm());
}

TEST_CASE("spin algebras")
{
    const ObservableSpace half = spin_su2(0.5);
    CHECK(half.size() == 3);
    CHECK(is_subspace(half, full_traceless_space(2)));
    CHECK(spin_su2(2).dim() == 5);
    CHECK(spin_su2(2).flags().irreducible_lie);
    CHECK_THROWS(spin_su2(0.3));

    CHECK(restricted_local_spins(1).size() == 6);
    CHECK(restricted_local_spins(1).dim() == 9);
    CHECK(is_subspace(restricted_local_spins(0.5), local_algebra(2, 2)));
    CHECK(is_subspace(local_algebra(2, 2), restricted_local_spins(0.5)));
}

TEST_CASE("reference maxima")
{
    const auto loc = reference_max_purity(algebra::Local{3, 2});
    REQUIRE(loc);
    CHECK(loc->source == ReferenceSource::analytic);
    CHECK(std::abs(loc->value - test::oracle_value("p1_max_raw")) < 1e-12);

    const auto paper = reference_max_purity(algebra::BilocalPair{true});
    REQUIRE(paper);
    CHECK(std::abs(paper->value - test::oracle_value("p2_paper_max_raw")) < 1e-12);
    CHECK_FALSE(reference_max_purity(algebra::BilocalPair{false}));
    CHECK_FALSE(reference_max_purity(algebra::Omega3{}));

    for (const auto& [key, value] : test::oracle().at("spin_max_raw").items()) {
        const auto ref = reference_max_purity(algebra::SpinJ{std::stod(key)});
        REQUIRE(ref);
        CHECK(std::abs(ref->value - value.get<double>()) < 1e-12);
    }

    const auto u2 = reference_max_purity(algebra::ZConservingU2{});
    REQUIRE(u2);
    CHECK(u2->source == ReferenceSource::cached_numeric);
    CHECK(std::abs(u2->value - test::oracle_value("u2_max_raw")) < 1e-6);
}

TEST_CASE("spin pair reference matches the optimizer")
{
    const double j = 1.0;
    const double analytic = reference_max_purity(algebra::SpinPair{j})->value;
    const double numeric = max_purity_estimate(restricted_local_spins(j));
    CHECK(std::abs(analytic - numeric) < 1e-6);
}

TEST_CASE("build_algebra labels")
{
    CHECK(build_algebra(algebra::ZConservingU2{}).label() == "u2");
    CHECK(build_algebra(algebra::BilocalPair{false}).label() == "omega2-literal");
    CHECK(build_algebra(algebra::SpinJ{1.5}).label() == "su2-spin:3/2");
    CHECK(build_algebra(algebra::FullTraceless{3}).size() == 8);
}

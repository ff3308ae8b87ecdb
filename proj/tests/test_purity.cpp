#include <doctest.h>

#include <cmath>

#include "ge/algebra_catalog.hpp"
#include "ge/coherent.hpp"
#include "ge/purity.hpp"
#include "ge/state_io.hpp"
#include "support.hpp"

using namespace ge;

TEST_CASE("projection onto a space")
{
    const QuantumState mixed = QuantumState::density(ComplexMatrix::Identity(4, 4) / 4.0);
    CHECK(project_onto(mixed, local_algebra(2, 2)).norm() < 1e-15);

    std::vector<HermitianOperator> z = {HermitianOperator(pauli('Z') / std::sqrt(2.0))};
    const ObservableSpace omega(2, z, "z");
    const ComplexMatrix got = project_onto(test::ket("0"), omega).matrix();
    const auto& want = test::oracle().at("proj_00_on_z");
    for (Index r = 0; r < 2; ++r)
        for (Index c = 0; c < 2; ++c)
            CHECK(std::abs(got(r, c) - Complex(want[r][c].get<double>())) < 1e-12);

    std::mt19937_64 rng(3);
    const QuantumState rho = random_density(4, rng);
    const HermitianOperator once = project_onto(rho, z_conserving_u2());
    const HermitianOperator twice = project_onto(once, z_conserving_u2());
    CHECK((once.matrix() - twice.matrix()).norm() < 1e-12);

    CHECK_THROWS_AS(project_onto(test::ket("0"), local_algebra(2, 2)), DimensionError);
}

TEST_CASE("omega purity examples")
{
    CHECK(std::abs(omega_purity(builtin_state("bell:psi+"), z_conserving_u2())) < 1e-15);
    const double vac = omega_purity(test::ket("00"), z_conserving_u2());
    const double phi = omega_purity(builtin_state("bell:phi+"), z_conserving_u2());
    CHECK(std::abs(vac - phi) < 1e-12);
    CHECK(std::abs(phi - test::oracle_value("u2_on_01_plus_10")) < 1e-12);
    CHECK(std::abs(omega_purity(builtin_state("bell:psi+"), z_conserving_u2()) -
                   test::oracle_value("u2_on_00_plus_11")) < 1e-12);

    std::mt19937_64 rng(5);
    for (Index d : {2, 3, 5}) {
        const QuantumState psi = random_pure_state(d, rng);
        CHECK(std::abs(omega_purity(psi, full_traceless_space(d)) - (1.0 - 1.0 / d)) < 1e-12);
    }
    CHECK_THROWS_AS(omega_purity(test::ket("0"), local_algebra(2, 2)), DimensionError);
}

TEST_CASE("three-qubit rescaled purities")
{
    const double ref = reference_max_purity(algebra::Local{3, 2})->value;
    const ObservableSpace o = omega1();
    CHECK(std::abs(rescaled_purity(test::ket("000"), o, ref).rescaled - 1.0) < 1e-10);
    CHECK(std::abs(rescaled_purity(builtin_state("bisep:12"), o, ref).rescaled - 1.0 / 3.0) < 1e-10);
    CHECK(std::abs(rescaled_purity(builtin_state("w:3"), o, ref).rescaled - 1.0 / 9.0) < 1e-10);
    CHECK(std::abs(rescaled_purity(builtin_state("ghz:3"), o, ref).rescaled) < 1e-10);

    for (const char* n : {"product", "b12", "w", "ghz"}) {
        const std::string name = n;
        const std::string builtin = name == "product" ? "basis:000" : name == "b12" ? "bisep:12" : name + ":3";
        CHECK(std::abs(rescaled_purity(builtin_state(builtin), o, ref).rescaled -
                       test::oracle_value("p1_" + name)) < 1e-10);
    }
}

TEST_CASE("pair algebra, both readings")
{
    const std::pair<const char*, const char*> cases[] = {{"product", "basis:000"}, {"b12", "bisep:12"},
                                                         {"b13", "bisep:13"},      {"b23", "bisep:23"},
                                                         {"ghz", "ghz:3"},         {"w", "w:3"}};
    const ObservableSpace paper = bilocal_pair_paper_values();
    const ObservableSpace literal = bilocal_pair_algebra();
    const double literal_max = max_purity_estimate(literal);
    CHECK(std::abs(literal_max - test::oracle_value("p2_literal_max_raw")) < 1e-6);
    for (const auto& [key, name] : cases) {
        const QuantumState s = builtin_state(name);
        CHECK(std::abs(rescaled_purity(s, paper, 3.0 / 8.0).rescaled -
                       test::oracle_value(std::string("p2_paper_") + key)) < 1e-10);
        // The literal space is rescaled by its exact maximum 1/2.
        CHECK(std::abs(rescaled_purity(s, literal, 0.5).rescaled -
                       test::oracle_value(std::string("p2_literal_") + key)) < 1e-10);
    }
}

TEST_CASE("rescaled purity errors")
{
    CHECK_THROWS(rescaled_purity(test::ket("00"), local_algebra(2, 2), 0.0));
    CHECK_THROWS(rescaled_purity(test::ket("00"), local_algebra(2, 2), -1.0));
    // A reference below the true maximum pushes the ratio above one.
    CHECK_THROWS(rescaled_purity(test::ket("00"), local_algebra(2, 2), 0.1));
}

TEST_CASE("rescaled purity without a reference uses the optimizer")
{
    const PurityReport r = rescaled_purity(test::ket("00"), z_conserving_u2());
    CHECK(std::abs(r.max_reference - 0.5) < 1e-6);
    CHECK(std::abs(r.rescaled - 1.0) < 1e-6);
    CHECK(r.omega_label == "u2");
}

TEST_CASE("local purity formula and Meyer-Wallach")
{
    CHECK(local_purity_formula(test::ket("0101"), 4, 2) == doctest::Approx(1.0));
    CHECK(std::abs(local_purity_formula(builtin_state("bell:psi+"), 2, 2)) < 1e-12);
    CHECK(std::abs(local_purity_formula(builtin_state("w:3"), 3, 2) - test::oracle_value("ploc_w")) < 1e-12);
    CHECK(std::abs(meyer_wallach_q(test::ket("000"))) < 1e-12);
    CHECK(std::abs(meyer_wallach_q(builtin_state("ghz:3")) - test::oracle_value("q_ghz")) < 1e-12);
    CHECK(std::abs(meyer_wallach_q(builtin_state("w:3")) - test::oracle_value("q_w")) < 1e-12);
    CHECK_THROWS(local_purity_formula(builtin_state("w:3"), 2, 2));
    CHECK_THROWS(local_purity_formula(QuantumState::density(ComplexMatrix::Identity(4, 4) / 4.0), 2, 2));
}

TEST_CASE("unentanglement verdicts")
{
    const double ref3 = reference_max_purity(algebra::SpinJ{3.0})->value;
    const auto surface = is_generalized_unentangled(builtin_state("spin:3,3"), spin_su2(3), ref3);
    CHECK(surface.unentangled);
    CHECK(surface.direction == TheoremDirection::iff);
    CHECK_FALSE(is_generalized_unentangled(builtin_state("spin:3,0"), spin_su2(3), ref3).unentangled);

    std::mt19937_64 rng(9);
    const auto full = is_generalized_unentangled(random_pure_state(6, rng), full_traceless_space(6), 1.0 - 1.0 / 6.0);
    CHECK(full.unentangled);

    // Non-Lie subspace: sufficiency only.
    const auto prime = is_generalized_unentangled(test::ket("00"), omega_prime_loc(), 0.5);
    CHECK(prime.direction == TheoremDirection::sufficient_only);

    CHECK_THROWS(is_generalized_unentangled(QuantumState::density(ComplexMatrix::Identity(2, 2) / 2.0),
                                            spin_su2(0.5), 0.5));
    CHECK(std::string(to_string(TheoremDirection::iff)) == "iff");
}

TEST_CASE("expectation indistinguishability")
{
    ComplexMatrix mix = ComplexMatrix::Zero(4, 4);
    mix(1, 1) = mix(2, 2) = 0.5;
    const QuantumState m1 = QuantumState::density(mix);
    CHECK(expectations_indistinguishable(builtin_state("bell:phi-"), m1, local_algebra(2, 2)));
    CHECK_FALSE(expectations_indistinguishable(builtin_state("bell:phi-"), m1, full_traceless_space(4)));

    ComplexMatrix mix2 = ComplexMatrix::Zero(4, 4);
    mix2(0, 0) = mix2(3, 3) = 0.5;
    CHECK(expectations_indistinguishable(test::ket("00"), QuantumState::density(mix2), omega_prime_loc()));
    CHECK_THROWS_AS(expectations_indistinguishable(test::ket("0"), m1, local_algebra(2, 2)), DimensionError);
}

TEST_CASE("invariant uncertainty")
{
    for (double j : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 5.0}) {
        const SpinSystem s = spin_system(j);
        const QuantumState top = QuantumState::pure(s.basis_state(j));
        std::ostringstream key;
        key << "spin_scs_uncertainty_" << j;
        CHECK(std::abs(invariant_uncertainty(top, s.generators()) - test::oracle_value(key.str())) < 1e-10);
        if (s.twice_j % 2 == 0)
            CHECK(std::abs(invariant_uncertainty(QuantumState::pure(s.basis_state(0)), s.generators()) -
                           j * (j + 1)) < 1e-10);
    }
    CHECK(invariant_uncertainty(test::ket("0"), spin_system(0.5).generators()) == doctest::Approx(0.5));
}

#include "ge/golden.hpp"

#include <cmath>
#include <sstream>

#include "ge/algebra_catalog.hpp"
#include "ge/coherent.hpp"
#include "ge/cone_lab.hpp"
#include "ge/fermion.hpp"
#include "ge/purity.hpp"
#include "ge/state_io.hpp"

namespace ge {

QuantumState GoldenContext::state(const std::string& name) const
{
    QuantumState s = builtin_state(name);
    if (name != corrupted_state)
        return s;
    ComplexVector v = s.amplitudes();
    v(1) += 0.3;
    return QuantumState::pure(v.normalized());
}

GoldenOutcome run_golden(const GoldenCheck& check, const GoldenContext& context)
{
    try {
        return check.run(context);
    } catch (const std::exception& e) {
        return {false, std::string("exception: ") + e.what()};
    }
}

namespace {

GoldenOutcome near(double got, double want, double tol)
{
    std::ostringstream s;
    s << "got=" << format_real(got) << " want=" << format_real(want);
    return {std::abs(got - want) <= tol, s.str()};
}

GoldenOutcome is_true(bool ok, const std::string& detail)
{
    return {ok, detail};
}

GoldenOutcome count(std::size_t got, std::size_t want)
{
    return {got == want, "got=" + std::to_string(got) + " want=" + std::to_string(want)};
}

double rescaled(const QuantumState& s, const std::string& algebra_name)
{
    const AlgebraSpec spec = parse_algebra(algebra_name);
    const auto ref = reference_max_purity(spec);
    const ObservableSpace omega = build_algebra(spec);
    return ref ? rescaled_purity(s, omega, ref->value).rescaled : rescaled_purity(s, omega).rescaled;
}

ComplexMatrix total_sz()
{
    return 0.5 * (kron(pauli('Z'), identity(2)) + kron(identity(2), pauli('Z')));
}

double max_coeff(const ComplexMatrix& m)
{
    return m.cwiseAbs().maxCoeff();
}

std::vector<GoldenCheck> build()
{
    std::vector<GoldenCheck> c;
    auto add = [&](std::string id, std::string description, std::function<GoldenOutcome(const GoldenContext&)> f) {
        c.push_back({std::move(id), std::move(description), std::move(f)});
    };

    // Operator spaces.
    add("u2-orthonormal", "z-conserving generators are orthonormal as written", [](const GoldenContext&) {
        const ObservableSpace u2 = z_conserving_u2();
        const ObservableSpace again = orthonormalize(u2.basis(), "check");
        return is_true(u2.size() == 4 && again.size() == 4 && is_subspace(u2, again) && is_subspace(again, u2),
                       "dim=" + std::to_string(u2.size()));
    });
    add("u2-closed", "Lie closure of the z-conserving set has dimension 4", [](const GoldenContext&) {
        return count(lie_closure(z_conserving_u2()).size(), 4);
    });
    add("u2-conserves-sz", "every z-conserving generator commutes with S_z", [](const GoldenContext&) {
        double worst = 0;
        const ObservableSpace u2 = z_conserving_u2();
        for (const auto& x : u2.basis())
            worst = std::max(worst, max_coeff(commutator(x.matrix(), total_sz())));
        return near(worst, 0.0, 1e-12);
    });
    add("u2-excludes-zz", "sigma_z x sigma_z is outside the z-conserving span", [](const GoldenContext&) {
        const HermitianOperator zz(pauli_string("ZZ"));
        const double ratio = projection_residual(zz, z_conserving_u2()).norm() / zz.norm();
        return is_true(ratio > 0.9, "residual/norm=" + format_real(ratio));
    });
    add("bell-local-mixed", "reduced state of Phi+ has purity 1/2", [](const GoldenContext& ctx) {
        const Index dims[] = {2, 2}, keep[] = {0};
        return near(partial_trace(ctx.state("bell:phi+"), dims, keep).purity(), 0.5, 1e-12);
    });
    add("local-2x2", "two-qubit local algebra has 6 elements", [](const GoldenContext&) {
        return count(local_algebra(2, 2).size(), 6);
    });
    add("local-3x2", "three-qubit local algebra has 9 elements", [](const GoldenContext&) {
        return count(omega1().size(), 9);
    });
    add("omega-prime-loc", "{XX, ZZ, XY, YZ} spans a 4-dim space", [](const GoldenContext&) {
        return count(omega_prime_loc().size(), 4);
    });

    // Three-qubit purities.
    add("p1-product", "P1(product) = 1", [](const GoldenContext& ctx) {
        return near(rescaled(ctx.state("basis:000"), "omega1"), 1.0, 1e-10);
    });
    add("p1-bisep", "P1(B12) = 1/3", [](const GoldenContext& ctx) {
        return near(rescaled(ctx.state("bisep:12"), "omega1"), 1.0 / 3.0, 1e-10);
    });
    add("p1-w", "P1(W) = 1/9", [](const GoldenContext& ctx) {
        return near(rescaled(ctx.state("w:3"), "omega1"), 1.0 / 9.0, 1e-10);
    });
    add("p1-ghz", "P1(GHZ) = 0", [](const GoldenContext& ctx) {
        return near(rescaled(ctx.state("ghz:3"), "omega1"), 0.0, 1e-10);
    });
    const std::pair<const char*, double> p2[] = {{"basis:000", 1.0},     {"bisep:12", 1.0},
                                                 {"bisep:13", 1.0 / 3.0}, {"bisep:23", 1.0 / 3.0},
                                                 {"ghz:3", 1.0 / 3.0},    {"w:3", 11.0 / 27.0}};
    for (const auto& [name, want] : p2) {
        const std::string n = name;
        const double w = want;
        add("p2-" + n, "P2(" + n + ") = " + format_real(w), [n, w](const GoldenContext& ctx) {
            return near(rescaled(ctx.state(n), "omega2-paper-values"), w, 1e-10);
        });
    }
    add("p2-w-text", "P2(W) prints as 0.407407407407", [](const GoldenContext& ctx) {
        const std::string text = format_real(rescaled(ctx.state("w:3"), "omega2-paper-values"));
        return is_true(text == "0.407407407407", "got=" + text);
    });

    // Spin J.
    add("spin-surface", "|J,J> is unentangled relative to su(2), J = 3", [](const GoldenContext& ctx) {
        const auto ref = reference_max_purity(algebra::SpinJ{3.0})->value;
        const auto v = is_generalized_unentangled(ctx.state("spin:3,3"), spin_su2(3), ref);
        return is_true(v.unentangled, "rescaled=" + format_real(v.rescaled));
    });
    add("spin-center", "|J,0> is entangled relative to su(2), J = 3", [](const GoldenContext& ctx) {
        const auto ref = reference_max_purity(algebra::SpinJ{3.0})->value;
        const auto v = is_generalized_unentangled(ctx.state("spin:3,0"), spin_su2(3), ref);
        return is_true(!v.unentangled && std::abs(v.rescaled) < 1e-12, "rescaled=" + format_real(v.rescaled));
    });
    add("spin-center-uncertainty", "(Delta I)^2 on |J,0> equals J(J+1), J = 3", [](const GoldenContext& ctx) {
        return near(invariant_uncertainty(ctx.state("spin:3,0"), spin_system(3).generators()), 12.0, 1e-9);
    });
    add("spin-physical-norm", "sum <J_a>^2 / J^2 = 1 on a coherent state, J = 5/2", [](const GoldenContext&) {
        const SpinSystem s = spin_system(2.5);
        const QuantumState psi = scs(s, Eigen::Vector3d(1.0, 2.0, -0.5).normalized());
        double sum = 0;
        for (const auto& g : s.generators())
            sum += std::pow(expectation(psi, g), 2);
        return near(sum / (2.5 * 2.5), 1.0, 1e-6);
    });
    add("spin-orbit", "group orbit of |J,J> stays at maximal purity, J = 2", [](const GoldenContext&) {
        const ObservableSpace omega = spin_su2(2);
        const double angles[] = {0.7, -1.3, 2.1};
        const QuantumState psi = orbit_sample(omega, QuantumState::pure(spin_system(2).basis_state(2)), angles);
        return near(rescaled_purity(psi, omega, reference_max_purity(algebra::SpinJ{2.0})->value).rescaled, 1.0,
                    1e-10);
    });
    add("spin-full-algebra", "every pure state is unentangled relative to su(d)", [](const GoldenContext&) {
        std::mt19937_64 rng(7);
        const QuantumState psi = random_pure_state(5, rng);
        const auto v = is_generalized_unentangled(psi, full_traceless_space(5), 1.0 - 1.0 / 5.0);
        return is_true(v.unentangled && v.direction == TheoremDirection::iff, "rescaled=" + format_real(v.rescaled));
    });
    add("spin-pair-product", "|1,1>|1,1> maximizes the pair purity, |1,0>|1,0> gives 0", [](const GoldenContext&) {
        const SpinSystem s = spin_system(1);
        const ObservableSpace omega = restricted_local_spins(1);
        const double ref = reference_max_purity(algebra::SpinPair{1.0})->value;
        const double top = rescaled_purity(QuantumState::pure(kron(s.basis_state(1), s.basis_state(1))), omega, ref)
                               .rescaled;
        const double mid = rescaled_purity(QuantumState::pure(kron(s.basis_state(0), s.basis_state(0))), omega, ref)
                               .rescaled;
        return is_true(std::abs(top - 1) < 1e-10 && std::abs(mid) < 1e-12,
                       "top=" + format_real(top) + " center=" + format_real(mid));
    });

    // Local indistinguishability.
    add("indist-phi-minus", "Phi- matches (|01><01|+|10><10|)/2 on local observables", [](const GoldenContext& ctx) {
        ComplexMatrix mix = ComplexMatrix::Zero(4, 4);
        mix(1, 1) = mix(2, 2) = 0.5;
        return is_true(
            expectations_indistinguishable(ctx.state("bell:phi-"), QuantumState::density(mix), local_algebra(2, 2)),
            "");
    });
    add("indist-prime-loc", "|00> matches (|00><00|+|11><11|)/2 on {XX, ZZ, XY, YZ}", [](const GoldenContext& ctx) {
        ComplexMatrix mix = ComplexMatrix::Zero(4, 4);
        mix(0, 0) = mix(3, 3) = 0.5;
        return is_true(
            expectations_indistinguishable(ctx.state("basis:00"), QuantumState::density(mix), omega_prime_loc()), "");
    });

    // Fermions.
    add("fermi-car", "{c_1^dag, c_1} = 1 exactly", [](const GoldenContext&) {
        const FockRegister reg = fock_register(2);
        const ComplexMatrix d = anticommutator(reg.cdag[0], reg.c[0]) - identity(4);
        return is_true(d.isZero(0.0), "max deviation=" + format_real(max_coeff(d)));
    });
    add("fermi-number", "N = 1 - S_z under the dictionary", [](const GoldenContext&) {
        const ComplexMatrix u = jw_dictionary_matrix();
        const ComplexMatrix n = u.adjoint() * number_operator(fock_register(2)).matrix() * u;
        return near(max_coeff(n - (identity(4) - total_sz())), 0.0, 1e-12);
    });
    add("fermi-u2-image", "fermionic u(2) equals the image of the z-conserving set", [](const GoldenContext&) {
        const ComplexMatrix u = jw_dictionary_matrix();
        std::vector<HermitianOperator> image;
        const ObservableSpace u2 = z_conserving_u2();
        for (const auto& x : u2.basis())
            image.emplace_back(u * x.matrix() * u.adjoint());
        const ObservableSpace a = orthonormalize(image, "image");
        const ObservableSpace b = fermionic_u2(fock_register(2));
        return is_true(is_subspace(a, b) && is_subspace(b, a), "");
    });
    add("fermi-u2-conserves-n", "fermionic u(2) commutes with N", [](const GoldenContext&) {
        const ComplexMatrix n = number_operator(fock_register(2)).matrix();
        double worst = 0;
        const ObservableSpace u2 = fermionic_u2(fock_register(2));
        for (const auto& x : u2.basis())
            worst = std::max(worst, max_coeff(commutator(x.matrix(), n)));
        return is_true(worst == 0.0, "max=" + format_real(worst));
    });
    add("u2-psi-zero", "P_u2(Psi+) = 0", [](const GoldenContext& ctx) {
        return near(omega_purity(ctx.state("bell:psi+"), z_conserving_u2()), 0.0, 1e-12);
    });
    add("u2-vacuum-max", "P_u2(|00>) is maximal and equals P_u2(Phi+)", [](const GoldenContext& ctx) {
        const double a = rescaled(ctx.state("basis:00"), "u2");
        const double b = rescaled(ctx.state("bell:phi+"), "u2");
        return is_true(std::abs(a - 1) < 1e-9 && std::abs(a - b) < 1e-10,
                       "vac=" + format_real(a) + " phi+=" + format_real(b));
    });
    add("u2-fermi-images", "fermionic u(2): Phi+ image maximal, Psi+ image zero", [](const GoldenContext& ctx) {
        const double a = rescaled(ctx.state("fock:m2:phi+"), "u2-fermi");
        const double b = rescaled(ctx.state("fock:m2:psi+"), "u2-fermi");
        return is_true(std::abs(a - 1) < 1e-9 && std::abs(b) < 1e-12,
                       "phi+=" + format_real(a) + " psi+=" + format_real(b));
    });
    add("so4-pairing", "so(4) couples |vac> and c_1^dag c_2^dag |vac>", [](const GoldenContext&) {
        const FockRegister reg = fock_register(2);
        const ComplexVector vac = reg.vacuum();
        const ComplexVector pair = reg.cdag[0] * (reg.cdag[1] * vac);
        double best = 0;
        const ObservableSpace so4 = fermionic_so4(reg);
        for (const auto& x : so4.basis())
            best = std::max(best, std::abs(pair.dot(x.matrix() * vac)));
        return is_true(best > 0.1, "max |element|=" + format_real(best));
    });
    add("so4-contains-u2", "traceless u(2) sits inside so(4)", [](const GoldenContext&) {
        const FockRegister reg = fock_register(2);
        return is_true(is_subspace(traceless_sector(fermionic_u2(reg)), fermionic_so4(reg)), "");
    });
    add("dict-00", "00 maps to |vac>", [](const GoldenContext&) {
        return near(std::norm(jw_state_dictionary("00").amplitudes().dot(fock_register(2).vacuum())), 1.0, 1e-12);
    });
    add("dict-01", "01 maps to c_1^dag |vac>", [](const GoldenContext&) {
        const FockRegister reg = fock_register(2);
        return near(std::norm(jw_state_dictionary("01").amplitudes().dot(reg.cdag[0] * reg.vacuum())), 1.0, 1e-12);
    });
    add("dict-bell", "Bell states map to (c_1^dag +- c_2^dag)|vac> and (1 +- c_1^dag c_2^dag)|vac>",
        [](const GoldenContext& ctx) {
            const FockRegister reg = fock_register(2);
            const ComplexVector vac = reg.vacuum();
            const double r = 1.0 / std::sqrt(2.0);
            const ComplexVector pair = reg.cdag[0] * (reg.cdag[1] * vac);
            const std::pair<const char*, ComplexVector> want[] = {
                {"phi+", r * (reg.cdag[0] * vac + reg.cdag[1] * vac)},
                {"phi-", r * (reg.cdag[0] * vac - reg.cdag[1] * vac)},
                {"psi+", r * (vac + pair)},
                {"psi-", r * (vac - pair)},
            };
            double worst = 0;
            for (const auto& [label, v] : want) {
                const ComplexVector got = jw_map(ctx.state(std::string("bell:") + label)).amplitudes();
                worst = std::max(worst, (got - v).norm());
            }
            return near(worst, 0.0, 1e-12);
        });

    // Boxes.
    add("box-entangled-feasible", "displayed entangled table is a no-signalling state", [](const GoldenContext&) {
        const auto s = pr_entangled_representative();
        return is_true(s.no_signalling() && no_signalling_polytope({2, 2}, {2, 2}).contains(s.flatten()), "");
    });
    add("box-product-marginals", "product vertex marginals are (1,0,1,0)", [](const GoldenContext&) {
        const Marginals m = marginals(pr_product_representative());
        return is_true(m.alice.to_string() == "(1,0,1,0)" && m.bob.to_string() == "(1,0,1,0)",
                       "alice=" + m.alice.to_string() + " bob=" + m.bob.to_string());
    });
    add("box-entangled-marginals", "entangled vertex marginals are (1/2,1/2,1/2,1/2)", [](const GoldenContext&) {
        const Marginals m = marginals(pr_entangled_representative());
        return is_true(m.alice.to_string() == "(1/2,1/2,1/2,1/2)" && m.bob.to_string() == "(1/2,1/2,1/2,1/2)",
                       "alice=" + m.alice.to_string() + " bob=" + m.bob.to_string());
    });
    add("box-square", "a single box has 4 vertices", [](const GoldenContext&) {
        return count(enumerate_vertices(box_cone({2, 2})).size(), 4);
    });
    add("box-vertex-count", "the two-box polytope has 24 vertices, 16 product and 8 entangled",
        [](const GoldenContext&) {
            const auto v = no_signalling_vertices({2, 2}, {2, 2});
            std::size_t prod = 0, ent = 0;
            for (const auto& s : v)
                (classify_extremal(s) == VertexClass::product ? prod : ent)++;
            return is_true(v.size() == 24 && prod == 16 && ent == 8,
                           "product=" + std::to_string(prod) + " entangled=" + std::to_string(ent) +
                               " total=" + std::to_string(v.size()));
        });
    add("box-entangled-extremal", "displayed entangled table is extremal", [](const GoldenContext&) {
        return is_true(is_extremal(pr_entangled_representative()), "");
    });
    add("box-orbit-entangled", "relabeling orbit of the entangled table has 8 elements", [](const GoldenContext&) {
        return count(relabeling_orbit(pr_entangled_representative()).size(), 8);
    });
    add("box-orbit-product", "relabeling orbit of the product table has 16 elements", [](const GoldenContext&) {
        return count(relabeling_orbit(pr_product_representative()).size(), 16);
    });
    add("box-ge", "product vertices are unentangled, entangled vertices are not", [](const GoldenContext&) {
        std::size_t wrong = 0;
        for (const auto& s : no_signalling_vertices({2, 2}, {2, 2}))
            wrong += is_generalized_unentangled_box(s) != (classify_extremal(s) == VertexClass::product);
        return is_true(wrong == 0, "misclassified=" + std::to_string(wrong));
    });

    return c;
}

}  // namespace

const std::vector<GoldenCheck>& golden_checks()
{
    static const std::vector<GoldenCheck> checks = build();
    return checks;
}

}  // namespace ge

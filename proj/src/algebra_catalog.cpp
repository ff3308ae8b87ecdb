#include "ge/algebra_catalog.hpp"

#include <cmath>
#include <mutex>
#include <set>
#include <stdexcept>

#include "ge/coherent.hpp"
#include "ge/fermion.hpp"

namespace ge {

ObservableSpace local_algebra(int n, Index d0)
{
    if (n < 1 || d0 < 2)
        throw std::invalid_argument("local_algebra: need n >= 1 and d0 >= 2");
    Index total = 1;
    for (int k = 0; k < n; ++k) {
        total *= d0;
        if (total > max_dimension)
            throw DimensionError("local_algebra: d0^n exceeds the supported dimension");
    }
    const auto site_basis = gell_mann_basis(d0);
    const ComplexMatrix pad = identity(d0) / std::sqrt(static_cast<double>(d0));
    std::vector<HermitianOperator> basis;
    basis.reserve(static_cast<std::size_t>(n) * site_basis.size());
    for (int site = 0; site < n; ++site)
        for (const auto& x : site_basis) {
            ComplexMatrix op = (site == 0) ? x.matrix() : pad;
            for (int k = 1; k < n; ++k)
                op = kron(op, k == site ? x.matrix() : pad);
            basis.emplace_back(op);
        }
    return ObservableSpace(total, std::move(basis), "local:" + std::to_string(n) + "x" + std::to_string(d0),
                           {.contains_identity = false, .irreducible_lie = true});
}

ObservableSpace pauli_string_space(std::span<const std::string> words, std::string label)
{
    if (words.empty())
        throw std::invalid_argument("pauli_string_space: no strings given");
    const std::size_t n = words.front().size();
    if (n == 0 || n > 10)
        throw std::invalid_argument("pauli_string_space: word length must be in [1, 10]");
    std::set<std::string> seen;
    std::vector<HermitianOperator> basis;
    bool with_identity = false;
    const double norm = std::sqrt(static_cast<double>(Index{1} << n));
    for (const auto& w : words) {
        if (w.size() != n)
            throw std::invalid_argument("pauli_string_space: words must share one length ('" + w + "')");
        for (char ch : w)
            if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z')
                throw std::invalid_argument("pauli_string_space: malformed word '" + w + "'");
        if (!seen.insert(w).second)
            continue;
        with_identity = with_identity || w.find_first_not_of('I') == std::string::npos;
        basis.emplace_back(pauli_string(w) / norm);
    }
    return ObservableSpace(Index{1} << n, std::move(basis), std::move(label),
                           {.contains_identity = with_identity, .irreducible_lie = false});
}

ObservableSpace z_conserving_u2()
{
    const ComplexMatrix sx = pauli('X') / 2.0, sy = pauli('Y') / 2.0, sz = pauli('Z') / 2.0;
    const ComplexMatrix one = identity(2);
    const double r2 = std::sqrt(2.0);
    std::vector<HermitianOperator> basis{
        HermitianOperator(kron(sz, one)),
        HermitianOperator(kron(one, sz)),
        HermitianOperator(r2 * (kron(sx, sx) + kron(sy, sy))),
        HermitianOperator(r2 * (kron(sx, sy) - kron(sy, sx))),
    };
    return ObservableSpace(4, std::move(basis), "u2");
}

ObservableSpace omega_prime_loc()
{
    const std::vector<std::string> words{"XX", "ZZ", "XY", "YZ"};
    return pauli_string_space(words, "omega-prime-loc");
}

ObservableSpace omega1()
{
    return local_algebra(3, 2).relabeled("omega1");
}

namespace {

std::vector<std::string> pair_strings(int a, int b, int n)
{
    static const char letters[] = {'X', 'Y', 'Z'};
    std::vector<std::string> out;
    for (char p : letters)
        for (char q : letters) {
            std::string w(static_cast<std::size_t>(n), 'I');
            w[static_cast<std::size_t>(a)] = p;
            w[static_cast<std::size_t>(b)] = q;
            out.push_back(w);
        }
    return out;
}

std::vector<std::string> su4_on_first_pair()
{
    static const char letters[] = {'I', 'X', 'Y', 'Z'};
    std::vector<std::string> out;
    for (char p : letters)
        for (char q : letters)
            if (p != 'I' || q != 'I')
                out.push_back(std::string{p, q, 'I'});
    return out;
}

}  // namespace

ObservableSpace bilocal_pair_algebra()
{
    auto words = su4_on_first_pair();
    for (const char* w : {"IIX", "IIY", "IIZ"})
        words.emplace_back(w);
    return pauli_string_space(words, "omega2-literal").with_flags({.contains_identity = false, .irreducible_lie = true});
}

ObservableSpace bilocal_pair_paper_values()
{
    const auto words = su4_on_first_pair();
    return pauli_string_space(words, "omega2-paper-values");
}

ObservableSpace omega3()
{
    auto words = pair_strings(0, 1, 3);
    const auto second = pair_strings(1, 2, 3);
    words.insert(words.end(), second.begin(), second.end());
    return pauli_string_space(words, "omega3");
}

ObservableSpace omega4()
{
    auto words = pair_strings(0, 1, 3);
    for (const auto& extra : {pair_strings(1, 2, 3), pair_strings(0, 2, 3)})
        words.insert(words.end(), extra.begin(), extra.end());
    return pauli_string_space(words, "omega4");
}

namespace {

// "3" or "3/2".
std::string spin_label(int twice_j)
{
    return twice_j % 2 == 0 ? std::to_string(twice_j / 2) : std::to_string(twice_j) + "/2";
}

}  // namespace

ObservableSpace spin_su2(double j)
{
    const SpinSystem s = spin_system(j);
    if (s.twice_j == 0)
        throw std::invalid_argument("spin_su2: J = 0 has no nonzero generators");
    auto space = orthonormalize(s.generators(), "su2-spin:" + spin_label(s.twice_j));
    return space.with_flags({.contains_identity = false, .irreducible_lie = true});
}

ObservableSpace restricted_local_spins(double j)
{
    const SpinSystem s = spin_system(j);
    if (s.twice_j == 0)
        throw std::invalid_argument("restricted_local_spins: J = 0 has no nonzero generators");
    const ComplexMatrix one = identity(s.dim());
    std::vector<HermitianOperator> ops;
    for (const auto& g : s.generators())
        ops.emplace_back(kron(g.matrix(), one));
    for (const auto& g : s.generators())
        ops.emplace_back(kron(one, g.matrix()));
    return orthonormalize(ops, "su2-pair:" + spin_label(s.twice_j));
}

ObservableSpace build_algebra(const AlgebraSpec& spec)
{
    struct Visitor
    {
        ObservableSpace operator()(const algebra::Local& a) const { return local_algebra(a.n, a.d0); }
        ObservableSpace operator()(const algebra::PauliSubset& a) const { return pauli_string_space(a.words, a.label); }
        ObservableSpace operator()(const algebra::BilocalPair& a) const
        {
            return a.paper_values ? bilocal_pair_paper_values() : bilocal_pair_algebra();
        }
        ObservableSpace operator()(const algebra::Omega3&) const { return omega3(); }
        ObservableSpace operator()(const algebra::Omega4&) const { return omega4(); }
        ObservableSpace operator()(const algebra::OmegaPrimeLoc&) const { return omega_prime_loc(); }
        ObservableSpace operator()(const algebra::ZConservingU2&) const { return z_conserving_u2(); }
        ObservableSpace operator()(const algebra::SpinJ& a) const { return spin_su2(a.j); }
        ObservableSpace operator()(const algebra::SpinPair& a) const { return restricted_local_spins(a.j); }
        ObservableSpace operator()(const algebra::FermionicU2&) const { return fermionic_u2(fock_register(2)); }
        ObservableSpace operator()(const algebra::FermionicSo4&) const { return fermionic_so4(fock_register(2)); }
        ObservableSpace operator()(const algebra::FullTraceless& a) const { return full_traceless_space(a.d); }
        ObservableSpace operator()(const algebra::Custom& a) const { return orthonormalize(a.ops, a.label); }
    };
    return std::visit(Visitor{}, spec);
}

const char* to_string(ReferenceSource s)
{
    return s == ReferenceSource::analytic ? "analytic" : "cached-numeric";
}

namespace {

double cached_u2_maximum()
{
    static std::once_flag once;
    static double value = 0.0;
    std::call_once(once, [] { value = max_purity_estimate(z_conserving_u2()); });
    return value;
}

using R = std::optional<MaxReference>;

struct ReferenceVisitor
{
    R operator()(const algebra::Local& a) const
    {
        // Each site contributes (1 - 1/d0) / d0^(n-1) on product states.
        const double d0 = static_cast<double>(a.d0);
        return MaxReference{a.n * (d0 - 1.0) / std::pow(d0, a.n), ReferenceSource::analytic};
    }
    R operator()(const algebra::BilocalPair& a) const
    {
        if (!a.paper_values)
            return std::nullopt;
        // su(4) on the pair, padded by 1/sqrt2 on qubit 3: (1 - 1/4) / 2.
        return MaxReference{3.0 / 8.0, ReferenceSource::analytic};
    }
    R operator()(const algebra::SpinJ& a) const
    {
        // J^2 / Tr(J_z^2) with Tr(J_z^2) = J(J+1)(2J+1)/3.
        const double j = a.j;
        return MaxReference{3.0 * j / ((j + 1.0) * (2.0 * j + 1.0)), ReferenceSource::analytic};
    }
    R operator()(const algebra::SpinPair& a) const
    {
        const double j = a.j;
        return MaxReference{6.0 * j / ((j + 1.0) * (2.0 * j + 1.0) * (2.0 * j + 1.0)), ReferenceSource::analytic};
    }
    R operator()(const algebra::FullTraceless& a) const
    {
        return MaxReference{1.0 - 1.0 / static_cast<double>(a.d), ReferenceSource::analytic};
    }
    R operator()(const algebra::ZConservingU2&) const
    {
        return MaxReference{cached_u2_maximum(), ReferenceSource::cached_numeric};
    }
    R operator()(const algebra::FermionicU2&) const
    {
        return MaxReference{cached_u2_maximum(), ReferenceSource::cached_numeric};
    }
    R operator()(const auto&) const { return std::nullopt; }
};

}  // namespace

std::optional<MaxReference> reference_max_purity(const AlgebraSpec& spec)
{
    return std::visit(ReferenceVisitor{}, spec);
}

}  // namespace ge

#include "ge/cone_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "ge/exact_lp.hpp"

namespace ge {

using Eigen::Index;

namespace {

bool nonnegative(const RationalVector& v)
{
    for (Index i = 0; i < v.size(); ++i)
        if (v(i) < 0)
            return false;
    return true;
}

std::vector<Rational> as_key(const RationalVector& v)
{
    return std::vector<Rational>(v.data(), v.data() + v.size());
}

void require_shape(BoxShape s)
{
    if (s.inputs < 1 || s.outputs < 1)
        throw SizeError("box shapes need at least one input and one output");
}

}  // namespace

// ---------------------------------------------------------------------------
// BoxState
// ---------------------------------------------------------------------------

BoxState::BoxState(BoxShape shape, RationalVector table) : m_shape(shape), m_table(std::move(table))
{
    require_shape(shape);
    if (m_table.size() != shape.size())
        throw InfeasibleState("box table has the wrong number of entries");
    if (!nonnegative(m_table))
        throw InfeasibleState("box table has a negative probability");
    for (int k = 0; k < shape.inputs; ++k) {
        Rational s = 0;
        for (int o = 0; o < shape.outputs; ++o)
            s += p(o, k);
        if (s != 1)
            throw InfeasibleState("box distribution for input " + std::to_string(k) + " does not sum to 1");
    }
}

BoxState BoxState::deterministic(BoxShape shape, std::span<const int> outcomes)
{
    require_shape(shape);
    if (static_cast<int>(outcomes.size()) != shape.inputs)
        throw std::invalid_argument("deterministic box: need one outcome per input");
    RationalVector t = RationalVector::Zero(shape.size());
    for (int k = 0; k < shape.inputs; ++k) {
        if (outcomes[k] < 0 || outcomes[k] >= shape.outputs)
            throw std::invalid_argument("deterministic box: outcome out of range");
        t(k * shape.outputs + outcomes[k]) = 1;
    }
    return BoxState(shape, std::move(t));
}

std::string BoxState::to_string() const
{
    std::string s = "(";
    for (Index i = 0; i < m_table.size(); ++i) {
        if (i > 0)
            s += ",";
        s += ge::to_string(m_table(i));
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// BipartiteBoxState
// ---------------------------------------------------------------------------

BipartiteBoxState::BipartiteBoxState(BoxShape alice, BoxShape bob, RationalMatrix table)
    : m_alice(alice), m_bob(bob), m_table(std::move(table))
{
    require_shape(alice);
    require_shape(bob);
    if (m_table.rows() != alice.size() || m_table.cols() != bob.size())
        throw InfeasibleState("joint table has the wrong shape");
    for (Index r = 0; r < m_table.rows(); ++r)
        for (Index c = 0; c < m_table.cols(); ++c)
            if (m_table(r, c) < 0)
                throw InfeasibleState("joint table has a negative probability");
    for (int k = 0; k < alice.inputs; ++k)
        for (int l = 0; l < bob.inputs; ++l) {
            Rational s = 0;
            for (int i = 0; i < alice.outputs; ++i)
                for (int j = 0; j < bob.outputs; ++j)
                    s += p(i, j, k, l);
            if (s != 1)
                throw InfeasibleState("block (" + std::to_string(k) + "," + std::to_string(l) + ") does not sum to 1");
        }
}

RationalVector BipartiteBoxState::flatten() const
{
    RationalVector v(m_table.size());
    Index n = 0;
    for (Index r = 0; r < m_table.rows(); ++r)
        for (Index c = 0; c < m_table.cols(); ++c)
            v(n++) = m_table(r, c);
    return v;
}

BipartiteBoxState BipartiteBoxState::from_flat(BoxShape alice, BoxShape bob, const RationalVector& flat)
{
    if (flat.size() != alice.size() * bob.size())
        throw InfeasibleState("flat table has the wrong length");
    RationalMatrix t(alice.size(), bob.size());
    Index n = 0;
    for (Index r = 0; r < t.rows(); ++r)
        for (Index c = 0; c < t.cols(); ++c)
            t(r, c) = flat(n++);
    return BipartiteBoxState(alice, bob, std::move(t));
}

bool BipartiteBoxState::no_signalling() const
{
    // Bob's marginal must not depend on Alice's input k.
    for (int l = 0; l < m_bob.inputs; ++l)
        for (int j = 0; j < m_bob.outputs; ++j) {
            Rational first = 0;
            for (int k = 0; k < m_alice.inputs; ++k) {
                Rational s = 0;
                for (int i = 0; i < m_alice.outputs; ++i)
                    s += p(i, j, k, l);
                if (k == 0)
                    first = s;
                else if (s != first)
                    return false;
            }
        }
    for (int k = 0; k < m_alice.inputs; ++k)
        for (int i = 0; i < m_alice.outputs; ++i) {
            Rational first = 0;
            for (int l = 0; l < m_bob.inputs; ++l) {
                Rational s = 0;
                for (int j = 0; j < m_bob.outputs; ++j)
                    s += p(i, j, k, l);
                if (l == 0)
                    first = s;
                else if (s != first)
                    return false;
            }
        }
    return true;
}

bool operator<(const BipartiteBoxState& a, const BipartiteBoxState& b)
{
    const auto ka = std::tuple(a.m_alice.inputs, a.m_alice.outputs, a.m_bob.inputs, a.m_bob.outputs);
    const auto kb = std::tuple(b.m_alice.inputs, b.m_alice.outputs, b.m_bob.inputs, b.m_bob.outputs);
    if (ka != kb)
        return ka < kb;
    const auto fa = a.flatten(), fb = b.flatten();
    return std::lexicographical_compare(fa.data(), fa.data() + fa.size(), fb.data(), fb.data() + fb.size());
}

BipartiteBoxState product(const BoxState& a, const BoxState& b)
{
    RationalMatrix t(a.shape().size(), b.shape().size());
    for (Index r = 0; r < t.rows(); ++r)
        for (Index c = 0; c < t.cols(); ++c)
            t(r, c) = a.table()(r) * b.table()(c);
    return BipartiteBoxState(a.shape(), b.shape(), std::move(t));
}

BipartiteBoxState mixture(std::span<const BipartiteBoxState> states, std::span<const Rational> weights)
{
    if (states.empty() || states.size() != weights.size())
        throw std::invalid_argument("mixture: need one weight per state");
    Rational total = 0;
    RationalMatrix t = RationalMatrix::Zero(states[0].table().rows(), states[0].table().cols());
    for (std::size_t s = 0; s < states.size(); ++s) {
        if (states[s].alice() != states[0].alice() || states[s].bob() != states[0].bob())
            throw std::invalid_argument("mixture: states have different shapes");
        if (weights[s] < 0)
            throw std::invalid_argument("mixture: negative weight");
        total += weights[s];
        for (Index r = 0; r < t.rows(); ++r)
            for (Index c = 0; c < t.cols(); ++c)
                t(r, c) += weights[s] * states[s].table()(r, c);
    }
    if (total != 1)
        throw std::invalid_argument("mixture: weights do not sum to 1");
    return BipartiteBoxState(states[0].alice(), states[0].bob(), std::move(t));
}

BipartiteBoxState uniform_mixture(std::span<const BipartiteBoxState> states)
{
    const std::vector<Rational> w(states.size(), Rational(1, static_cast<long>(states.size())));
    return mixture(states, w);
}

BipartiteBoxState pr_product_representative()
{
    RationalMatrix t(4, 4);
    t << 1, 0, 1, 0,
         0, 0, 0, 0,
         1, 0, 1, 0,
         0, 0, 0, 0;
    return BipartiteBoxState({2, 2}, {2, 2}, std::move(t));
}

BipartiteBoxState pr_entangled_representative()
{
    const Rational h(1, 2);
    RationalMatrix t(4, 4);
    t << h, 0, h, 0,
         0, h, 0, h,
         h, 0, 0, h,
         0, h, h, 0;
    return BipartiteBoxState({2, 2}, {2, 2}, std::move(t));
}

// ---------------------------------------------------------------------------
// PolyhedralCone
// ---------------------------------------------------------------------------

PolyhedralCone::PolyhedralCone(RationalMatrix equalities, RationalVector unit)
    : m_equalities(std::move(equalities)), m_unit(std::move(unit))
{
    const Index n = m_unit.size();
    if (n == 0 || (m_equalities.rows() > 0 && m_equalities.cols() != n))
        throw std::invalid_argument("cone: equality matrix and unit functional disagree in size");

    // Solve [E; lambda] x = [0; 1] and read off x0 + D t.
    RationalMatrix aug = RationalMatrix::Zero(m_equalities.rows() + 1, n + 1);
    if (m_equalities.rows() > 0)
        aug.topLeftCorner(m_equalities.rows(), n) = m_equalities;
    aug.block(m_equalities.rows(), 0, 1, n) = m_unit.transpose();
    aug(m_equalities.rows(), n) = 1;
    const auto ech = reduced_row_echelon<Rational>(std::move(aug));
    if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == n)
        throw std::invalid_argument("cone: normalized base is empty");

    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (Index c : ech.pivot_cols)
        is_pivot[static_cast<std::size_t>(c)] = true;
    m_base_point = RationalVector::Zero(n);
    for (Index r = 0; r < ech.rank(); ++r)
        m_base_point(ech.pivot_cols[static_cast<std::size_t>(r)]) = ech.reduced(r, n);

    std::vector<Index> free_cols;
    for (Index c = 0; c < n; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)])
            free_cols.push_back(c);
    m_directions = RationalMatrix::Zero(n, static_cast<Index>(free_cols.size()));
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        const Index col = static_cast<Index>(f);
        m_directions(free_cols[f], col) = 1;
        for (Index r = 0; r < ech.rank(); ++r)
            m_directions(ech.pivot_cols[static_cast<std::size_t>(r)], col) = -ech.reduced(r, free_cols[f]);
    }
}

bool PolyhedralCone::contains(const RationalVector& x) const
{
    if (x.size() != ambient_dim() || !nonnegative(x))
        return false;
    for (Index r = 0; r < m_equalities.rows(); ++r) {
        Rational s = 0;
        for (Index c = 0; c < x.size(); ++c)
            s += m_equalities(r, c) * x(c);
        if (s != 0)
            return false;
    }
    Rational u = 0;
    for (Index c = 0; c < x.size(); ++c)
        u += m_unit(c) * x(c);
    return u == 1;
}

bool PolyhedralCone::unit_separates() const
{
    const Index n = ambient_dim();
    const Index m = m_equalities.rows();
    RationalMatrix a = RationalMatrix::Zero(m + 2, n);
    if (m > 0)
        a.topRows(m) = m_equalities;
    a.row(m) = m_unit.transpose();
    a.row(m + 1).setConstant(1);
    RationalVector b = RationalVector::Zero(m + 2);
    b(m + 1) = 1;
    return !find_feasible_point(a, b).has_value();
}

PolyhedralCone box_cone(BoxShape shape)
{
    require_shape(shape);
    const Index n = shape.size();
    RationalMatrix eq = RationalMatrix::Zero(shape.inputs - 1, n);
    for (int k = 1; k < shape.inputs; ++k)
        for (int o = 0; o < shape.outputs; ++o) {
            eq(k - 1, k * shape.outputs + o) += 1;
            eq(k - 1, o) -= 1;
        }
    RationalVector unit = RationalVector::Zero(n);
    for (int o = 0; o < shape.outputs; ++o)
        unit(o) = 1;
    return PolyhedralCone(std::move(eq), std::move(unit));
}

PolyhedralCone no_signalling_polytope(BoxShape alice, BoxShape bob)
{
    require_shape(alice);
    require_shape(bob);
    const Index cols = bob.size();
    const Index n = alice.size() * cols;
    if (n > 10000)
        throw SizeError("no-signalling polytope: more than 10^4 coordinates");
    auto idx = [&](int i, int j, int k, int l) { return (k * alice.outputs + i) * cols + (l * bob.outputs + j); };

    std::vector<RationalVector> rows;
    auto new_row = [&] { return RationalVector(RationalVector::Zero(n)); };
    // Block normalizations agree with block (0, 0).
    for (int k = 0; k < alice.inputs; ++k)
        for (int l = 0; l < bob.inputs; ++l) {
            if (k == 0 && l == 0)
                continue;
            RationalVector r = new_row();
            for (int i = 0; i < alice.outputs; ++i)
                for (int j = 0; j < bob.outputs; ++j) {
                    r(idx(i, j, k, l)) += 1;
                    r(idx(i, j, 0, 0)) -= 1;
                }
            rows.push_back(std::move(r));
        }
    // Bob's marginals independent of Alice's input.
    for (int l = 0; l < bob.inputs; ++l)
        for (int j = 0; j < bob.outputs; ++j)
            for (int k = 1; k < alice.inputs; ++k) {
                RationalVector r = new_row();
                for (int i = 0; i < alice.outputs; ++i) {
                    r(idx(i, j, k, l)) += 1;
                    r(idx(i, j, 0, l)) -= 1;
                }
                rows.push_back(std::move(r));
            }
    // Alice's marginals independent of Bob's input.
    for (int k = 0; k < alice.inputs; ++k)
        for (int i = 0; i < alice.outputs; ++i)
            for (int l = 1; l < bob.inputs; ++l) {
                RationalVector r = new_row();
                for (int j = 0; j < bob.outputs; ++j) {
                    r(idx(i, j, k, l)) += 1;
                    r(idx(i, j, k, 0)) -= 1;
                }
                rows.push_back(std::move(r));
            }

    RationalMatrix eq(static_cast<Index>(rows.size()), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        eq.row(static_cast<Index>(r)) = rows[r].transpose();
    RationalVector unit = RationalVector::Zero(n);
    for (int i = 0; i < alice.outputs; ++i)
        for (int j = 0; j < bob.outputs; ++j)
            unit(idx(i, j, 0, 0)) = 1;
    return PolyhedralCone(std::move(eq), std::move(unit));
}

Marginals marginals(const BipartiteBoxState& state)
{
    if (!state.no_signalling())
        throw SignallingError("marginals are undefined for a signalling state");
    const BoxShape a = state.alice(), b = state.bob();
    RationalVector pa = RationalVector::Zero(a.size());
    RationalVector pb = RationalVector::Zero(b.size());
    for (int k = 0; k < a.inputs; ++k)
        for (int i = 0; i < a.outputs; ++i)
            for (int j = 0; j < b.outputs; ++j)
                pa(k * a.outputs + i) += state.p(i, j, k, 0);
    for (int l = 0; l < b.inputs; ++l)
        for (int j = 0; j < b.outputs; ++j)
            for (int i = 0; i < a.outputs; ++i)
                pb(l * b.outputs + j) += state.p(i, j, 0, l);
    return Marginals{BoxState(a, std::move(pa)), BoxState(b, std::move(pb))};
}

// ---------------------------------------------------------------------------
// Vertices and extremality
// ---------------------------------------------------------------------------

namespace {

double binomial(Index n, Index k)
{
    return std::exp(std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
                    std::lgamma(static_cast<double>(n - k) + 1));
}

class VertexSearch
{
public:
    explicit VertexSearch(const PolyhedralCone& cone)
        : m_cone(cone), m_rows(cone.affine_dim()), m_k(cone.affine_dim()), m_n(cone.ambient_dim())
    {
    }

    std::set<std::vector<Rational>> run()
    {
        descend(0);
        return std::move(m_found);
    }

private:
    void descend(Index start)
    {
        const Index chosen = static_cast<Index>(m_chosen.size());
        if (chosen == m_k) {
            evaluate();
            return;
        }
        for (Index idx = start; idx <= m_n - (m_k - chosen); ++idx) {
            if (!m_rows.try_add(m_cone.directions().row(idx).transpose()))
                continue;
            m_chosen.push_back(idx);
            descend(idx + 1);
            m_chosen.pop_back();
            m_rows.pop();
        }
    }

    // Coordinates in m_chosen vanish; solve for t and keep feasible points.
    void evaluate()
    {
        RationalMatrix a(m_k, m_k);
        RationalVector b(m_k);
        for (Index r = 0; r < m_k; ++r) {
            a.row(r) = m_cone.directions().row(m_chosen[static_cast<std::size_t>(r)]);
            b(r) = -m_cone.base_point()(m_chosen[static_cast<std::size_t>(r)]);
        }
        const auto t = solve_exact<Rational>(a, b);
        if (!t)
            return;
        RationalVector x = m_cone.base_point();
        for (Index c = 0; c < m_k; ++c)
            if ((*t)(c) != 0)
                x += (*t)(c) * m_cone.directions().col(c);
        if (nonnegative(x))
            m_found.insert(as_key(x));
    }

    const PolyhedralCone& m_cone;
    IndependentRows<Rational> m_rows;
    Index m_k;
    Index m_n;
    std::vector<Index> m_chosen;
    std::set<std::vector<Rational>> m_found;
};

}  // namespace

std::vector<RationalVector> enumerate_vertices(const PolyhedralCone& cone)
{
    const Index k = cone.affine_dim();
    const Index n = cone.ambient_dim();
    if (binomial(n, k) > 5e6)
        throw SizeError("vertex enumeration: too many tight-set candidates (C(" + std::to_string(n) + "," +
                        std::to_string(k) + "))");
    std::vector<RationalVector> out;
    for (const auto& key : VertexSearch(cone).run())
        out.push_back(Eigen::Map<const RationalVector>(key.data(), static_cast<Index>(key.size())));
    return out;
}

std::vector<BipartiteBoxState> no_signalling_vertices(BoxShape alice, BoxShape bob)
{
    require_shape(alice);
    require_shape(bob);
    if (alice.size() > 6 || bob.size() > 6)
        throw SizeError("vertex enumeration is capped at inputs * outputs <= 6 per side");
    std::vector<BipartiteBoxState> out;
    for (const auto& v : enumerate_vertices(no_signalling_polytope(alice, bob)))
        out.push_back(BipartiteBoxState::from_flat(alice, bob, v));
    return out;
}

bool is_extremal(const RationalVector& x, const PolyhedralCone& cone)
{
    if (!cone.contains(x))
        throw InfeasibleState("state is not in the normalized cone base");
    IndependentRows<Rational> tight(cone.affine_dim());
    for (Index i = 0; i < x.size(); ++i)
        if (x(i) == 0)
            tight.try_add(cone.directions().row(i).transpose());
    return static_cast<Index>(tight.size()) == cone.affine_dim();
}

bool is_extremal(const BoxState& state)
{
    return is_extremal(state.table(), box_cone(state.shape()));
}

bool is_extremal(const BipartiteBoxState& state)
{
    if (!state.no_signalling())
        throw SignallingError("state is signalling");
    return is_extremal(state.flatten(), no_signalling_polytope(state.alice(), state.bob()));
}

const char* to_string(VertexClass c)
{
    return c == VertexClass::product ? "product" : "entangled";
}

VertexClass classify_extremal(const BipartiteBoxState& state)
{
    if (!is_extremal(state))
        throw std::invalid_argument("classify_extremal: state is not extremal");
    const Marginals m = marginals(state);
    const bool alice_pure = is_extremal(m.alice);
    const bool bob_pure = is_extremal(m.bob);
    if (alice_pure || bob_pure) {
        // A pure marginal forces the joint state to factorize.
        if (!(product(m.alice, m.bob) == state))
            throw std::logic_error("classify_extremal: pure marginal without product factorization");
        if (!(alice_pure && bob_pure))
            throw std::logic_error("classify_extremal: extremal product with a mixed factor");
        return VertexClass::product;
    }
    return VertexClass::entangled;
}

// ---------------------------------------------------------------------------
// Relabelings
// ---------------------------------------------------------------------------

namespace {

bool is_permutation_of(const std::vector<int>& p, int n)
{
    if (static_cast<int>(p.size()) != n)
        return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : p) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

void validate(const SideRelabeling& r, BoxShape shape)
{
    bool ok = is_permutation_of(r.inputs, shape.inputs) && static_cast<int>(r.outputs.size()) == shape.inputs;
    for (std::size_t k = 0; ok && k < r.outputs.size(); ++k)
        ok = is_permutation_of(r.outputs[k], shape.outputs);
    if (!ok)
        throw std::invalid_argument("relabeling spec does not match the box shape");
}

std::vector<std::vector<int>> permutations(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

SideRelabeling SideRelabeling::identity(BoxShape shape)
{
    SideRelabeling r;
    r.inputs.resize(static_cast<std::size_t>(shape.inputs));
    std::iota(r.inputs.begin(), r.inputs.end(), 0);
    std::vector<int> outs(static_cast<std::size_t>(shape.outputs));
    std::iota(outs.begin(), outs.end(), 0);
    r.outputs.assign(static_cast<std::size_t>(shape.inputs), outs);
    return r;
}

BipartiteBoxState local_relabeling(const BipartiteBoxState& state, const RelabelingSpec& spec)
{
    const BoxShape a = state.alice(), b = state.bob();
    validate(spec.alice, a);
    validate(spec.bob, b);
    RationalMatrix t(state.table().rows(), state.table().cols());
    for (int k = 0; k < a.inputs; ++k)
        for (int l = 0; l < b.inputs; ++l)
            for (int i = 0; i < a.outputs; ++i)
                for (int j = 0; j < b.outputs; ++j) {
                    const int k2 = spec.alice.inputs[k], l2 = spec.bob.inputs[l];
                    const int i2 = spec.alice.outputs[k][i], j2 = spec.bob.outputs[l][j];
                    t(k2 * a.outputs + i2, l2 * b.outputs + j2) = state.p(i, j, k, l);
                }
    return BipartiteBoxState(a, b, std::move(t));
}

std::vector<SideRelabeling> all_side_relabelings(BoxShape shape)
{
    require_shape(shape);
    const auto input_perms = permutations(shape.inputs);
    const auto output_perms = permutations(shape.outputs);
    const std::size_t per_input = output_perms.size();
    std::vector<SideRelabeling> out;
    for (const auto& ip : input_perms) {
        std::vector<std::size_t> odometer(static_cast<std::size_t>(shape.inputs), 0);
        for (;;) {
            SideRelabeling r;
            r.inputs = ip;
            for (std::size_t k = 0; k < odometer.size(); ++k)
                r.outputs.push_back(output_perms[odometer[k]]);
            out.push_back(std::move(r));
            std::size_t pos = 0;
            while (pos < odometer.size() && ++odometer[pos] == per_input)
                odometer[pos++] = 0;
            if (pos == odometer.size())
                break;
        }
    }
    return out;
}

std::vector<RelabelingSpec> all_relabelings(BoxShape alice, BoxShape bob)
{
    const auto as = all_side_relabelings(alice);
    const auto bs = all_side_relabelings(bob);
    std::vector<RelabelingSpec> out;
    out.reserve(as.size() * bs.size());
    for (const auto& x : as)
        for (const auto& y : bs)
            out.push_back(RelabelingSpec{x, y});
    return out;
}

std::vector<BipartiteBoxState> relabeling_orbit(const BipartiteBoxState& state)
{
    std::set<BipartiteBoxState> orbit;
    for (const auto& spec : all_relabelings(state.alice(), state.bob()))
        orbit.insert(local_relabeling(state, spec));
    return {orbit.begin(), orbit.end()};
}

// ---------------------------------------------------------------------------
// Separability
// ---------------------------------------------------------------------------

namespace {

std::vector<BoxState> deterministic_boxes(BoxShape shape)
{
    std::vector<BoxState> out;
    std::vector<int> outcomes(static_cast<std::size_t>(shape.inputs), 0);
    for (;;) {
        out.push_back(BoxState::deterministic(shape, outcomes));
        std::size_t pos = 0;
        while (pos < outcomes.size() && ++outcomes[pos] == shape.outputs)
            outcomes[pos++] = 0;
        if (pos == outcomes.size())
            break;
    }
    return out;
}

}  // namespace

std::vector<BipartiteBoxState> product_vertices(BoxShape alice, BoxShape bob)
{
    std::vector<BipartiteBoxState> out;
    for (const auto& a : deterministic_boxes(alice))
        for (const auto& b : deterministic_boxes(bob))
            out.push_back(product(a, b));
    std::sort(out.begin(), out.end());
    return out;
}

bool in_separable_tensor_product(const BipartiteBoxState& state)
{
    if (!state.no_signalling())
        throw SignallingError("separability test needs a no-signalling state");
    const auto vertices = product_vertices(state.alice(), state.bob());
    const RationalVector target = state.flatten();
    RationalMatrix a(target.size() + 1, static_cast<Index>(vertices.size()));
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const Index col = static_cast<Index>(v);
        a.block(0, col, target.size(), 1) = vertices[v].flatten();
        a(target.size(), col) = 1;
    }
    RationalVector b(target.size() + 1);
    b.head(target.size()) = target;
    b(target.size()) = 1;
    return find_feasible_point(a, b).has_value();
}

bool is_generalized_unentangled_box(const BipartiteBoxState& state)
{
    if (!state.no_signalling())
        throw SignallingError("generalized entanglement test needs a no-signalling state");
    if (is_extremal(state)) {
        const Marginals m = marginals(state);
        return is_extremal(m.alice) && is_extremal(m.bob);
    }
    return in_separable_tensor_product(state);
}

}  // namespace ge

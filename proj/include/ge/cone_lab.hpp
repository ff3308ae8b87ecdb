#ifndef GE_CONE_LAB_HPP
#define GE_CONE_LAB_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ge/exact_linalg.hpp"

namespace ge {

class InfeasibleState : public std::invalid_argument
{
public:
    explicit InfeasibleState(const std::string& what) : std::invalid_argument(what) {}
};

class SignallingError : public std::invalid_argument
{
public:
    explicit SignallingError(const std::string& what) : std::invalid_argument(what) {}
};

class SizeError : public std::invalid_argument
{
public:
    explicit SizeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Number of alternative measurements and outcomes per measurement.
struct BoxShape
{
    int inputs = 2;
    int outputs = 2;

    Eigen::Index size() const { return static_cast<Eigen::Index>(inputs) * outputs; }
    friend bool operator==(const BoxShape&, const BoxShape&) = default;
};

/// Conditional distribution p[o|k]; entry k * outputs + o.
class BoxState
{
public:
    /// Checks p >= 0 and sum_o p[o|k] = 1 for every input k.
    BoxState(BoxShape shape, RationalVector table);

    /// Outcome `outcomes[k]` with certainty for each input k.
    static BoxState deterministic(BoxShape shape, std::span<const int> outcomes);

    BoxShape shape() const { return m_shape; }
    const RationalVector& table() const { return m_table; }
    const Rational& p(int outcome, int input) const { return m_table(input * m_shape.outputs + outcome); }

    /// "(p[0|0],p[1|0],p[0|1],p[1|1])" style listing.
    std::string to_string() const;

    friend bool operator==(const BoxState& a, const BoxState& b)
    {
        return a.m_shape == b.m_shape && a.m_table == b.m_table;
    }

private:
    BoxShape m_shape;
    RationalVector m_table;
};

/// Joint table p[ij|kl] laid out as blocks: row k * M_A + i, column
/// l * M_B + j, so block (k, l) holds the outcome distribution for inputs
/// (k, l). Construction checks p >= 0 and that each block sums to one;
/// no-signalling is tested separately (no_signalling()).
class BipartiteBoxState
{
public:
    BipartiteBoxState(BoxShape alice, BoxShape bob, RationalMatrix table);

    BoxShape alice() const { return m_alice; }
    BoxShape bob() const { return m_bob; }
    const RationalMatrix& table() const { return m_table; }
    const Rational& p(int i, int j, int k, int l) const
    {
        return m_table(k * m_alice.outputs + i, l * m_bob.outputs + j);
    }

    /// Row-major flattening of table().
    RationalVector flatten() const;
    static BipartiteBoxState from_flat(BoxShape alice, BoxShape bob, const RationalVector& flat);

    /// Marginals independent of the remote party's input.
    bool no_signalling() const;

    friend bool operator==(const BipartiteBoxState& a, const BipartiteBoxState& b)
    {
        return a.m_alice == b.m_alice && a.m_bob == b.m_bob && a.m_table == b.m_table;
    }
    /// Lexicographic order on the flattened table (canonical listing order).
    friend bool operator<(const BipartiteBoxState& a, const BipartiteBoxState& b);

private:
    BoxShape m_alice, m_bob;
    RationalMatrix m_table;
};

BipartiteBoxState product(const BoxState& a, const BoxState& b);

/// Convex combination; weights must be nonnegative and sum to one.
BipartiteBoxState mixture(std::span<const BipartiteBoxState> states, std::span<const Rational> weights);
BipartiteBoxState uniform_mixture(std::span<const BipartiteBoxState> states);

/// The two displayed extremal representatives for a pair of 2-input,
/// 2-output boxes.
BipartiteBoxState pr_product_representative();
BipartiteBoxState pr_entangled_representative();

/// Cone { x >= 0 : E x = 0 } with unit functional lambda. The normalized base
/// { x in C : lambda(x) = 1 } is stored as x0 + D t.
class PolyhedralCone
{
public:
    PolyhedralCone(RationalMatrix equalities, RationalVector unit);

    Eigen::Index ambient_dim() const { return m_unit.size(); }
    const RationalMatrix& equalities() const { return m_equalities; }
    const RationalVector& unit() const { return m_unit; }
    const RationalVector& base_point() const { return m_base_point; }
    const RationalMatrix& directions() const { return m_directions; }
    /// Dimension of the affine hull of the normalized base.
    Eigen::Index affine_dim() const { return m_directions.cols(); }

    /// Exact membership in the normalized base.
    bool contains(const RationalVector& x) const;

    /// lambda(x) = 0 and x in C imply x = 0. Decided by an exact LP on
    /// { E x = 0, lambda(x) = 0, sum(x) = 1, x >= 0 }.
    bool unit_separates() const;

private:
    RationalMatrix m_equalities;
    RationalVector m_unit;
    RationalVector m_base_point;
    RationalMatrix m_directions;
};

/// State cone of one box: per-input sums equal, lambda = sum for input 0.
PolyhedralCone box_cone(BoxShape shape);

/// Maximal tensor product of two box cones: block sums equal and
/// no-signalling in both directions. lambda = sum of block (0, 0).
PolyhedralCone no_signalling_polytope(BoxShape alice, BoxShape bob);

struct Marginals
{
    BoxState alice;
    BoxState bob;
};

/// Alice's row sums and Bob's column sums; throws SignallingError unless
/// the state is no-signalling.
Marginals marginals(const BipartiteBoxState& state);

/// Exact vertices of the normalized base, sorted lexicographically.
/// Throws SizeError when the number of tight-set candidates exceeds 5e6.
std::vector<RationalVector> enumerate_vertices(const PolyhedralCone& cone);

/// Vertices of no_signalling_polytope(alice, bob) as box states; caps each
/// side at inputs * outputs <= 6.
std::vector<BipartiteBoxState> no_signalling_vertices(BoxShape alice, BoxShape bob);

/// Rank test on the tight nonnegativity constraints; throws
/// InfeasibleState if x is not in the base (SignallingError for signalling
/// box tables).
bool is_extremal(const RationalVector& x, const PolyhedralCone& cone);
bool is_extremal(const BoxState& state);
bool is_extremal(const BipartiteBoxState& state);

enum class VertexClass
{
    product,
    entangled,
};

const char* to_string(VertexClass c);

/// Product iff both marginals are vertices of their single-box polytopes.
/// Throws std::invalid_argument for non-extremal input.
VertexClass classify_extremal(const BipartiteBoxState& state);

/// Relabeling of one party: `inputs[k]` is the new label of input k and
/// `outputs[k][o]` the new label of outcome o of (original) input k.
struct SideRelabeling
{
    std::vector<int> inputs;
    std::vector<std::vector<int>> outputs;

    static SideRelabeling identity(BoxShape shape);
};

struct RelabelingSpec
{
    SideRelabeling alice;
    SideRelabeling bob;
};

BipartiteBoxState local_relabeling(const BipartiteBoxState& state, const RelabelingSpec& spec);

/// Every input permutation combined with every per-input output permutation.
std::vector<SideRelabeling> all_side_relabelings(BoxShape shape);
std::vector<RelabelingSpec> all_relabelings(BoxShape alice, BoxShape bob);

/// Distinct images of `state` under all_relabelings, sorted.
std::vector<BipartiteBoxState> relabeling_orbit(const BipartiteBoxState& state);

/// Products of deterministic boxes of each side.
std::vector<BipartiteBoxState> product_vertices(BoxShape alice, BoxShape bob);

/// Exact LP: is the state a convex combination of product vertices?
bool in_separable_tensor_product(const BipartiteBoxState& state);

/// Extremal states: both marginals extremal. Otherwise: separable.
bool is_generalized_unentangled_box(const BipartiteBoxState& state);

}  // namespace ge

#endif  // GE_CONE_LAB_HPP

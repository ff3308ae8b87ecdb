#include <doctest.h>

#include <algorithm>

#include "ge/cone_lab.hpp"
#include "support.hpp"

using namespace ge;

namespace {

const BoxShape two{2, 2};

RationalMatrix table(std::initializer_list<std::initializer_list<int>> rows, int den)
{
    RationalMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index r = 0;
    for (const auto& row : rows) {
        Eigen::Index c = 0;
        for (int v : row)
            m(r, c++) = Rational(v, den);
        ++r;
    }
    return m;
}

}  // namespace

TEST_CASE("box state validation")
{
    RationalVector ok(4);
    ok << Rational(1, 3), Rational(2, 3), 1, 0;
    CHECK_NOTHROW(BoxState(two, ok));
    RationalVector neg = ok;
    neg(0) = Rational(-1, 3);
    neg(1) = Rational(4, 3);
    CHECK_THROWS_AS(BoxState(two, neg), InfeasibleState);
    RationalVector sum = ok;
    sum(3) = 1;
    CHECK_THROWS_AS(BoxState(two, sum), InfeasibleState);
    CHECK_THROWS_AS(BipartiteBoxState(two, two, table({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}, 1)),
                    InfeasibleState);
}

TEST_CASE("no-signalling polytope dimension")
{
    const PolyhedralCone cone = no_signalling_polytope(two, two);
    CHECK(cone.ambient_dim() == 16);
    CHECK(cone.affine_dim() == test::oracle().at("ns_affine_dim").get<Eigen::Index>());
    CHECK(cone.unit_separates());
    CHECK(box_cone(two).affine_dim() == 2);
    CHECK(box_cone(two).unit_separates());
}

TEST_CASE("product states are feasible and no-signalling")
{
    for (const auto& v : product_vertices(two, two)) {
        CHECK(v.no_signalling());
        CHECK(no_signalling_polytope(two, two).contains(v.flatten()));
    }
    const int zero_one[] = {0, 1};
    const BoxState a = BoxState::deterministic(two, zero_one);
    const Marginals m = marginals(product(a, a));
    CHECK(m.alice == a);
    CHECK(m.bob == a);
}

TEST_CASE("marginals of the displayed representatives")
{
    const Marginals m = marginals(pr_entangled_representative());
    RationalVector half(4);
    half << Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2);
    CHECK(m.alice == BoxState(two, half));
    CHECK(m.bob == BoxState(two, half));
    CHECK(m.alice.to_string() == "(1/2,1/2,1/2,1/2)");

    // Bob's outcome for input 1 follows Alice's input.
    const BipartiteBoxState sig(two, two, table({{2, 0, 2, 0}, {0, 0, 0, 0}, {2, 0, 0, 2}, {0, 0, 0, 0}}, 2));
    CHECK_FALSE(sig.no_signalling());
    CHECK_THROWS_AS(marginals(sig), SignallingError);
    CHECK_THROWS_AS(is_extremal(sig), SignallingError);
}

TEST_CASE("vertex enumeration")
{
    const auto v = no_signalling_vertices(two, two);
    CHECK(static_cast<int>(v.size()) == test::oracle().at("ns_vertex_count").get<int>());
    CHECK(std::is_sorted(v.begin(), v.end()));
    const auto entangled = std::count_if(v.begin(), v.end(), [](const BipartiteBoxState& s) {
        return classify_extremal(s) == VertexClass::entangled;
    });
    CHECK(entangled == test::oracle().at("ns_entangled_count").get<long>());
    for (const auto& s : v) {
        CHECK(s.no_signalling());
        CHECK(is_extremal(s));
    }
    CHECK(std::find(v.begin(), v.end(), pr_entangled_representative()) != v.end());
    CHECK(std::find(v.begin(), v.end(), pr_product_representative()) != v.end());

    // A single two-input box: the square with four deterministic corners.
    CHECK(enumerate_vertices(box_cone(two)).size() == 4);
    CHECK(no_signalling_vertices(BoxShape{1, 2}, BoxShape{1, 2}).size() == 4);
    CHECK(no_signalling_vertices(BoxShape{1, 2}, two).size() == 8);
    CHECK(no_signalling_vertices(BoxShape{1, 1}, BoxShape{1, 1}).size() == 1);
    CHECK_THROWS_AS(no_signalling_vertices(BoxShape{4, 2}, two), SizeError);
}

TEST_CASE("extremality examples")
{
    CHECK(is_extremal(pr_entangled_representative()));
    CHECK(classify_extremal(pr_entangled_representative()) == VertexClass::entangled);
    CHECK(classify_extremal(pr_product_representative()) == VertexClass::product);
    CHECK(std::string(to_string(VertexClass::entangled)) == "entangled");

    const BipartiteBoxState states[] = {pr_entangled_representative(), pr_product_representative()};
    const BipartiteBoxState mid = uniform_mixture(states);
    CHECK_FALSE(is_extremal(mid));
    CHECK_THROWS(classify_extremal(mid));

    RationalVector half(4);
    half << Rational(1, 2), Rational(1, 2), 1, 0;
    CHECK_FALSE(is_extremal(BoxState(two, half)));
    const int corner[] = {1, 0};
    CHECK(is_extremal(BoxState::deterministic(two, corner)));

    const PolyhedralCone cone = no_signalling_polytope(two, two);
    RationalVector outside = RationalVector::Zero(16);
    CHECK_THROWS_AS(is_extremal(outside, cone), InfeasibleState);
}

TEST_CASE("mixture validation")
{
    const BipartiteBoxState states[] = {pr_entangled_representative(), pr_product_representative()};
    const Rational bad[] = {Rational(1, 2), Rational(1, 3)};
    CHECK_THROWS(mixture(states, bad));
    const Rational negative[] = {Rational(3, 2), Rational(-1, 2)};
    CHECK_THROWS(mixture(states, negative));
    const Rational ok[] = {Rational(1, 4), Rational(3, 4)};
    CHECK(mixture(states, ok).no_signalling());
}

TEST_CASE("relabelings")
{
    const RelabelingSpec id{SideRelabeling::identity(two), SideRelabeling::identity(two)};
    CHECK(local_relabeling(pr_entangled_representative(), id) == pr_entangled_representative());
    CHECK(all_side_relabelings(two).size() == 8);
    CHECK(all_relabelings(two, two).size() == 64);

    RelabelingSpec bad = id;
    bad.alice.inputs = {0, 0};
    CHECK_THROWS(local_relabeling(pr_entangled_representative(), bad));

    CHECK(relabeling_orbit(pr_entangled_representative()).size() == 8);
    CHECK(relabeling_orbit(pr_product_representative()).size() == 16);

    // The two orbits partition the vertex set.
    auto all = relabeling_orbit(pr_entangled_representative());
    const auto prod = relabeling_orbit(pr_product_representative());
    all.insert(all.end(), prod.begin(), prod.end());
    std::sort(all.begin(), all.end());
    CHECK(all == no_signalling_vertices(two, two));
}

TEST_CASE("separability of the entangled-vertex mixture")
{
    const auto v = no_signalling_vertices(two, two);
    std::vector<BipartiteBoxState> entangled;
    for (const auto& s : v)
        if (classify_extremal(s) == VertexClass::entangled)
            entangled.push_back(s);
    const BipartiteBoxState mix = uniform_mixture(entangled);
    const auto& want = test::oracle().at("entangled_mixture");
    const RationalVector flat = mix.flatten();
    REQUIRE(flat.size() == static_cast<Eigen::Index>(want.size()));
    for (Eigen::Index k = 0; k < flat.size(); ++k)
        CHECK(to_string(flat(k)) == want[static_cast<std::size_t>(k)].get<std::string>());
    CHECK(in_separable_tensor_product(mix) == test::oracle().at("entangled_mixture_separable").get<bool>());

    CHECK_FALSE(in_separable_tensor_product(pr_entangled_representative()));
    CHECK(in_separable_tensor_product(pr_product_representative()));
    CHECK(is_generalized_unentangled_box(pr_product_representative()));
    CHECK_FALSE(is_generalized_unentangled_box(pr_entangled_representative()));
}

TEST_CASE("polytope size guard")
{
    CHECK_THROWS_AS(no_signalling_polytope(BoxShape{101, 101}, BoxShape{1, 1}), SizeError);
    CHECK_NOTHROW(no_signalling_polytope(BoxShape{3, 3}, BoxShape{3, 3}));
}

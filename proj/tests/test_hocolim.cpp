#include <catch2/catch_amalgamated.hpp>

#include "sprglue/glue.hpp"
#include "sprglue/hocolim.hpp"

using namespace sprglue;

TEST_CASE("betti of the model library") {
    CHECK(betti(point_complex()) == std::vector<int>{1});
    CHECK(betti(sphere2_complex()) == std::vector<int>({1, 0, 1}));
    CHECK(betti(wedge_two_spheres()) == std::vector<int>({1, 0, 2}));
    CHECK(betti(empty_complex()).empty());
    // two disjoint points
    CHECK(betti(SimplicialComplex(2, {{0}, {1}})) == std::vector<int>{2});
    // hollow triangle is a circle
    CHECK(betti(SimplicialComplex(3, {{0, 1}, {1, 2}, {0, 2}})) == std::vector<int>({1, 1}));
}

TEST_CASE("euler characteristics") {
    CHECK(euler_characteristic(sphere2_complex()) == 2);
    CHECK(euler_characteristic(wedge_two_spheres()) == 3);
    CHECK(euler_characteristic(point_complex()) == 1);
}

TEST_CASE("simplicial map validation") {
    CHECK_THROWS_AS(SimplicialMap::validated(sphere2_complex(), point_complex(), {0, 0, 0}),
                    std::invalid_argument);  // wrong domain size
    // collapsing a facet of the sphere onto an edge of a hollow triangle is
    // not simplicial: the image {0,1,2} is not a face
    SimplicialComplex circle(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(SimplicialMap::validated(sphere2_complex(), circle, {0, 1, 2, 0}),
                    std::invalid_argument);
    // collapse to a point is fine
    CHECK_NOTHROW(SimplicialMap::validated(sphere2_complex(), point_complex(), {0, 0, 0, 0}));
}

TEST_CASE("hocolim of a cone is contractible") {
    FinitePoset two({"a", "b"}, {{1, 1}, {0, 1}});
    std::map<std::pair<int, int>, SimplicialMap> arrows;
    arrows[{0, 1}] = SimplicialMap{{0, 0, 0, 0}};
    ComplexDiagram cone = build_complex_diagram(two, {sphere2_complex(), point_complex()}, arrows);
    CHECK(hocolim_betti(cone) == std::vector<int>({1, 0, 0, 0}));
}

TEST_CASE("hocolim of a cylinder keeps the sphere") {
    FinitePoset two({"a", "b"}, {{1, 1}, {0, 1}});
    std::map<std::pair<int, int>, SimplicialMap> arrows;
    arrows[{0, 1}] = SimplicialMap{{0, 1, 2, 3}};
    ComplexDiagram cyl =
        build_complex_diagram(two, {sphere2_complex(), sphere2_complex()}, arrows);
    CHECK(hocolim_betti(cyl) == std::vector<int>({1, 0, 1, 0}));
}

TEST_CASE("hocolim over a one-element poset is the object itself") {
    FinitePoset single({"x"}, {{1}});
    ComplexDiagram d = build_complex_diagram(single, {wedge_two_spheres()}, {});
    CHECK(hocolim_betti(d) == betti(wedge_two_spheres()));
}

TEST_CASE("constant point diagram over a poset with a minimum") {
    TwPoset tw = tw_poset(3);
    std::vector<SimplicialComplex> objects(tw.poset.size(), point_complex());
    std::map<std::pair<int, int>, SimplicialMap> arrows;
    for (auto [x, y] : hasse_edges(tw.poset)) arrows[{x, y}] = SimplicialMap{{0}};
    ComplexDiagram d = build_complex_diagram(tw.poset, objects, arrows);
    std::vector<int> b = hocolim_betti(d);
    REQUIRE(!b.empty());
    CHECK(b[0] == 1);
    for (std::size_t k = 1; k < b.size(); ++k) CHECK(b[k] == 0);
}

TEST_CASE("inconsistent squares are rejected") {
    // a square with two paths that disagree on a two-point complex
    std::vector<std::vector<char>> leq = {
        {1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
    FinitePoset square({"lo", "m1", "m2", "hi"}, leq);
    SimplicialComplex pts(2, {{0}, {1}});
    std::map<std::pair<int, int>, SimplicialMap> arrows;
    arrows[{0, 1}] = SimplicialMap{{0, 1}};
    arrows[{0, 2}] = SimplicialMap{{0, 1}};
    arrows[{1, 3}] = SimplicialMap{{0, 1}};
    arrows[{2, 3}] = SimplicialMap{{1, 0}};  // disagrees around the square
    CHECK_THROWS_AS(build_complex_diagram(square, {pts, pts, pts, pts}, arrows),
                    std::invalid_argument);
}

TEST_CASE("glued models are point-like") {
    GluedModelReport r = verify_glued_models();
    REQUIRE(!r.betti_rank1.empty());
    CHECK(r.betti_rank1[0] == 1);
    for (std::size_t k = 1; k < r.betti_rank1.size(); ++k) CHECK(r.betti_rank1[k] == 0);
    REQUIRE(!r.betti_subregular.empty());
    CHECK(r.betti_subregular[0] == 1);
    for (std::size_t k = 1; k < r.betti_subregular.size(); ++k) CHECK(r.betti_subregular[k] == 0);
    CHECK(r.chi_rank1 == 1);
    CHECK(r.chi_subregular == 1);
}

TEST_CASE("euler characteristic matches the chain sum and the count diagrams") {
    // chi of the total complex = sum over chains of (-1)^k chi(F(x0))
    ComplexDiagram d = subregular_glued_diagram();
    long long direct = 0;
    auto chains = strict_chains(d.index);
    for (const auto& ch : chains) {
        int sign = (ch.size() % 2 == 1) ? 1 : -1;
        direct += sign * euler_characteristic(d.objects[ch[0]]);
    }
    CHECK(hocolim_euler_characteristic(d) == direct);

    // and the count-level virtual totals evaluated at q = 1 agree
    auto glued2 = glued_springer_check(2, JordanType({1, 1}), {2, 3, 5, 7});
    CHECK(glued2.total.eval(1) == verify_glued_models().chi_rank1);
    auto glued3 = glued_springer_check(3, JordanType({2, 1}), {2, 3, 5, 7});
    CHECK(glued3.total.eval(1) == verify_glued_models().chi_subregular);
}

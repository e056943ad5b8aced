#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "lss/decomposition.hpp"
#include "test_support.hpp"

using namespace lss;
using lss::testing::figure1;
using lss::testing::binary_figure5;
using lss::testing::path;
using lss::testing::random_forest;

namespace {

std::vector<VertexSet> admissible_sets(const DecompositionResult& res) {
    std::vector<VertexSet> out;
    for (const auto& c : res.components) out.push_back(c.S);
    return out;
}

} // namespace

TEST_CASE("admissibility on figure-1") {
    Forest f = figure1();
    CHECK(is_admissible(f, 4, {3, 5}));
    CHECK(is_admissible(f, 4, {}));
    CHECK_FALSE(is_admissible(f, 4, {2, 3}));
    CHECK(is_admissible_rank(f, 4, {5}));
    CHECK(is_admissible_rank(f, 4, {}));
}

TEST_CASE("star center admissible through the rank form") {
    Forest star = parse_forest("n=8; 1-2 1-3 1-4 1-5 1-6 1-7 1-8");
    CHECK(is_admissible_rank(star, 4, {1}));
    CHECK(is_admissible(star, 4, {1}));
}

TEST_CASE("figure-1 decomposition") {
    DecompositionResult res = enumerate_admissible(figure1(), 4);
    std::vector<VertexSet> expected{{}, {2}, {3}, {5}, {3, 5}};
    CHECK(admissible_sets(res) == expected);
    for (const auto& c : res.components) CHECK(c.dim == 34);
    CHECK(res.variety_dim == 34);
}

TEST_CASE("component dimensions") {
    Forest f = figure1();
    CHECK(component_dimension(f, 4, {}) == 34);
    CHECK(component_dimension(f, 4, {3, 5}) == 34);
    CHECK_THROWS_AS(component_dimension(f, 4, {2, 3}), NotAdmissible);

    Forest star = parse_forest("n=8; 1-2 1-3 1-4 1-5 1-6 1-7 1-8");
    CHECK(component_dimension(star, 4, {1}) == 28);
}

TEST_CASE("path has only the empty component") {
    DecompositionResult res = enumerate_admissible(path(6), 3);
    REQUIRE(res.components.size() == 1);
    CHECK(res.components[0].S.empty());
    CHECK(res.variety_dim == 13);
}

TEST_CASE("witnesses have full rank in the complement matroid") {
    DecompositionResult res = enumerate_admissible(figure1(), 4);
    for (const auto& c : res.components)
        for (const auto& [i, w] : c.witness) CHECK(w.size() == 4);
}

TEST_CASE("star oracle") {
    DecompositionResult two = star_oracle(8, 5);
    REQUIRE(two.components.size() == 2);
    CHECK(two.components[0].dim == 33); // dn - (n-1)
    CHECK(two.components[1].dim == 35); // dn - d
    CHECK(two.variety_dim == 35);

    CHECK(star_oracle(8, 8).components.size() == 1);
    DecompositionResult edge = star_oracle(2, 3);
    REQUIRE(edge.components.size() == 1);
    CHECK(edge.components[0].dim == 5);
}

TEST_CASE("caterpillar oracle reproduces the example") {
    std::vector<int> t{0, 4, 0, 2, 1, 2, 3, 3, 0};
    DecompositionResult res = caterpillar_oracle(9, t, 5);
    REQUIRE(res.components.size() == 6);
    std::map<VertexSet, int> dims;
    for (const auto& c : res.components) dims[c.S] = c.dim;
    CHECK(dims[VertexSet{}] == 97);
    CHECK(dims[VertexSet{7}] == 97);
    CHECK(dims[VertexSet{8}] == 97);
    CHECK(dims[VertexSet{2}] == 98);
    CHECK(dims[VertexSet{2, 7}] == 98);
    CHECK(dims[VertexSet{2, 8}] == 98);
}

TEST_CASE("caterpillar oracle trivial and cross-checked cases") {
    CHECK(caterpillar_oracle(1, {0}, 3).components.size() == 1);

    DecompositionResult oracle = caterpillar_oracle(2, {5, 0}, 5);
    std::vector<VertexSet> expected{{}, {1}};
    CHECK(admissible_sets(oracle) == expected);
    DecompositionResult direct =
        enumerate_admissible(caterpillar_graph(2, {5, 0}), 5);
    CHECK(admissible_sets(direct) == expected);
    for (size_t k = 0; k < 2; ++k)
        CHECK(oracle.components[k].dim == direct.components[k].dim);
}

TEST_CASE("binary tree oracle") {
    Forest f = binary_figure5();
    DecompositionResult res = binary_tree_oracle(f, 3);
    std::vector<VertexSet> expected{{}, {3}, {5}, {6}, {5, 6}};
    CHECK(admissible_sets(res) == expected);
    for (const auto& c : res.components) CHECK(c.dim == 23);

    CHECK(binary_tree_oracle(f, 4).components.size() == 1);
    CHECK(binary_tree_oracle(f, 5).components.size() == 1);
    CHECK(binary_tree_oracle(path(5), 3).components.size() == 1);
    CHECK_THROWS_AS(binary_tree_oracle(figure1(), 3), NotBinaryTree);
}

TEST_CASE("binary figure-5 agrees with direct enumeration") {
    Forest f = binary_figure5();
    for (int d : {3, 4, 5}) {
        DecompositionResult direct = enumerate_admissible(f, d);
        DecompositionResult oracle = binary_tree_oracle(f, d);
        CHECK(admissible_sets(direct) == admissible_sets(oracle));
        for (size_t k = 0; k < direct.components.size(); ++k)
            CHECK(direct.components[k].dim == oracle.components[k].dim);
    }
}

TEST_CASE("oracles agree with enumeration on random parameters") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 2 + static_cast<int>(rng() % 9);
        int d = 3 + static_cast<int>(rng() % 4);
        DecompositionResult oracle = star_oracle(n, d);
        DecompositionResult direct = enumerate_admissible(star_graph(n), d);
        CHECK(admissible_sets(oracle) == admissible_sets(direct));
        for (size_t k = 0; k < oracle.components.size(); ++k)
            CHECK(oracle.components[k].dim == direct.components[k].dim);

        int k = 1 + static_cast<int>(rng() % 4);
        std::vector<int> t;
        for (int j = 0; j < k; ++j) t.push_back(static_cast<int>(rng() % 6));
        DecompositionResult cat = caterpillar_oracle(k, t, d);
        DecompositionResult cat_direct =
            enumerate_admissible(caterpillar_graph(k, t), d);
        CHECK(admissible_sets(cat) == admissible_sets(cat_direct));
        for (size_t j = 0; j < cat.components.size(); ++j)
            CHECK(cat.components[j].dim == cat_direct.components[j].dim);
    }
}

TEST_CASE("definitions of admissibility are equivalent") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 60; ++iter) {
        Forest f = random_forest(rng, 12);
        int d = 3 + static_cast<int>(rng() % 3);
        std::vector<Vertex> high;
        for (Vertex i = 1; i <= f.vertex_count(); ++i)
            if (f.degree(i) >= d) high.push_back(i);
        for (size_t mask = 0; mask < (size_t{1} << high.size()); ++mask) {
            VertexSet s;
            for (size_t b = 0; b < high.size(); ++b)
                if (mask & (size_t{1} << b)) s.insert(high[b]);
            CHECK(is_admissible(f, d, s) == is_admissible_rank(f, d, s));
        }
    }
}

TEST_CASE("admissible members have high degree; large d gives only the empty set") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 60; ++iter) {
        Forest f = random_forest(rng, 10);
        int d = 3 + static_cast<int>(rng() % 3);
        DecompositionResult res = enumerate_admissible(f, d);
        REQUIRE(!res.components.empty());
        CHECK(res.components[0].S.empty());
        for (const auto& c : res.components)
            for (Vertex i : c.S) CHECK(f.degree(i) >= d);
        if (d > f.max_degree()) CHECK(res.components.size() == 1);
    }
}

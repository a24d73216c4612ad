#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "srgdist/constructions.hpp"
#include "srgdist/graph.hpp"

using namespace srg;

namespace {

Graph path4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

// independent metric oracle: Floyd-Warshall over the adjacency matrix
std::vector<int> floyd_warshall(const Graph& g) {
    const int n = g.order();
    const int inf = 1 << 28;
    std::vector<int> d(static_cast<size_t>(n) * n, inf);
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i) * n + i] = 0;
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) d[static_cast<size_t>(u) * n + v] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[static_cast<size_t>(i) * n + j] =
                    std::min(d[static_cast<size_t>(i) * n + j],
                             d[static_cast<size_t>(i) * n + k] + d[static_cast<size_t>(k) * n + j]);
    return d;
}

} // namespace

TEST_CASE("graph construction") {
    Graph k2(2, {{0, 1}});
    CHECK(k2.order() == 2);
    CHECK(k2.neighbors(0) == std::vector<int>{1});
    CHECK(k2.edge_count() == 1);

    Graph c5 = cycle(5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    CHECK_THROWS_AS(Graph(4, {{0, 0}}), SelfLoopError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), OutOfRangeError);
    CHECK_THROWS_AS(Graph(0, {}), BadParamsError);

    // duplicate edges merge
    Graph dup(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("strong regularity detection") {
    auto p = is_strongly_regular(petersen());
    REQUIRE(p.has_value());
    CHECK(*p == SrgParams{10, 3, 0, 1});

    auto c = is_strongly_regular(cycle(5));
    REQUIRE(c.has_value());
    CHECK(*c == SrgParams{5, 2, 0, 1});

    CHECK_FALSE(is_strongly_regular(path4()).has_value());
    CHECK_FALSE(is_strongly_regular(complete_graph(4)).has_value());
    // disconnected: two triangles
    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(is_strongly_regular(two_triangles).has_value());
}

TEST_CASE("srg params invariants") {
    CHECK_THROWS_AS((SrgParams{10, 3, 0, 2}.validate()), BadParamsError); // identity fails
    CHECK_THROWS_AS((SrgParams{10, 0, 0, 0}.validate()), BadParamsError);
    CHECK_THROWS_AS((SrgParams{10, 3, 3, 1}.validate()), BadParamsError); // a > d-1
    SrgParams ok{10, 3, 0, 1};
    CHECK_NOTHROW(ok.validate());
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible(cycle(5)));
    CHECK(is_irreducible(Graph(2, {{0, 1}})));
    CHECK_FALSE(is_irreducible(complete_bipartite(2)));
    CHECK_FALSE(is_irreducible(cycle(4)));
}

TEST_CASE("triangle freeness") {
    CHECK(is_triangle_free(petersen()));
    CHECK_FALSE(is_triangle_free(complete_graph(3)));
    CHECK_FALSE(is_triangle_free(rook(5)));
}

TEST_CASE("distance matrix basics") {
    DistanceMatrix d = distance_matrix(Graph(2, {{0, 1}}));
    CHECK(d.at(0, 0) == 0);
    CHECK(d.at(0, 1) == 1);
    CHECK(d.at(1, 0) == 1);

    CHECK_THROWS_AS(distance_matrix(bipartite_double_cover(complete_bipartite(2))),
                    DisconnectedError);

    // antipodal pairs of the Petersen cover sit at distance 5
    Graph cover = bipartite_double_cover(petersen());
    DistanceMatrix cd = distance_matrix(cover);
    for (int v = 0; v < 10; ++v) CHECK(cd.at(v, v + 10) == 5);
}

TEST_CASE("parallel assembly matches the serial reference and an independent oracle") {
    for (const auto* name : {"petersen", "clebsch", "rook:4", "paley:13"}) {
        Graph g = build_by_name(name);
        DistanceMatrix par = distance_matrix(g);
        CHECK(par == distance_matrix_serial(g));
        CHECK(par.entries() == floyd_warshall(g));
    }
}

TEST_CASE("diameters") {
    CHECK(diameter(petersen()) == 2);
    CHECK(diameter(bipartite_double_cover(petersen())) == 5);
    CHECK(diameter(bipartite_double_cover(rook(5))) == 3);
}

TEST_CASE("bipartite double cover structure") {
    // B(K2) is a perfect matching on 4 vertices
    Graph b = bipartite_double_cover(Graph(2, {{0, 1}}));
    CHECK(b.order() == 4);
    CHECK(b.edges() == std::vector<Edge>{{0, 3}, {1, 2}});

    // cover doubles the edge count and is 2-coloured by the second coordinate
    for (const auto* name : {"petersen", "clebsch", "cycle:5", "rook:3"}) {
        Graph g = build_by_name(name);
        Graph cover = bipartite_double_cover(g);
        CHECK(cover.edge_count() == 2 * g.edge_count());
        std::vector<int> side;
        CHECK(is_bipartite(cover, &side));
        Graph cover2 = bipartite_double_cover(g);
        CHECK(cover == cover2); // deterministic
    }

    // connected non-bipartite base: connected cover; bipartite base: two parts
    CHECK(is_connected(bipartite_double_cover(petersen())));
    CHECK(component_count(bipartite_double_cover(complete_bipartite(3))) == 2);
    CHECK_THROWS_AS(distance_matrix(bipartite_double_cover(crown(4))), DisconnectedError);

    // B(Clebsch) looks like the 5-cube
    Graph bc = bipartite_double_cover(clebsch());
    CHECK(bc.order() == 32);
    CHECK(regular_degree(bc) == 5);
    CHECK(is_bipartite(bc));
    CHECK(diameter(bc) == 5);
}

TEST_CASE("distance matrix entries are 1 exactly on edges") {
    for (const auto* name : {"petersen", "rook:4", "cayley:4"}) {
        Graph g = build_by_name(name);
        DistanceMatrix d = distance_matrix(g);
        CHECK(d.max_entry() <= g.order() - 1);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v)
                CHECK((d.at(u, v) == 1) == (u != v && g.adjacent(u, v)));
    }
}

TEST_CASE("counting identity holds whenever the predicate accepts") {
    for (const auto* name : {"petersen", "clebsch", "rook:5", "paley:13", "cayley:4", "kmm:3"}) {
        auto p = is_strongly_regular(build_by_name(name));
        REQUIRE(p.has_value());
        CHECK(static_cast<long long>(p->d) * (p->d - p->a - 1) ==
              static_cast<long long>(p->n - 1 - p->d) * p->c);
    }
}

TEST_CASE("vertex-transitive entries have permutation-equivalent distance rows") {
    for (const auto* name : {"petersen", "clebsch"}) {
        Graph g = build_by_name(name);
        DistanceMatrix d = distance_matrix(g);
        std::vector<int> first;
        for (int j = 0; j < g.order(); ++j) first.push_back(d.at(0, j));
        std::sort(first.begin(), first.end());
        for (int i = 1; i < g.order(); ++i) {
            std::vector<int> row;
            for (int j = 0; j < g.order(); ++j) row.push_back(d.at(i, j));
            std::sort(row.begin(), row.end());
            CHECK(row == first);
        }
    }
}

#ifndef SRGDIST_GRAPH_HPP
#define SRGDIST_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srgdist/errors.hpp"

namespace srg {

using Edge = std::pair<int, int>;

/// Strongly regular parameter tuple (n, d, a, c): a d-regular graph of
/// order n where adjacent pairs have exactly a common neighbours and
/// nonadjacent pairs exactly c.
struct SrgParams {
    int n = 0;
    int d = 0;
    int a = 0;
    int c = 0;

    /// Throws BadParamsError unless 0 < d < n, a <= d-1, c <= d and the
    /// counting identity d(d-a-1) = (n-1-d)c holds.
    void validate() const;

    bool operator==(const SrgParams&) const = default;
    std::string to_string() const;
};

/// Finite simple undirected graph. Immutable after construction; neighbour
/// lists are kept sorted so adjacency tests and graph equality are canonical.
class Graph {
  public:
    /// Builds a graph on `order` vertices from an edge list. Duplicate edges
    /// are merged. Throws SelfLoopError on u == v, OutOfRangeError on an
    /// endpoint outside [0, order), BadParamsError on order < 1.
    Graph(int order, const std::vector<Edge>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;
    long long edge_count() const;

    /// Canonical edge list, each edge as (u, v) with u < v, lexicographic.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

  private:
    std::vector<std::vector<int>> adj_;
};

/// All-pairs shortest-path distances (unit = edges). Entries are small
/// nonnegative integers; zero diagonal, symmetric.
class DistanceMatrix {
  public:
    DistanceMatrix(int order, std::vector<int> entries);

    int order() const { return order_; }
    int at(int u, int v) const { return d_[static_cast<size_t>(u) * order_ + v]; }
    int max_entry() const;
    const std::vector<int>& entries() const { return d_; }

    bool operator==(const DistanceMatrix&) const = default;

  private:
    int order_;
    std::vector<int> d_;
};

/// All-pairs BFS. One search per source vertex; sources run in parallel
/// when OpenMP is enabled and the assembled matrix is identical either way.
/// Throws DisconnectedError if any pair is unreachable.
DistanceMatrix distance_matrix(const Graph& g);

/// Serial reference for distance_matrix, kept for tests and the benchmark.
DistanceMatrix distance_matrix_serial(const Graph& g);

/// Longest shortest path. Throws DisconnectedError.
int diameter(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

/// True iff the graph is 2-colourable; fills `side` (0/1 per vertex) when
/// non-null and the graph is bipartite.
bool is_bipartite(const Graph& g, std::vector<int>* side = nullptr);

/// Common degree if the graph is regular.
std::optional<int> regular_degree(const Graph& g);

/// True iff no two distinct vertices have identical neighbour sets.
bool is_irreducible(const Graph& g);

/// True iff the graph contains no 3-clique.
bool is_triangle_free(const Graph& g);

/// Number of common neighbours of u and v.
int common_neighbors(const Graph& g, int u, int v);

/// Returns (n, d, a, c) iff g is connected, non-complete, d-regular and the
/// common-neighbour counts are constant on adjacent pairs and on nonadjacent
/// pairs; absent otherwise.
std::optional<SrgParams> is_strongly_regular(const Graph& g);

/// Bipartite double cover on 2n vertices. Vertex (v, i) is encoded as
/// v + i*n, i in {0, 1}; (v, 0) ~ (w, 1) iff v ~ w. The encoding is fixed so
/// the cover's adjacency matrix is literally [[O, A], [A, O]].
Graph bipartite_double_cover(const Graph& g);

} // namespace srg

#endif

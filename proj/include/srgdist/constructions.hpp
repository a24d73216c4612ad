#ifndef SRGDIST_CONSTRUCTIONS_HPP
#define SRGDIST_CONSTRUCTIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "srgdist/graph.hpp"

namespace srg {

/// Kneser graph K(n, k): vertices are the k-subsets of {1..n} in
/// lexicographic order, edges join disjoint subsets.
Graph kneser(int n, int k);

/// Petersen graph = K(5, 2).
Graph petersen();

/// Clebsch graph: vertices are 4-bit strings, x ~ y iff x XOR y has Hamming
/// weight 1 or equals 1111.
Graph clebsch();

/// Hoffman-Singleton graph, pentagon/pentagram construction: five pentagons
/// P_h (j ~ j+-1 mod 5), five pentagrams Q_i (j ~ j+-2 mod 5), and
/// P_h(j) ~ Q_i(h*i + j mod 5). Self-checks (50,7,0,1) and throws
/// ConstructionInvalidError if the build ever stops satisfying it.
Graph hoffman_singleton();

/// Rook's graph: cells of an m x m grid, adjacent iff same row or column
/// (the line graph of K_{m,m}).
Graph rook(int m);

/// Paley graph on Z_q for prime q = 1 (mod 4): x ~ y iff x - y is a nonzero
/// quadratic residue.
Graph paley(int q);

/// Cayley graph on Z_n x Z_n with connection set
/// {(g,0), (0,g), (g,g) : g != 0}; strongly regular (n^2, 3n-3, n, 6).
Graph cayley_product(int n);

Graph complete_graph(int n);
Graph complete_bipartite(int m);
Graph cycle(int n);

/// Crown graph: K_{n,n} minus a perfect matching, labelled so that it equals
/// bipartite_double_cover(complete_graph(n)) vertex for vertex.
Graph crown(int n);

/// One named builder of the verification catalog.
struct CatalogEntry {
    std::string name;
    std::function<Graph()> build;
    std::optional<SrgParams> expected_srg;
    std::string notes;
};

/// The fixed verification catalog.
const std::vector<CatalogEntry>& catalog();

/// Looks up a catalog entry by name; throws UnknownEntryError.
const CatalogEntry& catalog_entry(const std::string& name);

/// Builds a graph from a CLI-style name: petersen, clebsch,
/// hoffman-singleton, rook:M, paley:Q, cayley:N, kmm:M, cycle:N, crown:N,
/// kneser:N,K. Throws UnknownEntryError / BadParamsError.
Graph build_by_name(const std::string& name);

} // namespace srg

#endif

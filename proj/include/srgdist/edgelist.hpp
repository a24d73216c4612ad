#ifndef SRGDIST_EDGELIST_HPP
#define SRGDIST_EDGELIST_HPP

#include <iosfwd>
#include <string>

#include "srgdist/graph.hpp"

namespace srg {

enum class GraphFormat { EdgeList, Json };

/// Edge-list text format: first line "n m", then m lines "u v" (0-based,
/// whitespace-separated). Output is canonical: u < v, lexicographic order.
/// import(export(g)) == g.
void export_graph(const Graph& g, std::ostream& out, GraphFormat format);
void export_graph(const Graph& g, const std::string& path, GraphFormat format);

/// Parses the edge-list text format. Throws ParseError with a line number on
/// malformed lines or an edge-count mismatch, IoError on unreadable files.
Graph import_graph(std::istream& in);
Graph import_graph(const std::string& path);

} // namespace srg

#endif

#include "srgdist/graph.hpp"

#include <algorithm>
#include <queue>

namespace srg {

void SrgParams::validate() const {
    if (!(0 < d && d < n))
        throw BadParamsError("srg params: need 0 < d < n, got " + to_string());
    if (a > d - 1)
        throw BadParamsError("srg params: need a <= d-1, got " + to_string());
    if (a < 0 || c < 0)
        throw BadParamsError("srg params: negative count in " + to_string());
    if (c > d)
        throw BadParamsError("srg params: need c <= d, got " + to_string());
    // counting identity over pairs through a fixed vertex
    long long lhs = static_cast<long long>(d) * (d - a - 1);
    long long rhs = static_cast<long long>(n - 1 - d) * c;
    if (lhs != rhs)
        throw BadParamsError("srg params: d(d-a-1) != (n-1-d)c for " + to_string());
}

std::string SrgParams::to_string() const {
    return "(" + std::to_string(n) + "," + std::to_string(d) + "," +
           std::to_string(a) + "," + std::to_string(c) + ")";
}

Graph::Graph(int order, const std::vector<Edge>& edges) {
    if (order < 1)
        throw BadParamsError("graph order must be positive");
    adj_.resize(static_cast<size_t>(order));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= order || v < 0 || v >= order)
            throw OutOfRangeError("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw SelfLoopError("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= order())
        throw OutOfRangeError("vertex out of range: " + std::to_string(v));
    return adj_[static_cast<size_t>(v)];
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = neighbors(u);
    if (v < 0 || v >= order())
        throw OutOfRangeError("vertex out of range: " + std::to_string(v));
    return std::binary_search(nb.begin(), nb.end(), v);
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (const auto& nb : adj_) twice += static_cast<long long>(nb.size());
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

DistanceMatrix::DistanceMatrix(int order, std::vector<int> entries)
    : order_(order), d_(std::move(entries)) {
    if (order_ < 1 || d_.size() != static_cast<size_t>(order_) * order_)
        throw BadParamsError("distance matrix shape mismatch");
}

int DistanceMatrix::max_entry() const {
    return *std::max_element(d_.begin(), d_.end());
}

namespace {

// Fills row[] with BFS distances from src; returns false if some vertex is
// unreachable.
bool bfs_row(const Graph& g, int src, int* row) {
    const int n = g.order();
    std::fill(row, row + n, -1);
    row[src] = 0;
    std::vector<int> queue;
    queue.reserve(static_cast<size_t>(n));
    queue.push_back(src);
    size_t head = 0;
    int seen = 1;
    while (head < queue.size()) {
        int u = queue[head++];
        for (int w : g.neighbors(u)) {
            if (row[w] < 0) {
                row[w] = row[u] + 1;
                queue.push_back(w);
                ++seen;
            }
        }
    }
    return seen == n;
}

} // namespace

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.order();
    std::vector<int> d(static_cast<size_t>(n) * n);
    bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
    for (int src = 0; src < n; ++src) {
        ok = bfs_row(g, src, d.data() + static_cast<size_t>(src) * n) && ok;
    }
    if (!ok) throw DisconnectedError("graph is disconnected");
    return DistanceMatrix(n, std::move(d));
}

DistanceMatrix distance_matrix_serial(const Graph& g) {
    const int n = g.order();
    std::vector<int> d(static_cast<size_t>(n) * n);
    for (int src = 0; src < n; ++src) {
        if (!bfs_row(g, src, d.data() + static_cast<size_t>(src) * n))
            throw DisconnectedError("graph is disconnected");
    }
    return DistanceMatrix(n, std::move(d));
}

int diameter(const Graph& g) {
    return distance_matrix(g).max_entry();
}

bool is_connected(const Graph& g) {
    std::vector<int> row(static_cast<size_t>(g.order()));
    return bfs_row(g, 0, row.data());
}

int component_count(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        ++count;
        std::vector<int> stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

bool is_bipartite(const Graph& g, std::vector<int>* side) {
    const int n = g.order();
    std::vector<int> color(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] >= 0) continue;
        color[static_cast<size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (color[static_cast<size_t>(w)] < 0) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(u)];
                    stack.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    if (side) *side = std::move(color);
    return true;
}

std::optional<int> regular_degree(const Graph& g) {
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

bool is_irreducible(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.neighbors(u) == g.neighbors(v)) return false;
    return true;
}

bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            if (common_neighbors(g, u, v) > 0) return false;
        }
    return true;
}

int common_neighbors(const Graph& g, int u, int v) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    int count = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

std::optional<SrgParams> is_strongly_regular(const Graph& g) {
    const int n = g.order();
    if (n < 2 || !is_connected(g)) return std::nullopt;
    auto deg = regular_degree(g);
    if (!deg) return std::nullopt;
    const int d = *deg;
    if (d == n - 1) return std::nullopt; // complete
    int a = -1, c = -1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int common = common_neighbors(g, u, v);
            if (g.adjacent(u, v)) {
                if (a < 0) a = common;
                else if (a != common) return std::nullopt;
            } else {
                if (c < 0) c = common;
                else if (c != common) return std::nullopt;
            }
        }
    }
    // connected and non-complete, so both pair kinds occur
    SrgParams p{n, d, a, c};
    p.validate();
    return p;
}

Graph bipartite_double_cover(const Graph& g) {
    const int n = g.order();
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(2 * g.edge_count()));
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            edges.emplace_back(u, v + n); // (u,0) ~ (v,1), both directions covered
    return Graph(2 * n, edges);
}

} // namespace srg

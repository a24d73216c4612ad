#include "srgdist/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace srg {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
    }
    return r;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

bool disjoint_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else return false;
    }
    return true;
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int p = 2; static_cast<long long>(p) * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

} // namespace

Graph kneser(int n, int k) {
    if (k < 1 || k > n - 1)
        throw BadParamsError("kneser: need 1 <= k <= n-1");
    if (n > 25 || binomial(n, k) > 200000)
        throw BadParamsError("kneser: parameters too large for in-memory build");
    auto verts = k_subsets(n, k);
    const int m = static_cast<int>(verts.size());
    std::vector<Edge> edges;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            if (disjoint_sorted(verts[static_cast<size_t>(u)], verts[static_cast<size_t>(v)]))
                edges.emplace_back(u, v);
    return Graph(m, edges);
}

Graph petersen() { return kneser(5, 2); }

Graph clebsch() {
    std::vector<Edge> edges;
    for (int x = 0; x < 16; ++x)
        for (int y = x + 1; y < 16; ++y) {
            int w = std::popcount(static_cast<unsigned>(x ^ y));
            if (w == 1 || (x ^ y) == 0xF) edges.emplace_back(x, y);
        }
    return Graph(16, edges);
}

Graph hoffman_singleton() {
    // pentagon P_h(j) = 5h + j, pentagram Q_i(j) = 25 + 5i + j
    std::vector<Edge> edges;
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j)
            edges.emplace_back(5 * h + j, 5 * h + (j + 1) % 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            edges.emplace_back(25 + 5 * i + j, 25 + 5 * i + (j + 2) % 5);
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                edges.emplace_back(5 * h + j, 25 + 5 * i + (h * i + j) % 5);
    Graph g(50, edges);
    auto p = is_strongly_regular(g);
    if (!p || !(*p == SrgParams{50, 7, 0, 1}))
        throw ConstructionInvalidError("hoffman_singleton failed its (50,7,0,1) self-check");
    return g;
}

Graph rook(int m) {
    if (m < 2) throw BadParamsError("rook: need m >= 2");
    auto id = [m](int i, int j) { return i * m + j; };
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            for (int j2 = j + 1; j2 < m; ++j2) edges.emplace_back(id(i, j), id(i, j2));
            for (int i2 = i + 1; i2 < m; ++i2) edges.emplace_back(id(i, j), id(i2, j));
        }
    return Graph(m * m, edges);
}

Graph paley(int q) {
    if (!is_prime(q) || q % 4 != 1)
        throw BadParamsError("paley: need a prime q = 1 (mod 4)");
    std::vector<char> residue(static_cast<size_t>(q), 0);
    for (int x = 1; x < q; ++x)
        residue[static_cast<size_t>((static_cast<long long>(x) * x) % q)] = 1;
    std::vector<Edge> edges;
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y)
            if (residue[static_cast<size_t>((y - x) % q)]) edges.emplace_back(x, y);
    return Graph(q, edges);
}

Graph cayley_product(int n) {
    if (n < 4) throw BadParamsError("cayley: need n >= 4");
    auto id = [n](int x, int y) { return x * n + y; };
    std::vector<Edge> edges;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int g = 1; g < n; ++g) {
                edges.emplace_back(id(x, y), id((x + g) % n, y));
                edges.emplace_back(id(x, y), id(x, (y + g) % n));
                edges.emplace_back(id(x, y), id((x + g) % n, (y + g) % n));
            }
    return Graph(n * n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw BadParamsError("complete graph: need n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph complete_bipartite(int m) {
    if (m < 2) throw BadParamsError("kmm: need m >= 2");
    std::vector<Edge> edges;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) edges.emplace_back(u, m + v);
    return Graph(2 * m, edges);
}

Graph cycle(int n) {
    if (n < 3) throw BadParamsError("cycle: need n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph crown(int n) {
    if (n < 3) throw BadParamsError("crown: need n >= 3");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) edges.emplace_back(u, n + v);
    return Graph(2 * n, edges);
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"petersen", [] { return petersen(); }, SrgParams{10, 3, 0, 1}, ""},
        {"clebsch", [] { return clebsch(); }, SrgParams{16, 5, 0, 2},
         "cover is the 5-dimensional hypercube"},
        {"hoffman-singleton", [] { return hoffman_singleton(); }, SrgParams{50, 7, 0, 1}, ""},
        {"rook:5", [] { return rook(5); }, SrgParams{25, 8, 3, 2},
         "published cover spectrum lists (-8)^16; multiplicities must sum to 2n, "
         "exact verification gives (-8)^8"},
        {"paley:13", [] { return paley(13); }, SrgParams{13, 6, 2, 3},
         "conference parameters: irrational eigenvalue pair, delta = 13"},
        {"cayley:4", [] { return cayley_product(4); }, SrgParams{16, 9, 4, 6},
         "published multiplicity formulas (n^2-n)/2 and (n^2+n-2)/2 fail the trace "
         "identity; exact values are 3(n-1) and (n-1)(n-2); only the cyclic group "
         "is built, the group-generic claim stays untested"},
        {"cayley:5", [] { return cayley_product(5); }, SrgParams{25, 12, 5, 6},
         "published multiplicity formulas (n^2-n)/2 and (n^2+n-2)/2 fail the trace "
         "identity; exact values are 3(n-1) and (n-1)(n-2); only the cyclic group "
         "is built, the group-generic claim stays untested"},
        {"kmm:3", [] { return complete_bipartite(3); }, SrgParams{6, 3, 0, 3},
         "reducible triangle-free case: the cover is disconnected"},
        {"cycle:5", [] { return cycle(5); }, SrgParams{5, 2, 0, 1},
         "smallest conference parameters; cover is the 10-cycle"},
        {"crown:5", [] { return crown(5); }, std::nullopt,
         "not strongly regular; checked as the labelled double cover of K_5"},
    };
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw UnknownEntryError("unknown catalog entry: " + name);
}

Graph build_by_name(const std::string& name) {
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
    auto want_int = [&](const std::string& s) {
        try {
            size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw BadParamsError("bad numeric argument in name: " + name);
        }
    };
    if (head == "petersen" && arg.empty()) return petersen();
    if (head == "clebsch" && arg.empty()) return clebsch();
    if (head == "hoffman-singleton" && arg.empty()) return hoffman_singleton();
    if (head == "rook") return rook(want_int(arg));
    if (head == "paley") return paley(want_int(arg));
    if (head == "cayley") return cayley_product(want_int(arg));
    if (head == "kmm") return complete_bipartite(want_int(arg));
    if (head == "cycle") return cycle(want_int(arg));
    if (head == "crown") return crown(want_int(arg));
    if (head == "kneser") {
        auto comma = arg.find(',');
        if (comma == std::string::npos)
            throw BadParamsError("kneser needs two arguments: kneser:N,K");
        return kneser(want_int(arg.substr(0, comma)), want_int(arg.substr(comma + 1)));
    }
    throw UnknownEntryError("unknown graph name: " + name);
}

} // namespace srg
